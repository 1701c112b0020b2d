#ifndef SDRES_UPOLY_HPP
#define SDRES_UPOLY_HPP

#include <sdres/rat.hpp>

#include <string>
#include <vector>

namespace sdres {

// Univariate polynomial over Q in the shift-encoding indeterminate x,
// dense coefficient vector, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(Rat c)
  {
    if (sgn(c) != 0)
      c_.push_back(std::move(c));
  }

  static UPoly x_power(int k, Rat c = Rat(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rat& c) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q*d + r with deg r < deg d
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;

  Rat eval(const Rat& x) const;
  std::string str() const;

  static UPoly from_coeffs(std::vector<Rat> cs);

private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace sdres

#endif
