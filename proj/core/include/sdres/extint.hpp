#ifndef SDRES_EXTINT_HPP
#define SDRES_EXTINT_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace sdres {

// Element of N ∪ {-inf} with saturating addition: -inf is a distinct
// sentinel, never a large negative integer.
class ExtInt {
public:
  constexpr ExtInt() : finite_(false), v_(0) {}
  constexpr ExtInt(long v) : finite_(true), v_(v) {}

  static constexpr ExtInt neg_inf() { return ExtInt(); }

  constexpr bool finite() const { return finite_; }
  long value() const
  {
    if (!finite_)
      throw std::logic_error("value() on -inf");
    return v_;
  }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b)
  {
    if (!a.finite_ || !b.finite_)
      return neg_inf();
    return ExtInt(a.v_ + b.v_);
  }
  friend constexpr ExtInt operator-(ExtInt a, long b)
  {
    if (!a.finite_)
      return neg_inf();
    return ExtInt(a.v_ - b);
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b)
  {
    if (a.finite_ != b.finite_)
      return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b)
  {
    if (!a.finite_)
      return b.finite_;
    if (!b.finite_)
      return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

  std::string str() const { return finite_ ? std::to_string(v_) : std::string("-inf"); }

private:
  bool finite_;
  long v_;
};

inline ExtInt ext_max(ExtInt a, ExtInt b) { return a < b ? b : a; }
inline ExtInt ext_min(ExtInt a, ExtInt b) { return a < b ? a : b; }

}  // namespace sdres

#endif
