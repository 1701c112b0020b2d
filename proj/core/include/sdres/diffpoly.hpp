#ifndef SDRES_DIFFPOLY_HPP
#define SDRES_DIFFPOLY_HPP

#include <sdres/extint.hpp>
#include <sdres/rat.hpp>
#include <sdres/vartable.hpp>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sdres {

// k-th transform of a table variable
struct SVar {
  int var = 0;
  int shift = 0;
  friend auto operator<=>(const SVar&, const SVar&) = default;
};

// Laurent monomial: sparse exponent map keyed by (var, shift), no zero
// exponents stored.  Negative exponents are legal (the Laurent part);
// callers enforce the main-var-only restriction where it applies.
class LaurentMonomial {
public:
  LaurentMonomial() = default;

  static LaurentMonomial var(SVar v, int e = 1)
  {
    LaurentMonomial m;
    if (e != 0)
      m.exp_.push_back({v, e});
    return m;
  }

  bool is_one() const { return exp_.empty(); }
  const std::vector<std::pair<SVar, int>>& exponents() const { return exp_; }

  int exponent(SVar v) const;
  long total_degree() const;
  long degree_in_var(int var) const;  // sum over shifts
  bool involves(SVar v) const { return exponent(v) != 0; }

  LaurentMonomial mul(const LaurentMonomial& o) const;
  LaurentMonomial inverse() const;
  LaurentMonomial pow(long e) const;
  LaurentMonomial transform(int k) const;

  // graded by total degree, then lexicographic on the canonical
  // (var, shift) key order; returns <0, 0, >0
  static int compare(const LaurentMonomial& a, const LaurentMonomial& b);

  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b)
  {
    return a.exp_ == b.exp_;
  }
  friend bool operator<(const LaurentMonomial& a, const LaurentMonomial& b)
  {
    return compare(a, b) < 0;
  }

  static LaurentMonomial from_pairs(std::vector<std::pair<SVar, int>> pairs);

private:
  std::vector<std::pair<SVar, int>> exp_;  // sorted by SVar
};

struct Term {
  LaurentMonomial mon;
  Rat coeff;
};

// Sparse Laurent difference polynomial over Q.  Terms are kept sorted
// descending under the global monomial order; the zero polynomial is
// the empty list.  Values are immutable once built.
class DiffPoly {
public:
  DiffPoly() = default;

  static DiffPoly zero() { return DiffPoly(); }
  static DiffPoly constant(const Rat& c);
  static DiffPoly monomial(const LaurentMonomial& m, const Rat& c = Rat(1));
  static DiffPoly variable(SVar v) { return monomial(LaurentMonomial::var(v)); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading() const;

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly operator-() const;
  DiffPoly scaled(const Rat& c) const;
  DiffPoly mul_monomial(const LaurentMonomial& m, const Rat& c = Rat(1)) const;
  DiffPoly pow(long e) const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

  // applies sigma^k to every variable occurrence; Q is fixed by sigma
  DiffPoly transform(int k) const;

  long total_degree() const;                 // max over terms, 0 for zero poly
  ExtInt degree_in_svar(SVar v) const;       // max exponent, -inf if absent
  ExtInt degree_in_var(int var) const;       // total degree in all shifts of var

  // occurring shifted variables, canonical order
  std::vector<SVar> variables() const;

  Rat evaluate(const std::map<SVar, Rat>& assignment) const;

  // formal partial derivative with respect to one shifted variable
  DiffPoly partial(SVar v) const;

  // integer coprime coefficients, positive leading coefficient
  DiffPoly normalized() const;

  static DiffPoly from_terms(std::vector<Term> ts);

private:
  std::vector<Term> terms_;
};

struct OrderStats {
  ExtInt ord;
  ExtInt lord;
  ExtInt eord;
};

// max/min shift of var occurring in p (both -inf when absent)
OrderStats order_stats(const DiffPoly& p, int var);

// norm form: minimal monomial M with M*F polynomial in the main vars and
// all main-var monomial content cleared.  Throws on F = 0.
struct NormForm {
  LaurentMonomial clearing;  // M
  DiffPoly poly;             // N = M*F
};
NormForm norm_form(const DiffPoly& f, const VarTable& table);

// Per-shift-layer degrees (m_0, ..., m_R) when p is homogeneous in
// {v^(r) : v in group} for every r; nullopt otherwise.
std::optional<std::vector<long>> transformally_homogeneous_layers(
    const DiffPoly& p, const std::vector<int>& group);

}  // namespace sdres

#endif
