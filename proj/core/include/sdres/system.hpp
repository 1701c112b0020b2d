#ifndef SDRES_SYSTEM_HPP
#define SDRES_SYSTEM_HPP

#include <sdres/diffpoly.hpp>

#include <algorithm>
#include <memory>
#include <vector>

namespace sdres {

// Generic Laurent difference system: n+1 polynomials
// P_i = sum_k u_{ik} M_{ik} over a shared variable table, with M_{i0}
// the designated denominator monomial of each block.
class GenericSystem {
public:
  GenericSystem(std::shared_ptr<VarTable> table,
                std::vector<std::vector<LaurentMonomial>> supports);

  const VarTable& table() const { return *table_; }
  std::shared_ptr<VarTable> table_ptr() const { return table_; }

  int n() const { return table_->main_count(); }
  int poly_count() const { return static_cast<int>(supports_.size()); }
  int block_size(int i) const { return static_cast<int>(supports_.at(i).size()); }  // l_i + 1

  const std::vector<LaurentMonomial>& support(int i) const { return supports_.at(i); }
  const DiffPoly& poly(int i) const { return polys_.at(i); }

  // norm(P_i) = sum_k u_{ik} N_{ik}; slot monomials N_{ik} share the
  // clearing monomial of P_i's main-var part
  const DiffPoly& norm_poly(int i) const { return norm_polys_.at(i); }
  const LaurentMonomial& norm_slot_monomial(int i, int k) const
  {
    return norm_slots_.at(i).at(k);
  }

  // slot index with minimal-degree N_{ik}, ties to the lowest slot
  int min_degree_slot(int i) const { return min_slot_.at(i); }

  // m_i = deg(norm(P_i), Y): main-var degree, the u's do not count
  long norm_degree(int i) const
  {
    long d = 0;
    for (const auto& m : norm_slots_.at(i))
      d = std::max(d, m.total_degree());
    return d;
  }
  ExtInt norm_order(int i) const;  // s_i

private:
  void validate() const;

  std::shared_ptr<VarTable> table_;
  std::vector<std::vector<LaurentMonomial>> supports_;
  std::vector<DiffPoly> polys_;
  std::vector<DiffPoly> norm_polys_;
  std::vector<std::vector<LaurentMonomial>> norm_slots_;
  std::vector<int> min_slot_;
};

}  // namespace sdres

#endif
