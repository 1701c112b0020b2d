#ifndef SDRES_SUPPORT_HPP
#define SDRES_SUPPORT_HPP

#include <sdres/system.hpp>
#include <sdres/upoly.hpp>

#include <cstdint>
#include <vector>

namespace sdres {

// length-n vector of univariate polynomials d_j(x) = sum_k d_jk x^k
using SupportVector = std::vector<UPoly>;

struct SymbolicSupportMatrix {
  std::vector<SupportVector> rows;
  int cols = 0;
};

// entry j: sum_k exponent(y_j^(k)) x^k; throws if a coeff var occurs
SupportVector support_vector(const LaurentMonomial& m, const VarTable& table);

// rank over Q(x) via the three elementary transformation types
// (row swap, row update through Euclidean division, column swap),
// pivoting on a minimal-degree nonzero entry.  The literal Euclidean
// route is meant for support matrices (sparse, monomial-like entries);
// dense high-degree inputs can blow up its coefficients.
int rank_qx(const SymbolicSupportMatrix& m);

int dtrdeg_monomials(const std::vector<LaurentMonomial>& mons, const VarTable& table);

// row i: w_i = sum_k u_{ik} beta_{ik}; the u's are per-row independent
// transcendentals
struct GenericRow {
  std::vector<SupportVector> betas;
};

struct GenericSupportMatrix {
  std::vector<GenericRow> rows;
  int cols = 0;
};

struct RankMode {
  bool probabilistic = true;
  int trials = 3;
  std::uint64_t seed = 1;
};

struct RankResult {
  int rank = 0;
  bool exact = false;
  int trials_used = 0;
  // log2 bound on the failure probability of a probabilistic answer
  double failure_log2 = 0.0;
};

RankResult rank_generic(const GenericSupportMatrix& m, const RankMode& mode);

// quotient-support matrix of P_i (i in subset) with rows
// sum_k u_{ik} (supp M_{ik} - supp M_{i0})
GenericSupportMatrix system_support_matrix(const GenericSystem& sys,
                                           const std::vector<int>& subset);

bool is_laurent_transformally_essential(const GenericSystem& sys);

// the unique minimal T with card(T) - rank(M_T) = 1; requires an
// essential system
std::vector<int> super_essential_subset(const GenericSystem& sys);

// rank of M_T for every subset mask over {0..n}; mask bit i = row i
std::vector<int> all_subset_ranks(const GenericSystem& sys);

}  // namespace sdres

#endif
