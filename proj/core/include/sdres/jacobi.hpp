#ifndef SDRES_JACOBI_HPP
#define SDRES_JACOBI_HPP

#include <sdres/support.hpp>
#include <sdres/system.hpp>

#include <vector>

namespace sdres {

// matrix over N ∪ {-inf}
struct JacobiInput {
  std::vector<std::vector<ExtInt>> entries;
  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries.front().size()); }
};

// maximal diagonal sum over k x k submatrices, k = min(rows, cols);
// exhaustive permutation search for k <= 8, max-weight assignment with
// forbidden edges beyond
ExtInt jacobi_number(const JacobiInput& a);

// assignment-based evaluation regardless of size (exposed for the
// brute-force agreement property)
ExtInt jacobi_number_assignment(const JacobiInput& a);

// (n+1) x n matrix s_ij = ord(norm(P_i), y_j)
JacobiInput order_matrix(const GenericSystem& sys);

JacobiInput delete_row(const JacobiInput& a, int i);

struct BoundReport {
  std::vector<int> super_essential;       // T
  std::vector<ExtInt> jacobi;             // J_i, all i
  std::vector<ExtInt> modified;           // J_i - gamma_low
  std::vector<ExtInt> subsystem;          // Jac((A_T)_i^), -inf outside T
  std::vector<ExtInt> s_low;              // s_i underbar for i in T, -inf outside
  long s_low_sum = 0;                     // s underbar
  long m_max = 0;                         // m = max s_i underbar over T
  std::vector<ExtInt> eord_bound;         // J~_i = J_i - s + s_i, -inf outside T
  std::vector<ExtInt> order_bound_eord;   // J__i = J_i - s + m, -inf outside T
  long gamma_low = 0;                     // sum of o_j underbar
  std::vector<ExtInt> final_bound;        // min of the applicable bounds
  std::vector<bool> clamped;              // final bound clamped at 0
};

// requires a Laurent transformally essential system
BoundReport search_bounds(const GenericSystem& sys);

// sum k_i >= sum_j max_i (s_ij + k_i), -inf entries skipped, empty
// column max contributes 0
bool constraint_holds(const GenericSystem& sys, const std::vector<long>& k);

}  // namespace sdres

#endif
