#ifndef SDRES_LINALG_HPP
#define SDRES_LINALG_HPP

#include <sdres/rat.hpp>

#include <optional>
#include <set>
#include <vector>

namespace sdres {

// Sparse exact-rational matrix in coordinate form, no duplicate
// coordinates, no stored zeros.
class SparseMatrixQ {
public:
  SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols), row_data_(static_cast<std::size_t>(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rat& v);
  const std::vector<std::pair<int, Rat>>& row(int r) const
  {
    return row_data_[static_cast<std::size_t>(r)];
  }
  std::size_t nonzeros() const;

private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rat>>> row_data_;  // sorted by column
};

// rank over Q, fraction-free elimination with content stripping;
// deterministic pivoting (fewest nonzeros, then lowest row index)
int rank_q(const SparseMatrixQ& m);

// basis of {v : Mv = 0} in reduced echelon parametrization, ordered by
// free-column index, free coordinate normalized to 1
std::vector<std::vector<Rat>> nullspace_q(const SparseMatrixQ& m);

// nullity of M modulo a machine prime; never smaller than the exact
// nullity, so a zero answer certifies a trivial exact nullspace
int nullity_mod_p(const SparseMatrixQ& m, std::uint64_t p = 2147483629ULL);

// first nullspace vector (fixed ordering) with a nonzero restriction to
// the target columns, else the basis sum if that works, else nullopt
std::optional<std::vector<Rat>> solve_for_nonzero_projection(const SparseMatrixQ& m,
                                                             const std::set<int>& target);

}  // namespace sdres

#endif
