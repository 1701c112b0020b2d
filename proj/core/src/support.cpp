#include <sdres/support.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdres {

SupportVector support_vector(const LaurentMonomial& m, const VarTable& table)
{
  SupportVector sv(static_cast<std::size_t>(table.main_count()));
  for (const auto& [v, e] : m.exponents()) {
    if (!table.is_main(v.var))
      throw std::invalid_argument("support vector of a monomial with coeff vars");
    sv[static_cast<std::size_t>(v.var)] =
        sv[static_cast<std::size_t>(v.var)] + UPoly::x_power(v.shift, Rat(e));
  }
  return sv;
}

namespace {

int poly_deg(const UPoly& p) { return p.degree(); }

// divide a row by its rational content; rank is invariant under nonzero
// row scaling and this keeps the Euclidean elimination from blowing up
void strip_row(SupportVector& row)
{
  Int num_gcd(0), den_lcm(1);
  for (const auto& p : row)
    for (const auto& c : p.coeffs()) {
      if (sgn(c) == 0)
        continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  if (sgn(num_gcd) == 0)
    return;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1)
    return;
  for (auto& p : row)
    p = p.scaled(scale);
}

}  // namespace

int rank_qx(const SymbolicSupportMatrix& m)
{
  std::vector<SupportVector> a = m.rows;
  for (auto& row : a)
    strip_row(row);
  int rows = static_cast<int>(a.size());
  int cols = m.cols;
  int r = 0;
  while (r < rows && r < cols) {
    // minimal-degree nonzero entry in the remaining block
    int pi = -1, pj = -1, pd = -1;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j) {
        const UPoly& e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (e.is_zero())
          continue;
        if (pd < 0 || poly_deg(e) < pd) {
          pd = poly_deg(e);
          pi = i;
          pj = j;
        }
      }
    if (pd < 0)
      break;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pi)]);  // r[i,j]
    if (pj != r)
      for (auto& row : a)
        std::swap(row[static_cast<std::size_t>(pj)], row[static_cast<std::size_t>(r)]);  // c[i,j]
    // clear the column below the pivot by Euclidean division steps; rows
    // are pre-scaled by the pivot's leading coefficient (a rank-preserving
    // row scaling) so the updates stay fraction-free, and stripped after
    bool again = true;
    while (again) {
      again = false;
      for (int i = r + 1; i < rows; ++i) {
        const UPoly& pivot = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        UPoly e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        if (e.is_zero())
          continue;
        long delta = e.degree() - pivot.degree();
        if (delta >= 0) {
          Rat scale = rat_pow(pivot.coeff(pivot.degree()), delta + 1);
          for (int j = r; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].scaled(scale);
          e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
        }
        UPoly q, rem;
        e.divmod(pivot, q, rem);
        // [i + r(-q)]
        for (int j = r; j < cols; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
              q * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        strip_row(a[static_cast<std::size_t>(i)]);
        if (!rem.is_zero()) {
          std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(i)]);
          again = true;  // pivot degree strictly dropped, re-run the column
        }
      }
    }
    ++r;
  }
  return r;
}

int dtrdeg_monomials(const std::vector<LaurentMonomial>& mons, const VarTable& table)
{
  SymbolicSupportMatrix m;
  m.cols = table.main_count();
  for (const auto& mon : mons)
    m.rows.push_back(support_vector(mon, table));
  return rank_qx(m);
}

namespace {

// specialize the u's to integers drawn from [1, 2^31) and take the
// Q(x)-rank; a specialization never exceeds the generic rank
int specialized_rank(const GenericSupportMatrix& m, Rng& rng)
{
  SymbolicSupportMatrix s;
  s.cols = m.cols;
  for (const auto& row : m.rows) {
    SupportVector acc(static_cast<std::size_t>(m.cols));
    for (const auto& beta : row.betas) {
      Rat u(rng.integer(1, 2147483646L));
      for (int j = 0; j < m.cols; ++j)
        acc[static_cast<std::size_t>(j)] =
            acc[static_cast<std::size_t>(j)] + beta[static_cast<std::size_t>(j)].scaled(u);
    }
    s.rows.push_back(std::move(acc));
  }
  return rank_qx(s);
}

// dim over Q(x) of the span of all betas of the rows in the mask
int span_dim(const GenericSupportMatrix& m, std::uint32_t mask,
             std::vector<int>& memo)
{
  int& slot = memo[mask];
  if (slot >= 0)
    return slot;
  SymbolicSupportMatrix s;
  s.cols = m.cols;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    if (mask & (1u << i))
      for (const auto& beta : m.rows[i].betas)
        s.rows.push_back(beta);
  slot = rank_qx(s);
  return slot;
}

// exact generic rank: min over row subsets S of (m - |S| + dim V_S).
// The upper bound is elementary (rows of S lie in V_S); a random
// specialization attaining it certifies the value.
int exact_generic_rank(const GenericSupportMatrix& m)
{
  int rows = static_cast<int>(m.rows.size());
  if (rows > 20)
    throw std::invalid_argument("exact generic rank: desk-scale row limit exceeded");
  std::vector<int> memo(static_cast<std::size_t>(1) << rows, -1);
  memo[0] = 0;
  int best = rows;  // S empty
  for (std::uint32_t mask = 1; mask < (1u << rows); ++mask) {
    int card = __builtin_popcount(mask);
    int bound = rows - card + span_dim(m, mask, memo);
    best = std::min(best, bound);
  }
  Rng rng(0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < 64; ++t) {
    if (specialized_rank(m, rng) == best)
      return best;
  }
  throw std::runtime_error("generic rank certification did not converge");
}

}  // namespace

RankResult rank_generic(const GenericSupportMatrix& m, const RankMode& mode)
{
  RankResult res;
  if (!mode.probabilistic) {
    res.rank = exact_generic_rank(m);
    res.exact = true;
    return res;
  }
  if (mode.trials < 1)
    throw std::invalid_argument("probabilistic rank needs t >= 1");
  Rng rng(mode.seed);
  int best = 0;
  for (int t = 0; t < mode.trials; ++t)
    best = std::max(best, specialized_rank(m, rng));
  res.rank = best;
  res.trials_used = mode.trials;
  // Schwartz-Zippel: a trial misses the generic rank with probability
  // <= deg(minor)/|range|; minors have total degree <= min(rows, cols).
  double per_trial =
      static_cast<double>(std::min<std::size_t>(m.rows.size(), static_cast<std::size_t>(m.cols))) /
      2147483645.0;
  res.failure_log2 = mode.trials * std::log2(std::max(per_trial, 1e-300));
  return res;
}

GenericSupportMatrix system_support_matrix(const GenericSystem& sys,
                                           const std::vector<int>& subset)
{
  GenericSupportMatrix m;
  m.cols = sys.n();
  for (int i : subset) {
    GenericRow row;
    SupportVector denom = support_vector(sys.support(i)[0], sys.table());
    for (int k = 0; k < sys.block_size(i); ++k) {
      SupportVector beta = support_vector(sys.support(i)[static_cast<std::size_t>(k)], sys.table());
      for (int j = 0; j < m.cols; ++j)
        beta[static_cast<std::size_t>(j)] =
            beta[static_cast<std::size_t>(j)] - denom[static_cast<std::size_t>(j)];
      row.betas.push_back(std::move(beta));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

bool is_laurent_transformally_essential(const GenericSystem& sys)
{
  std::vector<int> all;
  for (int i = 0; i < sys.poly_count(); ++i)
    all.push_back(i);
  GenericSupportMatrix m = system_support_matrix(sys, all);
  RankMode mode;
  mode.probabilistic = false;
  return rank_generic(m, mode).rank == sys.n();
}

std::vector<int> all_subset_ranks(const GenericSystem& sys)
{
  std::vector<int> all;
  for (int i = 0; i < sys.poly_count(); ++i)
    all.push_back(i);
  GenericSupportMatrix m = system_support_matrix(sys, all);
  int rows = static_cast<int>(m.rows.size());
  std::vector<int> dim_memo(static_cast<std::size_t>(1) << rows, -1);
  dim_memo[0] = 0;
  // g(J) = min_{S subseteq J} (dim V_S - |S|), by subset DP
  std::vector<int> g(static_cast<std::size_t>(1) << rows, 0);
  std::vector<int> rank(static_cast<std::size_t>(1) << rows, 0);
  for (std::uint32_t mask = 1; mask < (1u << rows); ++mask) {
    int v = span_dim(m, mask, dim_memo) - __builtin_popcount(mask);
    for (int i = 0; i < rows; ++i)
      if (mask & (1u << i))
        v = std::min(v, g[mask ^ (1u << i)]);
    g[mask] = std::min(v, 0);
    rank[mask] = __builtin_popcount(mask) + g[mask];
  }
  return rank;
}

std::vector<int> super_essential_subset(const GenericSystem& sys)
{
  if (!is_laurent_transformally_essential(sys))
    throw std::invalid_argument("super-essential subset of a non-essential system");
  std::vector<int> ranks = all_subset_ranks(sys);
  int np1 = sys.poly_count();
  // increasing cardinality, then lexicographic on the member list; the
  // first deficiency-1 subset is automatically minimal
  for (int card = 1; card <= np1; ++card) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask < (1u << np1); ++mask)
      if (__builtin_popcount(mask) == card)
        masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [np1](std::uint32_t a, std::uint32_t b) {
      for (int i = 0; i < np1; ++i) {
        bool ia = a & (1u << i), ib = b & (1u << i);
        if (ia != ib)
          return ia;  // containing the smaller index ranks earlier
      }
      return false;
    });
    for (std::uint32_t mask : masks) {
      if (card - ranks[mask] == 1) {
        std::vector<int> t;
        for (int i = 0; i < np1; ++i)
          if (mask & (1u << i))
            t.push_back(i);
        return t;
      }
    }
  }
  throw std::logic_error("no super-essential subset found in an essential system");
}

}  // namespace sdres
