#include <sdres/linalg.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sdres {

void SparseMatrixQ::add(int r, int c, const Rat& v)
{
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix coordinate");
  if (sgn(v) == 0)
    return;
  auto& row = row_data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int key) { return p.first < key; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (sgn(it->second) == 0)
      row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

std::size_t SparseMatrixQ::nonzeros() const
{
  std::size_t n = 0;
  for (const auto& r : row_data_)
    n += r.size();
  return n;
}

namespace {

// dense integer rows scaled from the rational input, content-stripped
struct IntRows {
  std::vector<std::vector<Int>> rows;
  int cols = 0;
};

IntRows to_integer_rows(const SparseMatrixQ& m)
{
  IntRows out;
  out.cols = m.cols();
  out.rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty())
      continue;
    Int den(1);
    for (const auto& [c, v] : row)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> dense(static_cast<std::size_t>(m.cols()), Int(0));
    Int content(0);
    for (const auto& [c, v] : row) {
      Int x = v.get_num() * (den / v.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      dense[static_cast<std::size_t>(c)] = std::move(x);
    }
    if (content > 1)
      for (auto& x : dense)
        x /= content;
    out.rows.push_back(std::move(dense));
  }
  return out;
}

void strip_content(std::vector<Int>& row)
{
  Int g(0);
  for (const auto& x : row) {
    if (sgn(x) != 0)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      return;
  }
  if (g > 1)
    for (auto& x : row)
      x /= g;
}

int count_nonzeros(const std::vector<Int>& row)
{
  int n = 0;
  for (const auto& x : row)
    if (sgn(x) != 0)
      ++n;
  return n;
}

}  // namespace

int rank_q(const SparseMatrixQ& m)
{
  IntRows a = to_integer_rows(m);
  int rank = 0;
  std::vector<bool> used(a.rows.size(), false);
  for (int col = 0; col < a.cols; ++col) {
    // pivot: unused row with nonzero in this column and fewest nonzeros
    int pivot = -1, best = -1;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (used[i] || sgn(a.rows[i][static_cast<std::size_t>(col)]) == 0)
        continue;
      int nz = count_nonzeros(a.rows[i]);
      if (pivot < 0 || nz < best) {
        pivot = static_cast<int>(i);
        best = nz;
      }
    }
    if (pivot < 0)
      continue;
    used[static_cast<std::size_t>(pivot)] = true;
    ++rank;
    const Int& pv = a.rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)];
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (used[i] || sgn(a.rows[i][static_cast<std::size_t>(col)]) == 0)
        continue;
      const Int f = a.rows[i][static_cast<std::size_t>(col)];
      for (int j = 0; j < a.cols; ++j) {
        a.rows[i][static_cast<std::size_t>(j)] =
            a.rows[i][static_cast<std::size_t>(j)] * pv -
            a.rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(j)] * f;
      }
      strip_content(a.rows[i]);
    }
  }
  return rank;
}

namespace {

// reduced row echelon form over Q; returns pivot column per pivot row
struct Rref {
  std::vector<std::vector<Rat>> rows;  // only pivot rows, reduced
  std::vector<int> pivot_col;
};

Rref rref(const SparseMatrixQ& m)
{
  IntRows a = to_integer_rows(m);
  std::vector<bool> used(a.rows.size(), false);
  std::vector<std::pair<int, int>> pivots;  // (column, row)
  for (int col = 0; col < a.cols; ++col) {
    int pivot = -1, best = -1;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (used[i] || sgn(a.rows[i][static_cast<std::size_t>(col)]) == 0)
        continue;
      int nz = count_nonzeros(a.rows[i]);
      if (pivot < 0 || nz < best) {
        pivot = static_cast<int>(i);
        best = nz;
      }
    }
    if (pivot < 0)
      continue;
    used[static_cast<std::size_t>(pivot)] = true;
    const Int pv = a.rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)];
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      if (i == static_cast<std::size_t>(pivot) ||
          sgn(a.rows[i][static_cast<std::size_t>(col)]) == 0)
        continue;
      const Int f = a.rows[i][static_cast<std::size_t>(col)];
      for (int j = 0; j < a.cols; ++j)
        a.rows[i][static_cast<std::size_t>(j)] =
            a.rows[i][static_cast<std::size_t>(j)] * pv -
            a.rows[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(j)] * f;
      strip_content(a.rows[i]);
    }
    pivots.push_back({col, pivot});
  }
  // extract the fully reduced pivot rows from the final state: pivot rows
  // keep a single nonzero among all pivot columns
  Rref out;
  for (const auto& [col, row] : pivots) {
    const Int& pv = a.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    std::vector<Rat> prow(static_cast<std::size_t>(a.cols));
    for (int j = 0; j < a.cols; ++j) {
      Rat v(a.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)], pv);
      v.canonicalize();
      prow[static_cast<std::size_t>(j)] = std::move(v);
    }
    out.pivot_col.push_back(col);
    out.rows.push_back(std::move(prow));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> nullspace_q(const SparseMatrixQ& m)
{
  Rref r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : r.pivot_col)
    is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)])
      continue;
    std::vector<Rat> v(static_cast<std::size_t>(m.cols()), Rat(0));
    v[static_cast<std::size_t>(free)] = Rat(1);
    for (std::size_t pr = 0; pr < r.rows.size(); ++pr) {
      const Rat& coef = r.rows[pr][static_cast<std::size_t>(free)];
      if (sgn(coef) != 0)
        v[static_cast<std::size_t>(r.pivot_col[pr])] = -coef;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int nullity_mod_p(const SparseMatrixQ& m, std::uint64_t p)
{
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty())
      continue;
    std::vector<std::uint64_t> dense(static_cast<std::size_t>(m.cols()), 0);
    bool all_zero = true;
    for (const auto& [c, v] : row) {
      Int num = v.get_num() % Int(static_cast<unsigned long>(p));
      Int den = v.get_den() % Int(static_cast<unsigned long>(p));
      if (sgn(den) == 0)
        throw std::domain_error("denominator divisible by the screening prime");
      std::uint64_t nu = mpz_get_ui(Int(num >= 0 ? num : num + Int(static_cast<unsigned long>(p))).get_mpz_t());
      std::uint64_t de = mpz_get_ui(den.get_mpz_t());
      // modular inverse by Fermat (p prime)
      std::uint64_t inv = 1, base = de, e = p - 2;
      while (e) {
        if (e & 1)
          inv = static_cast<unsigned __int128>(inv) * base % p;
        base = static_cast<unsigned __int128>(base) * base % p;
        e >>= 1;
      }
      std::uint64_t val = static_cast<unsigned __int128>(nu) * inv % p;
      dense[static_cast<std::size_t>(c)] = val;
      if (val)
        all_zero = false;
    }
    if (!all_zero)
      a.push_back(std::move(dense));
  }
  int cols = m.cols();
  int rank = 0;
  std::size_t rpos = 0;
  for (int col = 0; col < cols && rpos < a.size(); ++col) {
    std::size_t pivot = rpos;
    while (pivot < a.size() && a[pivot][static_cast<std::size_t>(col)] == 0)
      ++pivot;
    if (pivot == a.size())
      continue;
    std::swap(a[rpos], a[pivot]);
    std::uint64_t pv = a[rpos][static_cast<std::size_t>(col)];
    std::uint64_t inv = 1, base = pv, e = p - 2;
    while (e) {
      if (e & 1)
        inv = static_cast<unsigned __int128>(inv) * base % p;
      base = static_cast<unsigned __int128>(base) * base % p;
      e >>= 1;
    }
    for (std::size_t i = rpos + 1; i < a.size(); ++i) {
      std::uint64_t f = a[i][static_cast<std::size_t>(col)];
      if (!f)
        continue;
      std::uint64_t fi = static_cast<unsigned __int128>(f) * inv % p;
      for (int j = col; j < cols; ++j) {
        std::uint64_t sub = static_cast<unsigned __int128>(fi) * a[rpos][static_cast<std::size_t>(j)] % p;
        a[i][static_cast<std::size_t>(j)] = (a[i][static_cast<std::size_t>(j)] + p - sub) % p;
      }
    }
    ++rpos;
    ++rank;
  }
  return cols - rank;
}

std::optional<std::vector<Rat>> solve_for_nonzero_projection(const SparseMatrixQ& m,
                                                             const std::set<int>& target)
{
  if (target.empty())
    throw std::invalid_argument("empty target column set");
  auto basis = nullspace_q(m);
  auto nonzero_on_target = [&](const std::vector<Rat>& v) {
    for (int c : target)
      if (sgn(v[static_cast<std::size_t>(c)]) != 0)
        return true;
    return false;
  };
  for (const auto& v : basis)
    if (nonzero_on_target(v))
      return v;
  if (!basis.empty()) {
    std::vector<Rat> sum(static_cast<std::size_t>(m.cols()), Rat(0));
    for (const auto& v : basis)
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += v[i];
    if (nonzero_on_target(sum))
      return sum;
  }
  return std::nullopt;
}

}  // namespace sdres
