#include <sdres/jacobi.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sdres {

namespace {

// best diagonal sum over permutations of the given square selection
ExtInt best_permutation(const JacobiInput& a, const std::vector<int>& rows,
                        const std::vector<int>& cols)
{
  std::vector<int> perm(cols.begin(), cols.end());
  std::sort(perm.begin(), perm.end());
  ExtInt best = ExtInt::neg_inf();
  do {
    ExtInt sum(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      sum = sum + a.entries[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(perm[i])];
      if (!sum.finite())
        break;
    }
    best = ext_max(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ExtInt jacobi_brute(const JacobiInput& a)
{
  int r = a.rows(), c = a.cols();
  int k = std::min(r, c);
  if (k == 0)
    return ExtInt::neg_inf();
  ExtInt best = ExtInt::neg_inf();
  // choose k rows and k cols, then all permutations
  std::vector<int> rsel(static_cast<std::size_t>(k));
  std::iota(rsel.begin(), rsel.end(), 0);
  auto next_comb = [](std::vector<int>& sel, int n) {
    int k2 = static_cast<int>(sel.size());
    for (int i = k2 - 1; i >= 0; --i) {
      if (sel[static_cast<std::size_t>(i)] < n - k2 + i) {
        ++sel[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k2; ++j)
          sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<int> csel(static_cast<std::size_t>(k));
    std::iota(csel.begin(), csel.end(), 0);
    do {
      best = ext_max(best, best_permutation(a, rsel, csel));
    } while (next_comb(csel, c));
  } while (next_comb(rsel, r));
  return best;
}

}  // namespace

// max-weight matching of cardinality k = min(rows, cols) among the
// finite entries, via successive Bellman-Ford augmentations on the
// residual graph (weights negated to costs)
ExtInt jacobi_number_assignment(const JacobiInput& a)
{
  int r = a.rows(), c = a.cols();
  int k = std::min(r, c);
  if (k == 0)
    return ExtInt::neg_inf();
  const long INF = std::numeric_limits<long>::max() / 4;
  std::vector<int> match_col(static_cast<std::size_t>(c), -1);  // col -> row
  std::vector<int> match_row(static_cast<std::size_t>(r), -1);  // row -> col
  long total = 0;
  for (int step = 0; step < k; ++step) {
    // Bellman-Ford over rows/cols: dist to each column using alternating paths
    std::vector<long> dist_row(static_cast<std::size_t>(r), INF);
    std::vector<long> dist_col(static_cast<std::size_t>(c), INF);
    std::vector<int> parent_col(static_cast<std::size_t>(c), -1);  // col -> row used to reach it
    for (int i = 0; i < r; ++i)
      if (match_row[static_cast<std::size_t>(i)] < 0)
        dist_row[static_cast<std::size_t>(i)] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < r; ++i) {
        if (dist_row[static_cast<std::size_t>(i)] >= INF)
          continue;
        for (int j = 0; j < c; ++j) {
          const ExtInt& w = a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (!w.finite())
            continue;
          if (match_row[static_cast<std::size_t>(i)] == j)
            continue;
          long nd = dist_row[static_cast<std::size_t>(i)] - w.value();
          if (nd < dist_col[static_cast<std::size_t>(j)]) {
            dist_col[static_cast<std::size_t>(j)] = nd;
            parent_col[static_cast<std::size_t>(j)] = i;
            int owner = match_col[static_cast<std::size_t>(j)];
            if (owner >= 0) {
              long back = nd + a.entries[static_cast<std::size_t>(owner)][static_cast<std::size_t>(j)].value();
              if (back < dist_row[static_cast<std::size_t>(owner)]) {
                dist_row[static_cast<std::size_t>(owner)] = back;
                changed = true;
              }
            }
            changed = true;
          }
        }
      }
    }
    // best free column
    int best_col = -1;
    for (int j = 0; j < c; ++j)
      if (match_col[static_cast<std::size_t>(j)] < 0 && dist_col[static_cast<std::size_t>(j)] < INF)
        if (best_col < 0 || dist_col[static_cast<std::size_t>(j)] < dist_col[static_cast<std::size_t>(best_col)])
          best_col = j;
    if (best_col < 0)
      return ExtInt::neg_inf();  // no k-matching over finite entries
    total += -dist_col[static_cast<std::size_t>(best_col)];
    for (int j = best_col; j >= 0;) {
      int i = parent_col[static_cast<std::size_t>(j)];
      int pj = match_row[static_cast<std::size_t>(i)];
      match_col[static_cast<std::size_t>(j)] = i;
      match_row[static_cast<std::size_t>(i)] = j;
      j = pj;
    }
  }
  return ExtInt(total);
}

ExtInt jacobi_number(const JacobiInput& a)
{
  int k = std::min(a.rows(), a.cols());
  if (k <= 8 && std::max(a.rows(), a.cols()) <= 10)
    return jacobi_brute(a);
  return jacobi_number_assignment(a);
}

JacobiInput order_matrix(const GenericSystem& sys)
{
  JacobiInput a;
  for (int i = 0; i < sys.poly_count(); ++i) {
    std::vector<ExtInt> row;
    for (int j = 0; j < sys.n(); ++j)
      row.push_back(order_stats(sys.norm_poly(i), j).ord);
    a.entries.push_back(std::move(row));
  }
  return a;
}

JacobiInput delete_row(const JacobiInput& a, int i)
{
  JacobiInput b;
  for (int r = 0; r < a.rows(); ++r)
    if (r != i)
      b.entries.push_back(a.entries[static_cast<std::size_t>(r)]);
  return b;
}

BoundReport search_bounds(const GenericSystem& sys)
{
  if (!is_laurent_transformally_essential(sys))
    throw std::invalid_argument("search bounds require an essential system");
  int np1 = sys.poly_count();
  int n = sys.n();
  BoundReport rep;
  JacobiInput a = order_matrix(sys);

  for (int i = 0; i < np1; ++i)
    rep.jacobi.push_back(jacobi_number(delete_row(a, i)));

  // gamma underbar: least shifts of each y_j over the whole system
  long gamma = 0;
  for (int j = 0; j < n; ++j) {
    ExtInt oj = ExtInt::neg_inf();
    for (int i = 0; i < np1; ++i) {
      ExtInt l = order_stats(sys.norm_poly(i), j).lord;
      if (l.finite())
        oj = oj.finite() ? ext_min(oj, l) : l;
    }
    if (oj.finite())
      gamma += oj.value();
  }
  rep.gamma_low = gamma;
  for (int i = 0; i < np1; ++i)
    rep.modified.push_back(rep.jacobi[static_cast<std::size_t>(i)] - gamma);

  rep.super_essential = super_essential_subset(sys);
  std::vector<bool> in_t(static_cast<std::size_t>(np1), false);
  for (int i : rep.super_essential)
    in_t[static_cast<std::size_t>(i)] = true;

  JacobiInput at;
  for (int i : rep.super_essential)
    at.entries.push_back(a.entries[static_cast<std::size_t>(i)]);

  rep.subsystem.assign(static_cast<std::size_t>(np1), ExtInt::neg_inf());
  for (std::size_t ti = 0; ti < rep.super_essential.size(); ++ti)
    rep.subsystem[static_cast<std::size_t>(rep.super_essential[ti])] =
        jacobi_number(delete_row(at, static_cast<int>(ti)));

  // effective-order data on the super-essential subsystem
  rep.s_low.assign(static_cast<std::size_t>(np1), ExtInt::neg_inf());
  long s_sum = 0, m_max = 0;
  for (int i : rep.super_essential) {
    ExtInt si = ExtInt::neg_inf();
    for (int j = 0; j < n; ++j) {
      ExtInt l = order_stats(sys.norm_poly(i), j).lord;
      if (l.finite())
        si = si.finite() ? ext_min(si, l) : l;
    }
    rep.s_low[static_cast<std::size_t>(i)] = si;
    if (si.finite()) {
      s_sum += si.value();
      m_max = std::max(m_max, si.value());
    }
  }
  rep.s_low_sum = s_sum;
  rep.m_max = m_max;

  rep.eord_bound.assign(static_cast<std::size_t>(np1), ExtInt::neg_inf());
  rep.order_bound_eord.assign(static_cast<std::size_t>(np1), ExtInt::neg_inf());
  for (int i : rep.super_essential) {
    ExtInt ji = rep.jacobi[static_cast<std::size_t>(i)];
    if (ji.finite()) {
      long s_i = rep.s_low[static_cast<std::size_t>(i)].finite()
                     ? rep.s_low[static_cast<std::size_t>(i)].value()
                     : 0;
      rep.eord_bound[static_cast<std::size_t>(i)] = ExtInt(ji.value() - s_sum + s_i);
      rep.order_bound_eord[static_cast<std::size_t>(i)] = ExtInt(ji.value() - s_sum + m_max);
    }
  }

  rep.final_bound.assign(static_cast<std::size_t>(np1), ExtInt::neg_inf());
  rep.clamped.assign(static_cast<std::size_t>(np1), false);
  for (int i : rep.super_essential) {
    ExtInt b = rep.jacobi[static_cast<std::size_t>(i)];
    if (!b.finite()) {
      continue;  // cannot happen for super-essential members
    }
    b = ext_min(b, rep.modified[static_cast<std::size_t>(i)]);
    b = ext_min(b, rep.subsystem[static_cast<std::size_t>(i)]);
    b = ext_min(b, rep.order_bound_eord[static_cast<std::size_t>(i)]);
    // u_i occurs in SR for i in T, hence h_i >= 0: clamp instead of
    // guessing the paper's intent for negative modified bounds
    if (b.finite() && b.value() < 0) {
      b = ExtInt(0);
      rep.clamped[static_cast<std::size_t>(i)] = true;
    }
    rep.final_bound[static_cast<std::size_t>(i)] = b;
  }
  return rep;
}

bool constraint_holds(const GenericSystem& sys, const std::vector<long>& k)
{
  if (static_cast<int>(k.size()) != sys.poly_count())
    throw std::invalid_argument("constraint vector length mismatch");
  JacobiInput a = order_matrix(sys);
  long lhs = 0;
  for (long v : k)
    lhs += v;
  long rhs = 0;
  for (int j = 0; j < sys.n(); ++j) {
    bool any = false;
    long colmax = 0;
    for (int i = 0; i < sys.poly_count(); ++i) {
      const ExtInt& s = a.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!s.finite())
        continue;
      long v = s.value() + k[static_cast<std::size_t>(i)];
      if (!any || v > colmax) {
        colmax = v;
        any = true;
      }
    }
    rhs += any ? colmax : 0;
  }
  return lhs >= rhs;
}

}  // namespace sdres
