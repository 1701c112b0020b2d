#include <sdres/algebraic.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sdres {

namespace {

std::string svar_name(const VarTable& table, SVar v)
{
  std::string s = table.info(v.var).name;
  if (v.shift > 0)
    s += "@" + std::to_string(v.shift);
  return s;
}

// specialized rank of the symbolic support rows of a subset, one trial
int specialized_rank(const AlgPolySystem& sys, const std::vector<int>& subset, Rng& rng)
{
  SparseMatrixQ m(static_cast<int>(subset.size()), std::max(sys.nvars, 1));
  for (std::size_t r = 0; r < subset.size(); ++r) {
    const AlgPoly& p = sys.polys[static_cast<std::size_t>(subset[r])];
    std::map<int, Rat> acc;
    for (std::size_t k = 1; k < p.slots.size(); ++k) {
      Rat u(rng.integer(1, 2147483646L));
      for (int j = 0; j < sys.nvars; ++j)
        if (p.slots[k].point[static_cast<std::size_t>(j)] != 0)
          acc[j] += u * Rat(p.slots[k].point[static_cast<std::size_t>(j)]);
    }
    for (const auto& [j, v] : acc)
      m.add(static_cast<int>(r), j, v);
  }
  return rank_q(m);
}

// integer rank of the stacked support points of the subset
int point_span_rank(const AlgPolySystem& sys, const std::vector<int>& subset)
{
  std::vector<std::vector<long>> pts;
  for (int r : subset) {
    const AlgPoly& p = sys.polys[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < p.slots.size(); ++k)
      pts.push_back(p.slots[k].point);
  }
  SparseMatrixQ m(static_cast<int>(pts.size()), std::max(sys.nvars, 1));
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (int j = 0; j < sys.nvars; ++j)
      if (pts[r][static_cast<std::size_t>(j)] != 0)
        m.add(static_cast<int>(r), j, Rat(pts[r][static_cast<std::size_t>(j)]));
  return rank_q(m);
}

// true (certified) when the subset's generic rank equals its cardinality
bool certified_independent(const AlgPolySystem& sys, const std::vector<int>& subset, Rng& rng,
                           int trials = 4)
{
  for (int t = 0; t < trials; ++t)
    if (specialized_rank(sys, subset, rng) == static_cast<int>(subset.size()))
      return true;
  return false;
}

}  // namespace

AlgPolySystem algebraic_from_prolongation(const GenericSystem& sys, const Prolongation& pro)
{
  AlgPolySystem out;
  out.table = sys.table_ptr();
  std::map<SVar, int> coord_of;
  // pass 1: coordinates (quotient supports by the designated slot 0)
  for (std::size_t p = 0; p < pro.polys.size(); ++p) {
    int i = pro.blocks[p];
    int l = pro.shifts[p];
    LaurentMonomial denom = sys.norm_slot_monomial(i, 0).transform(l);
    for (int k = 0; k < sys.block_size(i); ++k) {
      LaurentMonomial q = sys.norm_slot_monomial(i, k).transform(l).mul(denom.inverse());
      for (const auto& [v, e] : q.exponents())
        coord_of.emplace(v, 0);
    }
  }
  int idx = 0;
  for (auto& [v, slot] : coord_of) {
    slot = idx++;
    out.var_names.push_back(svar_name(*out.table, v));
  }
  out.nvars = idx;
  // pass 2: slots
  for (std::size_t p = 0; p < pro.polys.size(); ++p) {
    int i = pro.blocks[p];
    int l = pro.shifts[p];
    LaurentMonomial denom = sys.norm_slot_monomial(i, 0).transform(l);
    AlgPoly ap;
    for (int k = 0; k < sys.block_size(i); ++k) {
      AlgSlot slot;
      slot.coeff = SVar{sys.table().coeff_var(i, k), l};
      slot.point.assign(static_cast<std::size_t>(out.nvars), 0);
      LaurentMonomial q = sys.norm_slot_monomial(i, k).transform(l).mul(denom.inverse());
      for (const auto& [v, e] : q.exponents())
        slot.point[static_cast<std::size_t>(coord_of.at(v))] = e;
      ap.slots.push_back(std::move(slot));
    }
    out.polys.push_back(std::move(ap));
    out.origin.push_back({i, l});
  }
  return out;
}

std::vector<int> essential_subset_minimal_ranking(const AlgPolySystem& sys)
{
  int m = static_cast<int>(sys.polys.size());
  Rng rng(0x51c0ffee12345ULL);
  std::vector<int> prefix;
  for (int t = 0; t < m; ++t) {
    prefix.push_back(t);
    if (certified_independent(sys, prefix, rng))
      continue;
    // the first dependent prefix carries a unique circuit, which is the
    // minimal-ranking essential subset
    std::vector<int> circuit;
    for (int e : prefix) {
      std::vector<int> without;
      for (int x : prefix)
        if (x != e)
          without.push_back(x);
      if (certified_independent(sys, without, rng, 8))
        circuit.push_back(e);
    }
    if (circuit.empty() || point_span_rank(sys, circuit) > static_cast<int>(circuit.size()) - 1)
      throw InternalConsistencyError("circuit extraction failed to certify dependence");
    return circuit;
  }
  throw std::invalid_argument("prolonged system has no essential subset");
}

AlgPolySystem restrict_to(const AlgPolySystem& sys, const std::vector<int>& subset)
{
  AlgPolySystem out;
  out.table = sys.table;
  out.nvars = sys.nvars;
  out.var_names = sys.var_names;
  for (int i : subset) {
    out.polys.push_back(sys.polys[static_cast<std::size_t>(i)]);
    out.origin.push_back(sys.origin[static_cast<std::size_t>(i)]);
  }
  return out;
}

SpecializeResult specialize_to_essential_vars(const AlgPolySystem& sys)
{
  int target = static_cast<int>(sys.polys.size()) - 1;
  Rng rng(0xfeedface5678ULL);
  std::vector<int> all(sys.polys.size());
  std::iota(all.begin(), all.end(), 0);

  std::vector<int> chosen;
  if (sys.nvars == target) {
    chosen = std::vector<int>(static_cast<std::size_t>(target));
    std::iota(chosen.begin(), chosen.end(), 0);
  } else {
    // lexicographically first coordinate subset carrying a rank-(|I|-1)
    // column submatrix
    std::vector<int> sel(static_cast<std::size_t>(target));
    std::iota(sel.begin(), sel.end(), 0);
    auto restricted_rank_hits = [&](const std::vector<int>& cols) {
      AlgPolySystem r = sys;
      for (auto& p : r.polys)
        for (auto& s : p.slots) {
          std::vector<long> np;
          for (int c : cols)
            np.push_back(s.point[static_cast<std::size_t>(c)]);
          s.point = std::move(np);
        }
      r.nvars = static_cast<int>(cols.size());
      for (int t = 0; t < 4; ++t)
        if (specialized_rank(r, all, rng) == target)
          return true;
      return false;
    };
    bool found = false;
    for (;;) {
      if (restricted_rank_hits(sel)) {
        chosen = sel;
        found = true;
        break;
      }
      int i = target - 1;
      while (i >= 0 && sel[static_cast<std::size_t>(i)] == sys.nvars - target + i)
        --i;
      if (i < 0)
        break;
      ++sel[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < target; ++j)
        sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!found)
      throw std::invalid_argument("no full-rank column subset for specialization");
  }

  SpecializeResult res;
  res.kept_coords = chosen;
  res.sys.table = sys.table;
  res.sys.nvars = static_cast<int>(chosen.size());
  for (int c : chosen)
    res.sys.var_names.push_back(sys.var_names[static_cast<std::size_t>(c)]);
  for (const auto& p : sys.polys) {
    AlgPoly np;
    for (const auto& s : p.slots) {
      AlgSlot ns;
      ns.coeff = s.coeff;
      for (int c : chosen)
        ns.point.push_back(s.point[static_cast<std::size_t>(c)]);
      np.slots.push_back(std::move(ns));
    }
    res.sys.polys.push_back(std::move(np));
  }
  res.sys.origin = sys.origin;
  return res;
}

SmithResult smith_transform(const AlgPolySystem& sys)
{
  int n = sys.nvars;
  // lattice basis of the support points by integer row reduction
  std::vector<std::vector<long>> rows;
  for (const auto& p : sys.polys)
    for (std::size_t k = 1; k < p.slots.size(); ++k) {
      bool zero = true;
      for (long v : p.slots[k].point)
        if (v != 0)
          zero = false;
      if (!zero)
        rows.push_back(p.slots[k].point);
    }
  std::vector<std::vector<long>> basis;
  for (int col = 0; col < n; ++col) {
    for (;;) {
      int best = -1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][static_cast<std::size_t>(col)] == 0)
          continue;
        bool earlier_nonzero = false;
        for (int c = 0; c < col; ++c)
          if (rows[r][static_cast<std::size_t>(c)] != 0)
            earlier_nonzero = true;
        if (earlier_nonzero)
          continue;
        if (best < 0 || std::abs(rows[r][static_cast<std::size_t>(col)]) <
                            std::abs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)]))
          best = static_cast<int>(r);
      }
      if (best < 0)
        break;
      long pv = rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)];
      bool reduced_all = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(r) == best || rows[r][static_cast<std::size_t>(col)] == 0)
          continue;
        bool earlier_nonzero = false;
        for (int c = 0; c < col; ++c)
          if (rows[r][static_cast<std::size_t>(c)] != 0)
            earlier_nonzero = true;
        if (earlier_nonzero)
          continue;
        long q = rows[r][static_cast<std::size_t>(col)] / pv;
        for (int c = 0; c < n; ++c)
          rows[r][static_cast<std::size_t>(c)] -= q * rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)];
        if (rows[r][static_cast<std::size_t>(col)] != 0)
          reduced_all = false;
      }
      if (reduced_all) {
        if (pv < 0)
          for (int c = 0; c < n; ++c)
            rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)] = -rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)];
        basis.push_back(rows[static_cast<std::size_t>(best)]);
        rows.erase(rows.begin() + best);
        break;
      }
    }
  }
  if (static_cast<int>(basis.size()) != n)
    throw std::invalid_argument("degenerate support lattice in Smith transform");

  SmithResult res;
  res.basis = basis;
  res.identity = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != (i == j ? 1 : 0))
        res.identity = false;

  res.sys.table = sys.table;
  res.sys.nvars = n;
  for (int j = 0; j < n; ++j) {
    if (res.identity) {
      res.sys.var_names.push_back(sys.var_names[static_cast<std::size_t>(j)]);
      continue;
    }
    std::string name = "z" + std::to_string(j + 1);
    res.sys.var_names.push_back(name);
  }
  // transform points: q with q * B = p, solved by forward substitution on
  // the triangular basis
  for (const auto& p : sys.polys) {
    AlgPoly np;
    for (const auto& s : p.slots) {
      AlgSlot ns;
      ns.coeff = s.coeff;
      std::vector<Rat> rem(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        rem[static_cast<std::size_t>(c)] = Rat(s.point[static_cast<std::size_t>(c)]);
      std::vector<long> q(static_cast<std::size_t>(n), 0);
      for (int c = 0; c < n; ++c) {
        // basis rows are in echelon form: row c is the unique one with the
        // leading entry in column c
        Rat coef = rem[static_cast<std::size_t>(c)] / Rat(basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)]);
        if (coef.get_den() != 1)
          throw InternalConsistencyError("support point outside its own lattice");
        q[static_cast<std::size_t>(c)] = mpz_get_si(coef.get_num().get_mpz_t());
        for (int cc = 0; cc < n; ++cc)
          rem[static_cast<std::size_t>(cc)] -= coef * Rat(basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)]);
      }
      for (int c = 0; c < n; ++c)
        if (sgn(rem[static_cast<std::size_t>(c)]) != 0)
          throw InternalConsistencyError("lattice solve left a nonzero remainder");
      ns.point = std::move(q);
      np.slots.push_back(std::move(ns));
    }
    res.sys.polys.push_back(std::move(np));
  }
  res.sys.origin = sys.origin;
  return res;
}

Polytope newton_polytope(const AlgPolySystem& sys, int i)
{
  std::vector<Point> pts;
  for (const auto& s : sys.polys[static_cast<std::size_t>(i)].slots) {
    Point p;
    for (long v : s.point)
      p.push_back(Rat(v));
    pts.push_back(std::move(p));
  }
  return reduce_to_vertices(make_polytope(sys.nvars, std::move(pts)));
}

namespace {

void enum_block_profiles(int blocks, long d, std::vector<int>& acc, std::size_t idx,
                         std::vector<std::vector<int>>& out)
{
  if (idx == static_cast<std::size_t>(blocks)) {
    if (d == 0)
      out.push_back(acc);
    return;
  }
  for (long e = d - (blocks - static_cast<long>(idx) - 1); e >= 1; --e) {
    if (e > d)
      continue;
    acc[idx] = static_cast<int>(e);
    enum_block_profiles(blocks, d - e, acc, idx + 1, out);
  }
  acc[idx] = 0;
}

void enum_homogeneous(const std::vector<SVar>& vars, std::size_t idx, long rem,
                      std::vector<std::pair<SVar, int>>& acc, std::vector<LaurentMonomial>& out)
{
  if (idx + 1 == vars.size()) {
    acc.push_back({vars[idx], static_cast<int>(rem)});
    out.push_back(LaurentMonomial::from_pairs(acc));
    acc.pop_back();
    return;
  }
  for (long e = rem; e >= 0; --e) {
    if (e > 0)
      acc.push_back({vars[idx], static_cast<int>(e)});
    enum_homogeneous(vars, idx + 1, rem - e, acc, out);
    if (e > 0)
      acc.pop_back();
  }
}

struct AlgHit {
  DiffPoly poly;
  NormalizationRecord normalization;
};

std::optional<AlgHit> solve_algebraic_profile(const AlgPolySystem& sys,
                                              const std::vector<int>& profile,
                                              int phantom_base)
{
  int blocks = static_cast<int>(sys.polys.size());
  // per-block monomial lists of the profile degree
  std::vector<std::vector<LaurentMonomial>> per_block;
  for (int b = 0; b < blocks; ++b) {
    std::vector<SVar> vars;
    for (const auto& s : sys.polys[static_cast<std::size_t>(b)].slots)
      vars.push_back(s.coeff);
    std::vector<LaurentMonomial> ms;
    std::vector<std::pair<SVar, int>> acc;
    enum_homogeneous(vars, 0, profile[static_cast<std::size_t>(b)], acc, ms);
    per_block.push_back(std::move(ms));
  }
  std::vector<LaurentMonomial> monomials{LaurentMonomial()};
  for (int b = 0; b < blocks; ++b) {
    std::vector<LaurentMonomial> next;
    next.reserve(monomials.size() * per_block[static_cast<std::size_t>(b)].size());
    for (const auto& head : monomials)
      for (const auto& tail : per_block[static_cast<std::size_t>(b)])
        next.push_back(head.mul(tail));
    monomials = std::move(next);
  }

  // substitution: pivot coeff of block b becomes -sum_{k>=1} u_k z^{p_k}
  std::vector<DiffPoly> s_poly(static_cast<std::size_t>(blocks));
  std::vector<SVar> pivots(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) {
    const AlgPoly& p = sys.polys[static_cast<std::size_t>(b)];
    pivots[static_cast<std::size_t>(b)] = p.slots[0].coeff;
    std::vector<Term> ts;
    for (std::size_t k = 1; k < p.slots.size(); ++k) {
      std::vector<std::pair<SVar, int>> mono{{p.slots[k].coeff, 1}};
      for (int j = 0; j < sys.nvars; ++j)
        if (p.slots[k].point[static_cast<std::size_t>(j)] != 0)
          mono.push_back({SVar{phantom_base + j, 0},
                          static_cast<int>(p.slots[k].point[static_cast<std::size_t>(j)])});
      ts.push_back({LaurentMonomial::from_pairs(mono), Rat(1)});
    }
    s_poly[static_cast<std::size_t>(b)] = DiffPoly::from_terms(std::move(ts));
  }
  std::vector<std::vector<DiffPoly>> s_pow(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) {
    s_pow[static_cast<std::size_t>(b)].push_back(DiffPoly::constant(Rat(1)));
    for (int e = 1; e <= profile[static_cast<std::size_t>(b)]; ++e)
      s_pow[static_cast<std::size_t>(b)].push_back(s_pow[static_cast<std::size_t>(b)].back() *
                                                   s_poly[static_cast<std::size_t>(b)]);
  }

  std::map<std::vector<int>, DiffPoly> base_cache;
  std::map<LaurentMonomial, int> row_of;
  std::vector<std::tuple<int, int, Rat>> entries;
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    std::vector<int> eps(static_cast<std::size_t>(blocks), 0);
    LaurentMonomial free_part = monomials[col];
    for (int b = 0; b < blocks; ++b) {
      int e = monomials[col].exponent(pivots[static_cast<std::size_t>(b)]);
      eps[static_cast<std::size_t>(b)] = e;
      if (e != 0)
        free_part = free_part.mul(LaurentMonomial::var(pivots[static_cast<std::size_t>(b)], -e));
    }
    auto it = base_cache.find(eps);
    if (it == base_cache.end()) {
      DiffPoly prod = DiffPoly::constant(Rat(1));
      for (int b = 0; b < blocks; ++b) {
        int e = eps[static_cast<std::size_t>(b)];
        if (e == 0)
          continue;
        DiffPoly f = s_pow[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)];
        if (e % 2 == 1)
          f = -f;
        prod = prod * f;
      }
      it = base_cache.emplace(eps, std::move(prod)).first;
    }
    for (const auto& term : it->second.terms()) {
      LaurentMonomial key = term.mon.mul(free_part);
      auto [rit, fresh] = row_of.emplace(std::move(key), static_cast<int>(row_of.size()));
      entries.emplace_back(rit->second, static_cast<int>(col), term.coeff);
    }
  }
  SparseMatrixQ matrix(static_cast<int>(row_of.size()), static_cast<int>(monomials.size()));
  for (const auto& [r, c, v] : entries)
    matrix.add(r, c, v);
  if (nullity_mod_p(matrix) == 0)
    return std::nullopt;
  auto basis = nullspace_q(matrix);
  if (basis.empty())
    return std::nullopt;
  if (basis.size() > 1)
    throw InternalConsistencyError("multiple independent algebraic resultant candidates");
  std::vector<Term> ts;
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (sgn(basis[0][j]) != 0)
      ts.push_back({monomials[j], basis[0][j]});
  AlgHit hit;
  DiffPoly raw = DiffPoly::from_terms(std::move(ts));
  hit.poly = raw.normalized();
  hit.normalization.content_scale = hit.poly.leading().coeff / raw.leading().coeff;
  hit.normalization.sign_flipped = sgn(raw.leading().coeff) < 0;
  return hit;
}

}  // namespace

DiffPoly algebraic_sparse_resultant(const AlgPolySystem& sys)
{
  NormalizationRecord rec;
  return algebraic_sparse_resultant_recorded(sys, rec);
}

DiffPoly algebraic_sparse_resultant_recorded(const AlgPolySystem& sys, NormalizationRecord& rec)
{
  int blocks = static_cast<int>(sys.polys.size());
  if (blocks != sys.nvars + 1)
    throw std::invalid_argument("strong essential input needs N+1 polynomials in N variables");
  int phantom_base = sys.table->size();

  Int cap(0);
  if (sys.nvars <= 4) {
    // exact degree: sum over blocks of the mixed volume of the others
    for (int i = 0; i < blocks; ++i) {
      std::vector<Polytope> qs;
      for (int j = 0; j < blocks; ++j)
        if (j != i)
          qs.push_back(newton_polytope(sys, j));
      cap += mixed_volume(qs);
    }
  } else {
    cap = Int(1);
    for (int i = 0; i < blocks; ++i) {
      long md = 1;
      for (const auto& s : sys.polys[static_cast<std::size_t>(i)].slots) {
        long deg = 0;
        for (long v : s.point)
          deg += std::abs(v);
        md = std::max(md, deg);
      }
      cap *= Int(md + 1);
    }
  }

  for (long d = 1; Int(d) <= cap; ++d) {
    std::vector<std::vector<int>> profiles;
    if (d >= blocks) {
      std::vector<int> acc(static_cast<std::size_t>(blocks), 0);
      enum_block_profiles(blocks, d, acc, 0, profiles);
    }
    std::optional<AlgHit> found;
    for (const auto& profile : profiles) {
      auto cand = solve_algebraic_profile(sys, profile, phantom_base);
      if (cand) {
        if (found)
          throw InternalConsistencyError("two block profiles admit minimal candidates");
        found = cand;
      }
    }
    if (found) {
      rec = found->normalization;
      return found->poly;
    }
  }
  throw BoundsExceededError("algebraic resultant search exceeded its degree cap");
}

ResultantCertificate resultant_via_reduction(const GenericSystem& sys, const EngineOptions& opts,
                                             ReductionTrace* trace)
{
  if (!is_laurent_transformally_essential(sys))
    throw NotEssentialError();
  std::vector<int> t_set = super_essential_subset(sys);

  JacobiInput a = order_matrix(sys);
  JacobiInput at;
  for (int i : t_set)
    at.entries.push_back(a.entries[static_cast<std::size_t>(i)]);
  std::vector<ExtInt> k(static_cast<std::size_t>(sys.poly_count()), ExtInt::neg_inf());
  for (std::size_t ti = 0; ti < t_set.size(); ++ti) {
    ExtInt j = jacobi_number(delete_row(at, static_cast<int>(ti)));
    if (!j.finite())
      throw InternalConsistencyError("super-essential subsystem with infinite Jacobi bound");
    k[static_cast<std::size_t>(t_set[ti])] = j;
  }

  Prolongation pro = prolong(sys, k);
  AlgPolySystem alg = algebraic_from_prolongation(sys, pro);
  std::vector<int> ess = essential_subset_minimal_ranking(alg);
  AlgPolySystem sub = restrict_to(alg, ess);
  SpecializeResult spec = specialize_to_essential_vars(sub);
  SmithResult smith = smith_transform(spec.sys);
  NormalizationRecord norm_rec;
  DiffPoly sr = algebraic_sparse_resultant_recorded(smith.sys, norm_rec);

  if (trace) {
    trace->super_essential = t_set;
    trace->prolongation = k;
    for (int e : ess)
      trace->essential.push_back(alg.origin[static_cast<std::size_t>(e)]);
    for (int c : spec.kept_coords)
      trace->kept_vars.push_back(sub.var_names[static_cast<std::size_t>(c)]);
    trace->smith = smith;
  }

  ResultantCertificate cert;
  cert.sr = sr;
  cert.engine = "reduction";
  cert.multihomog = opts.multihomog;
  cert.normalization = norm_rec;
  cert.degree = sr.total_degree();
  for (int i = 0; i < sys.poly_count(); ++i) {
    ExtInt ord = ExtInt::neg_inf();
    for (int kk = 0; kk < sys.block_size(i); ++kk)
      ord = ext_max(ord, order_stats(sr, sys.table().coeff_var(i, kk)).ord);
    cert.orders.push_back(ord);
  }
  cert.verification = verify_certificate(cert, sys, opts.trials, opts.seed);
  if (!cert.verification.vanishing_ok || !cert.verification.homogeneity_ok)
    throw InternalConsistencyError("reduction certificate failed verification");
  return cert;
}

DenseResultantReport dense_resultant(int n, const std::vector<long>& orders,
                                     const std::vector<long>& degrees, const EngineOptions& opts)
{
  if (n < 1 || static_cast<int>(orders.size()) != n + 1 ||
      static_cast<int>(degrees.size()) != n + 1)
    throw std::invalid_argument("dense resultant needs n+1 orders and degrees");
  for (long s : orders)
    if (s < 0)
      throw std::invalid_argument("negative order");
  for (long m : degrees)
    if (m < 1)
      throw std::invalid_argument("degree must be positive");

  auto table = std::make_shared<VarTable>();
  for (int j = 1; j <= n; ++j)
    table->add_main("y" + std::to_string(j));

  // supports: all monomials of order <= s_i and 1 <= degree <= m_i, with
  // the constant monomial in slot 0
  std::vector<std::vector<LaurentMonomial>> supports;
  for (int i = 0; i <= n; ++i) {
    std::vector<SVar> vars;
    for (int j = 0; j < n; ++j)
      for (long l = 0; l <= orders[static_cast<std::size_t>(i)]; ++l)
        vars.push_back(SVar{j, static_cast<int>(l)});
    std::vector<LaurentMonomial> mons{LaurentMonomial()};
    for (long deg = 1; deg <= degrees[static_cast<std::size_t>(i)]; ++deg) {
      std::vector<std::pair<SVar, int>> acc;
      std::vector<LaurentMonomial> part;
      enum_homogeneous(vars, 0, deg, acc, part);
      mons.insert(mons.end(), part.begin(), part.end());
    }
    std::sort(mons.begin() + 1, mons.end(),
              [](const LaurentMonomial& x, const LaurentMonomial& y) {
                return LaurentMonomial::compare(x, y) < 0;
              });
    for (std::size_t k = 0; k < mons.size(); ++k) {
      std::string name = k <= 9 ? "u" + std::to_string(i) + std::to_string(k)
                                : "u" + std::to_string(i) + "_" + std::to_string(k);
      table->add_coeff(name, i, static_cast<int>(k));
    }
    supports.push_back(std::move(mons));
  }
  GenericSystem sys(table, std::move(supports));

  DenseResultantReport rep;
  rep.table = table;
  long s_sum = 0;
  for (long s : orders)
    s_sum += s;
  for (int i = 0; i <= n; ++i)
    rep.block_orders.push_back(ExtInt(s_sum - orders[static_cast<std::size_t>(i)]));
  rep.degree_cap = Int(1);
  for (int i = 0; i <= n; ++i) {
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(degrees[static_cast<std::size_t>(i)] + 1),
                  static_cast<unsigned long>(s_sum - orders[static_cast<std::size_t>(i)] + 1));
    rep.degree_cap *= f;
  }

  std::vector<ExtInt> k;
  for (int i = 0; i <= n; ++i)
    k.push_back(ExtInt(s_sum - orders[static_cast<std::size_t>(i)]));
  Prolongation pro = prolong(sys, k);
  AlgPolySystem alg = algebraic_from_prolongation(sys, pro);

  rep.total_degree = Int(0);
  if (alg.nvars <= 4) {
    rep.degrees_available = true;
    rep.block_degrees.assign(static_cast<std::size_t>(n + 1), Int(0));
    for (std::size_t p = 0; p < alg.polys.size(); ++p) {
      std::vector<Polytope> qs;
      for (std::size_t q = 0; q < alg.polys.size(); ++q)
        if (q != p)
          qs.push_back(newton_polytope(alg, static_cast<int>(q)));
      Int mv = mixed_volume(qs);
      rep.block_degrees[static_cast<std::size_t>(alg.origin[p].first)] += mv;
      rep.total_degree += mv;
    }
  }

  // size guard for the actual computation
  bool small = alg.nvars <= 3 && rep.degrees_available && rep.total_degree <= 8 &&
               static_cast<long>(alg.polys.size()) <= 5;
  if (!small) {
    rep.guard_exceeded = true;
    rep.system.emplace(std::move(sys));
    return rep;
  }
  DiffPoly sr = algebraic_sparse_resultant(alg);
  ResultantCertificate cert;
  cert.sr = sr;
  cert.engine = "reduction";
  cert.degree = sr.total_degree();
  for (int i = 0; i <= n; ++i) {
    ExtInt ord = ExtInt::neg_inf();
    for (int kk = 0; kk < sys.block_size(i); ++kk)
      ord = ext_max(ord, order_stats(sr, table->coeff_var(i, kk)).ord);
    cert.orders.push_back(ord);
  }
  cert.verification = verify_certificate(cert, sys, opts.trials, opts.seed);
  if (!cert.verification.vanishing_ok || !cert.verification.homogeneity_ok)
    throw InternalConsistencyError("dense resultant certificate failed verification");
  rep.certificate = std::move(cert);
  rep.system.emplace(std::move(sys));
  return rep;
}

}  // namespace sdres
