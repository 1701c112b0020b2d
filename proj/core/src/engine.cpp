#include <sdres/engine.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sdres {

namespace {

void enum_monomials_rec(const std::vector<SVar>& vars, std::size_t idx, long rem,
                        std::vector<std::pair<SVar, int>>& acc,
                        std::vector<LaurentMonomial>& out)
{
  if (idx == vars.size()) {
    if (rem == 0)
      out.push_back(LaurentMonomial::from_pairs(acc));
    return;
  }
  if (idx + 1 == vars.size()) {
    acc.push_back({vars[idx], static_cast<int>(rem)});
    out.push_back(LaurentMonomial::from_pairs(acc));
    acc.pop_back();
    return;
  }
  for (long e = rem; e >= 0; --e) {
    if (e > 0)
      acc.push_back({vars[idx], static_cast<int>(e)});
    enum_monomials_rec(vars, idx + 1, rem - e, acc, out);
    if (e > 0)
      acc.pop_back();
  }
}

// monomials of degree exactly d, deterministic order
std::vector<LaurentMonomial> homogeneous_monomials(const std::vector<SVar>& vars, long d)
{
  std::vector<LaurentMonomial> out;
  if (vars.empty()) {
    if (d == 0)
      out.push_back(LaurentMonomial());
    return out;
  }
  std::vector<std::pair<SVar, int>> acc;
  enum_monomials_rec(vars, 0, d, acc, out);
  return out;
}

std::vector<LaurentMonomial> bounded_monomials(const std::vector<SVar>& vars, long d)
{
  std::vector<LaurentMonomial> out;
  for (long k = 0; k <= d; ++k) {
    auto part = homogeneous_monomials(vars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Int binomial(long n, long k)
{
  if (k < 0 || k > n)
    return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct Cell {
  int block = 0;
  int shift = 0;
  std::vector<SVar> vars;  // all slot vars of the block at this shift
  SVar pivot;              // the eliminated slot variable
};

std::vector<Cell> make_cells(const GenericSystem& sys, const std::vector<ExtInt>& h)
{
  std::vector<Cell> cells;
  for (int i = 0; i < sys.poly_count(); ++i) {
    if (!h[static_cast<std::size_t>(i)].finite())
      continue;
    for (int l = 0; l <= h[static_cast<std::size_t>(i)].value(); ++l) {
      Cell c;
      c.block = i;
      c.shift = l;
      for (int k = 0; k < sys.block_size(i); ++k)
        c.vars.push_back(SVar{sys.table().coeff_var(i, k), l});
      c.pivot = SVar{sys.table().coeff_var(i, sys.min_degree_slot(i)), l};
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

}  // namespace

AnsatzConfig make_ansatz_config(const GenericSystem& sys, const BoundReport& bounds,
                                const std::vector<ExtInt>& h, long d, bool multihomog)
{
  if (static_cast<int>(h.size()) != sys.poly_count())
    throw std::invalid_argument("order vector length mismatch");
  if (d < 1)
    throw std::invalid_argument("ansatz degree must be at least 1");
  AnsatzConfig cfg;
  cfg.order_vector = h;
  cfg.degree = d;
  cfg.multihomog = multihomog;
  cfg.degree_cap = Int(1);
  for (int i = 0; i < sys.poly_count(); ++i) {
    const ExtInt& hi = h[static_cast<std::size_t>(i)];
    if (!hi.finite())
      continue;
    if (bounds.final_bound[static_cast<std::size_t>(i)] < hi)
      throw std::invalid_argument("order vector exceeds the final search bound");
    Int f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(sys.norm_degree(i) + 1),
                  static_cast<unsigned long>(hi.value() + 1));
    cfg.degree_cap *= f;
  }
  if (Int(d) > cfg.degree_cap)
    throw std::invalid_argument("ansatz degree exceeds the degree cap");
  return cfg;
}

Prolongation prolong(const GenericSystem& sys, const std::vector<ExtInt>& k)
{
  if (static_cast<int>(k.size()) != sys.poly_count())
    throw std::invalid_argument("prolongation vector length mismatch");
  Prolongation out;
  for (int i = 0; i < sys.poly_count(); ++i) {
    if (!k[static_cast<std::size_t>(i)].finite())
      continue;
    if (k[static_cast<std::size_t>(i)].value() < 0)
      throw std::invalid_argument("negative prolongation order");
    for (int l = 0; l <= k[static_cast<std::size_t>(i)].value(); ++l) {
      out.blocks.push_back(i);
      out.shifts.push_back(l);
      out.polys.push_back(sys.norm_poly(i).transform(l));
    }
  }
  std::set<SVar> ys, us;
  for (const auto& p : out.polys)
    for (const auto& v : p.variables())
      (sys.table().is_main(v.var) ? ys : us).insert(v);
  out.y_vars.assign(ys.begin(), ys.end());
  out.u_vars.assign(us.begin(), us.end());
  return out;
}

AnsatzTemplate build_ansatz(const GenericSystem& sys, const std::vector<ExtInt>& h, long d)
{
  AnsatzTemplate t;
  for (const auto& cell : make_cells(sys, h))
    t.u_vars.insert(t.u_vars.end(), cell.vars.begin(), cell.vars.end());
  Int count = binomial(d + static_cast<long>(t.u_vars.size()) - 1,
                       static_cast<long>(t.u_vars.size()) - 1);
  if (count > 2000000)
    throw std::invalid_argument("ansatz template exceeds the desk-scale guard");
  t.monomials = homogeneous_monomials(t.u_vars, d);
  return t;
}

std::vector<MultiplierTemplate> build_multipliers(const GenericSystem& sys,
                                                  const std::vector<ExtInt>& h, long d)
{
  long m = 0;
  long denom_weight = 0;
  for (int i = 0; i < sys.poly_count(); ++i) {
    if (!h[static_cast<std::size_t>(i)].finite())
      continue;
    m = std::max(m, sys.norm_degree(i));
    long m_i0 = sys.norm_slot_monomial(i, sys.min_degree_slot(i)).total_degree();
    denom_weight += (h[static_cast<std::size_t>(i)].value() + 1) * m_i0;
  }
  long hmax = 0;
  for (int i = 0; i < sys.poly_count(); ++i)
    if (h[static_cast<std::size_t>(i)].finite() && sys.norm_order(i).finite())
      hmax = std::max(hmax, h[static_cast<std::size_t>(i)].value() + sys.norm_order(i).value());

  std::vector<SVar> vars;
  for (int j = 0; j < sys.n(); ++j)
    for (int l = 0; l <= hmax; ++l)
      vars.push_back(SVar{j, l});
  AnsatzTemplate at = build_ansatz(sys, h, 1);  // reuse the U var list
  vars.insert(vars.end(), at.u_vars.begin(), at.u_vars.end());

  std::vector<MultiplierTemplate> out;
  for (int i = 0; i < sys.poly_count(); ++i) {
    if (!h[static_cast<std::size_t>(i)].finite())
      continue;
    for (int j = 0; j <= h[static_cast<std::size_t>(i)].value(); ++j) {
      MultiplierTemplate mt;
      mt.block = i;
      mt.shift = j;
      mt.degree_bound = (m + 1 + denom_weight) * d - sys.norm_degree(i) - 1;
      mt.vars = vars;
      if (mt.degree_bound >= 0) {
        Int count = binomial(mt.degree_bound + static_cast<long>(vars.size()),
                             static_cast<long>(vars.size()));
        if (count > 2000000)
          throw std::invalid_argument("multiplier template exceeds the desk-scale guard");
        mt.monomials = bounded_monomials(vars, mt.degree_bound);
      }
      out.push_back(std::move(mt));
    }
  }
  return out;
}

AssembledSystem assemble_system(const GenericSystem& sys, const std::vector<ExtInt>& h, long d)
{
  AnsatzTemplate ansatz = build_ansatz(sys, h, d);
  std::vector<MultiplierTemplate> mults = build_multipliers(sys, h, d);

  LaurentMonomial denom;
  for (const auto& cell : make_cells(sys, h))
    denom = denom.mul(sys.norm_slot_monomial(cell.block, sys.min_degree_slot(cell.block))
                          .transform(cell.shift));
  LaurentMonomial denom_d = denom.pow(d);

  std::map<LaurentMonomial, int> row_of;
  auto row_idx = [&](const LaurentMonomial& key) {
    auto [it, fresh] = row_of.emplace(key, static_cast<int>(row_of.size()));
    return it->second;
  };

  std::vector<std::tuple<int, int, Rat>> entries;
  int col = 0;
  for (const auto& mon : ansatz.monomials) {
    entries.emplace_back(row_idx(mon.mul(denom_d)), col, Rat(1));
    ++col;
  }
  for (const auto& mt : mults) {
    DiffPoly norm_j = sys.norm_poly(mt.block).transform(mt.shift);
    for (const auto& t : mt.monomials) {
      for (const auto& term : norm_j.terms())
        entries.emplace_back(row_idx(term.mon.mul(t)), col, -term.coeff);
      ++col;
    }
  }

  AssembledSystem out{SparseMatrixQ(static_cast<int>(row_of.size()), col),
                      static_cast<int>(ansatz.monomials.size()),
                      ansatz.monomials,
                      Int(0),
                      Int(0)};
  for (const auto& [r, c, v] : entries)
    out.matrix.add(r, c, v);

  // dimension formulas from the search-space accounting
  long big_l = static_cast<long>(ansatz.u_vars.size());
  long v_count = static_cast<long>(mults.empty() ? big_l : mults.front().vars.size());
  long m = 0, denom_weight = 0;
  for (int i = 0; i < sys.poly_count(); ++i)
    if (h[static_cast<std::size_t>(i)].finite()) {
      m = std::max(m, sys.norm_degree(i));
      denom_weight += (h[static_cast<std::size_t>(i)].value() + 1) *
                      sys.norm_slot_monomial(i, sys.min_degree_slot(i)).total_degree();
    }
  long d1 = (m + 1 + denom_weight) * d;
  out.row_space = binomial(d1 + v_count, v_count);
  out.unknown_count = binomial(d + big_l - 1, big_l - 1);
  for (const auto& mt : mults)
    out.unknown_count += binomial(mt.degree_bound + v_count, v_count);
  return out;
}

GenericZeroSystem assemble_generic_zero(const GenericSystem& sys, const std::vector<ExtInt>& h,
                                        const std::vector<LaurentMonomial>& monomials)
{
  if (monomials.empty())
    return {SparseMatrixQ(0, 0), {}};
  long d = monomials.front().total_degree();
  for (const auto& m : monomials)
    if (m.total_degree() != d)
      throw std::invalid_argument("ansatz monomials must share one degree");

  std::vector<Cell> cells = make_cells(sys, h);
  // per cell: D = sigma^l(N_{i,k0}) and S = sigma^l(sum of the other slots)
  std::vector<std::vector<DiffPoly>> s_pow(cells.size());
  std::vector<std::vector<LaurentMonomial>> d_pow(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    int k0 = sys.min_degree_slot(cell.block);
    std::vector<Term> ts;
    for (int k = 0; k < sys.block_size(cell.block); ++k) {
      if (k == k0)
        continue;
      SVar u{sys.table().coeff_var(cell.block, k), 0};
      ts.push_back({sys.norm_slot_monomial(cell.block, k).mul(LaurentMonomial::var(u)), Rat(1)});
    }
    DiffPoly s = DiffPoly::from_terms(std::move(ts)).transform(cell.shift);
    LaurentMonomial dm = sys.norm_slot_monomial(cell.block, k0).transform(cell.shift);
    s_pow[c].push_back(DiffPoly::constant(Rat(1)));
    d_pow[c].push_back(LaurentMonomial());
    for (long e = 1; e <= d; ++e) {
      s_pow[c].push_back(s_pow[c].back() * s);
      d_pow[c].push_back(d_pow[c].back().mul(dm));
    }
  }

  std::map<std::vector<int>, DiffPoly> base_cache;
  auto base_of = [&](const std::vector<int>& eps) -> const DiffPoly& {
    auto it = base_cache.find(eps);
    if (it != base_cache.end())
      return it->second;
    DiffPoly prod = DiffPoly::constant(Rat(1));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int e = eps[c];
      DiffPoly factor =
          s_pow[c][static_cast<std::size_t>(e)].mul_monomial(d_pow[c][static_cast<std::size_t>(d - e)]);
      if (e % 2 == 1)
        factor = -factor;
      prod = prod * factor;
    }
    return base_cache.emplace(eps, std::move(prod)).first->second;
  };

  std::map<LaurentMonomial, int> row_of;
  GenericZeroSystem out{SparseMatrixQ(0, 0), monomials};
  std::vector<std::tuple<int, int, Rat>> entries;
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    std::vector<int> eps(cells.size(), 0);
    LaurentMonomial free_part = monomials[col];
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int e = monomials[col].exponent(cells[c].pivot);
      eps[c] = e;
      if (e != 0)
        free_part = free_part.mul(LaurentMonomial::var(cells[c].pivot, -e));
    }
    const DiffPoly& base = base_of(eps);
    for (const auto& term : base.terms()) {
      LaurentMonomial key = term.mon.mul(free_part);
      auto [it, fresh] = row_of.emplace(std::move(key), static_cast<int>(row_of.size()));
      entries.emplace_back(it->second, static_cast<int>(col), term.coeff);
    }
  }
  out.matrix = SparseMatrixQ(static_cast<int>(row_of.size()), static_cast<int>(monomials.size()));
  for (const auto& [r, c, v] : entries)
    out.matrix.add(r, c, v);
  return out;
}

namespace {

// necessary condition for a nonzero elimination element at this order
// vector: the prolonged system's algebraic symbolic support matrix must be
// rank deficient.  Skipping is certified: a random specialization reaching
// full row rank proves full generic rank.
bool order_vector_plausible(const GenericSystem& sys, const std::vector<ExtInt>& h, Rng& rng)
{
  using SparseVec = std::vector<std::pair<int, long>>;
  std::vector<Cell> cells = make_cells(sys, h);
  std::map<SVar, int> col_of;
  std::vector<std::vector<SparseVec>> row_betas(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    int k0 = sys.min_degree_slot(cell.block);
    for (int k = 0; k < sys.block_size(cell.block); ++k) {
      if (k == k0)
        continue;
      LaurentMonomial q = sys.norm_slot_monomial(cell.block, k)
                              .mul(sys.norm_slot_monomial(cell.block, k0).inverse())
                              .transform(cell.shift);
      SparseVec beta;
      for (const auto& [v, e] : q.exponents()) {
        auto [it, fresh] = col_of.emplace(v, static_cast<int>(col_of.size()));
        beta.push_back({it->second, e});
      }
      row_betas[c].push_back(std::move(beta));
    }
  }
  int ncols = static_cast<int>(col_of.size());
  for (int trial = 0; trial < 2; ++trial) {
    SparseMatrixQ m(static_cast<int>(row_betas.size()), std::max(ncols, 1));
    for (std::size_t r = 0; r < row_betas.size(); ++r) {
      std::map<int, Rat> acc;
      for (const auto& beta : row_betas[r]) {
        Rat u(rng.integer(1, 2147483646L));
        for (const auto& [cidx, e] : beta)
          acc[cidx] += u * Rat(e);
      }
      for (const auto& [cidx, v] : acc)
        m.add(static_cast<int>(r), cidx, v);
    }
    if (rank_q(m) == static_cast<int>(row_betas.size()))
      return false;  // certified independent: no solution can exist here
  }
  return true;
}

struct Hit {
  DiffPoly poly;
  NormalizationRecord normalization;
};

std::optional<Hit> solve_candidate(const GenericSystem& sys, const std::vector<ExtInt>& h,
                                   const std::vector<LaurentMonomial>& monomials)
{
  if (monomials.empty())
    return std::nullopt;
  GenericZeroSystem gz = assemble_generic_zero(sys, h, monomials);
  if (nullity_mod_p(gz.matrix) == 0)
    return std::nullopt;
  auto basis = nullspace_q(gz.matrix);
  if (basis.empty())
    return std::nullopt;
  if (basis.size() > 1)
    throw InternalConsistencyError("multiple independent minimal resultant candidates");
  std::vector<Term> ts;
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (sgn(basis[0][j]) != 0)
      ts.push_back({monomials[j], basis[0][j]});
  Hit hit;
  DiffPoly raw = DiffPoly::from_terms(std::move(ts));
  hit.poly = raw.normalized();
  hit.normalization.content_scale = hit.poly.leading().coeff / raw.leading().coeff;
  hit.normalization.sign_flipped = sgn(raw.leading().coeff) < 0;
  return hit;
}

// layer profiles: one degree per cell, summing to d, with the top layer of
// every retained block positive (the minimal order is attained exactly)
void enum_profiles_rec(const std::vector<Cell>& cells, const std::vector<int>& min_cell,
                       std::size_t idx, long rem, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out)
{
  if (idx == cells.size()) {
    if (rem == 0)
      out.push_back(acc);
    return;
  }
  long lo = min_cell[idx];
  for (long e = rem; e >= lo; --e) {
    acc[idx] = static_cast<int>(e);
    enum_profiles_rec(cells, min_cell, idx + 1, rem - e, acc, out);
  }
  acc[idx] = 0;
}

std::optional<Hit> try_order_degree(const GenericSystem& sys, const std::vector<ExtInt>& h,
                                    long d, bool multihomog)
{
  std::vector<Cell> cells = make_cells(sys, h);
  if (!multihomog) {
    AnsatzTemplate at = build_ansatz(sys, h, d);
    return solve_candidate(sys, h, at.monomials);
  }
  std::vector<int> min_cell(cells.size(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const ExtInt& hi = h[static_cast<std::size_t>(cells[c].block)];
    if (hi.finite() && cells[c].shift == hi.value())
      min_cell[c] = 1;  // ord(SR, u_i-block) = h_i exactly at the gate
  }
  std::vector<std::vector<int>> profiles;
  std::vector<int> acc(cells.size(), 0);
  enum_profiles_rec(cells, min_cell, 0, d, acc, profiles);
  std::optional<Hit> found;
  for (const auto& profile : profiles) {
    std::vector<std::vector<LaurentMonomial>> per_cell;
    for (std::size_t c = 0; c < cells.size(); ++c)
      per_cell.push_back(homogeneous_monomials(cells[c].vars, profile[c]));
    // outer product in cell order
    std::vector<LaurentMonomial> monomials{LaurentMonomial()};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::vector<LaurentMonomial> next;
      next.reserve(monomials.size() * per_cell[c].size());
      for (const auto& head : monomials)
        for (const auto& tail : per_cell[c])
          next.push_back(head.mul(tail));
      monomials = std::move(next);
    }
    auto cand = solve_candidate(sys, h, monomials);
    if (cand) {
      if (found)
        throw InternalConsistencyError("two layer profiles admit minimal candidates");
      found = cand;
    }
  }
  return found;
}

std::vector<std::vector<ExtInt>> order_vectors(const std::vector<ExtInt>& bounds, long o)
{
  std::vector<std::vector<ExtInt>> out;
  std::vector<ExtInt> acc(bounds.size(), ExtInt::neg_inf());
  std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long rem) {
    if (idx == bounds.size()) {
      if (rem == 0)
        out.push_back(acc);
      return;
    }
    if (!bounds[idx].finite()) {
      acc[idx] = ExtInt::neg_inf();
      rec(idx + 1, rem);
      return;
    }
    long hi = std::min(bounds[idx].value(), rem);
    for (long e = 0; e <= hi; ++e) {  // ascending lexicographic
      acc[idx] = ExtInt(e);
      rec(idx + 1, rem - e);
    }
    acc[idx] = ExtInt::neg_inf();
  };
  rec(0, o);
  return out;
}

}  // namespace

ResultantCertificate search_resultant(const GenericSystem& sys, const EngineOptions& opts)
{
  if (!is_laurent_transformally_essential(sys))
    throw NotEssentialError();
  BoundReport rep = search_bounds(sys);
  Rng rng(opts.seed);

  long o_max = 0;
  for (const auto& b : rep.final_bound)
    if (b.finite())
      o_max += b.value();

  for (long o = 0; o <= o_max; ++o) {
    for (const auto& h : order_vectors(rep.final_bound, o)) {
      if (!order_vector_plausible(sys, h, rng))
        continue;
      AnsatzConfig cfg = make_ansatz_config(sys, rep, h, 1, opts.multihomog);
      for (long d = 1; Int(d) <= cfg.degree_cap; ++d) {
        cfg.degree = d;
        auto cand = try_order_degree(sys, h, d, opts.multihomog);
        if (!cand)
          continue;
        ResultantCertificate cert;
        cert.sr = cand->poly;
        cert.engine = "ansatz";
        cert.multihomog = opts.multihomog;
        cert.normalization = cand->normalization;
        cert.degree = cert.sr.total_degree();
        for (const auto& v : cert.sr.variables())
          if (sys.table().is_main(v.var))
            throw InternalConsistencyError("main variable left in a certificate");
        for (int i = 0; i < sys.poly_count(); ++i) {
          ExtInt ord = ExtInt::neg_inf();
          for (int k = 0; k < sys.block_size(i); ++k)
            ord = ext_max(ord, order_stats(cert.sr, sys.table().coeff_var(i, k)).ord);
          cert.orders.push_back(ord);
          if (!(ord == h[static_cast<std::size_t>(i)]))
            throw InternalConsistencyError("certificate order differs from the search point");
        }
        if (cert.degree != d)
          throw InternalConsistencyError("certificate degree differs from the search point");
        cert.verification = verify_certificate(cert, sys, opts.trials, opts.seed);
        if (!cert.verification.vanishing_ok || !cert.verification.homogeneity_ok)
          throw InternalConsistencyError("freshly computed certificate failed verification");
        return cert;
      }
    }
  }
  throw BoundsExceededError("resultant search exhausted all order and degree bounds");
}

VerificationRecord verify_certificate(const ResultantCertificate& cert, const GenericSystem& sys,
                                      int trials, std::uint64_t seed)
{
  VerificationRecord rec;
  rec.trials = trials;
  rec.homogeneity_ok = true;
  for (int i = 0; i < sys.poly_count(); ++i) {
    std::vector<int> group;
    for (int k = 0; k < sys.block_size(i); ++k)
      group.push_back(sys.table().coeff_var(i, k));
    auto layers = transformally_homogeneous_layers(cert.sr, group);
    if (!layers) {
      rec.homogeneity_ok = false;
      rec.layers.emplace_back();
    } else {
      rec.layers.push_back(*layers);
    }
  }

  Rng rng(seed ^ 0xabcdef1234567890ULL);
  rec.vanishing_ok = true;
  for (int t = 0; t < trials; ++t) {
    // draw eta shifts and the non-designated coefficient values
    std::map<SVar, Rat> assign;
    for (int i = 0; i < sys.poly_count(); ++i) {
      if (!cert.orders[static_cast<std::size_t>(i)].finite())
        continue;
      long hi = cert.orders[static_cast<std::size_t>(i)].value();
      for (long l = 0; l <= hi; ++l)
        for (int k = 0; k < sys.block_size(i); ++k) {
          LaurentMonomial shifted = sys.norm_slot_monomial(i, k).transform(static_cast<int>(l));
          for (const auto& [v, e] : shifted.exponents())
            if (!assign.count(v))
              assign[v] = rng.small_rational(1000);
          if (k != 0)
            assign[SVar{sys.table().coeff_var(i, k), static_cast<int>(l)}] = rng.rational63();
        }
    }
    // designated slots from the generic zero
    for (int i = 0; i < sys.poly_count(); ++i) {
      if (!cert.orders[static_cast<std::size_t>(i)].finite())
        continue;
      long hi = cert.orders[static_cast<std::size_t>(i)].value();
      for (long l = 0; l <= hi; ++l) {
        Rat num(0);
        for (int k = 1; k < sys.block_size(i); ++k) {
          LaurentMonomial mk = sys.norm_slot_monomial(i, k).transform(static_cast<int>(l));
          Rat mval(1);
          for (const auto& [v, e] : mk.exponents())
            mval *= rat_pow(assign.at(v), e);
          mval *= assign.at(SVar{sys.table().coeff_var(i, k), static_cast<int>(l)});
          num += mval;
        }
        LaurentMonomial m0 = sys.norm_slot_monomial(i, 0).transform(static_cast<int>(l));
        Rat den(1);
        for (const auto& [v, e] : m0.exponents())
          den *= rat_pow(assign.at(v), e);
        assign[SVar{sys.table().coeff_var(i, 0), static_cast<int>(l)}] = -num / den;
      }
    }
    if (sgn(cert.sr.evaluate(assign)) != 0) {
      rec.vanishing_ok = false;
      break;
    }
  }
  return rec;
}

std::optional<std::vector<Rat>> reconstruct_solution(const ResultantCertificate& cert,
                                                     const GenericSystem& sys,
                                                     const std::map<SVar, Rat>& specialization)
{
  if (sgn(cert.sr.evaluate(specialization)) != 0)
    throw std::invalid_argument("the resultant does not vanish at the specialization");

  std::vector<std::pair<int, int>> slots;  // (block, k>=1) for blocks present in SR
  for (int i = 0; i < sys.poly_count(); ++i) {
    if (!cert.orders[static_cast<std::size_t>(i)].finite())
      continue;
    for (int k = 1; k < sys.block_size(i); ++k)
      slots.push_back({i, k});
  }

  std::map<SVar, int> coord_of;
  std::vector<LaurentMonomial> quotients;
  for (const auto& [i, k] : slots) {
    LaurentMonomial q = sys.norm_slot_monomial(i, k).mul(sys.norm_slot_monomial(i, 0).inverse());
    for (const auto& [v, e] : q.exponents())
      coord_of.emplace(v, static_cast<int>(coord_of.size()));
    quotients.push_back(std::move(q));
  }

  // partial-derivative ratios at the least order of each block
  std::map<std::pair<int, int>, Rat> ratio;
  auto ratio_of = [&](int i, int k) -> const Rat& {
    auto it = ratio.find({i, k});
    if (it != ratio.end())
      return it->second;
    ExtInt lord = ExtInt::neg_inf();
    for (int kk = 0; kk < sys.block_size(i); ++kk) {
      ExtInt l = order_stats(cert.sr, sys.table().coeff_var(i, kk)).lord;
      if (l.finite())
        lord = lord.finite() ? ext_min(lord, l) : l;
    }
    int shift = static_cast<int>(lord.value());
    Rat den = cert.sr.partial(SVar{sys.table().coeff_var(i, 0), shift}).evaluate(specialization);
    if (sgn(den) == 0)
      throw DegenerateSpecializationError();
    Rat num = cert.sr.partial(SVar{sys.table().coeff_var(i, k), shift}).evaluate(specialization);
    if (sgn(num) == 0)
      throw DegenerateSpecializationError();
    return ratio.emplace(std::make_pair(i, k), num / den).first->second;
  };

  std::vector<Rat> xi;
  for (int j = 0; j < sys.n(); ++j) {
    // solve sum d_s * quotient_s = e_{y_j}
    SparseMatrixQ aug(static_cast<int>(coord_of.size()), static_cast<int>(slots.size()) + 1);
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (const auto& [v, e] : quotients[s].exponents())
        aug.add(coord_of.at(v), static_cast<int>(s), Rat(e));
    auto it = coord_of.find(SVar{j, 0});
    if (it == coord_of.end())
      return std::nullopt;  // y_j is not in the quotient lattice
    aug.add(it->second, static_cast<int>(slots.size()), Rat(-1));
    auto w = solve_for_nonzero_projection(aug, {static_cast<int>(slots.size())});
    if (!w)
      return std::nullopt;  // lattice condition unsolvable
    Rat last = (*w)[slots.size()];
    Rat val(1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      Rat dexp = (*w)[s] / last;
      if (sgn(dexp) == 0)
        continue;
      const Rat& r = ratio_of(slots[s].first, slots[s].second);
      // rational exponent p/q: exact q-th root, then integer power
      Int p = dexp.get_num(), q = dexp.get_den();
      Rat root;
      if (!rat_root(r, mpz_get_ui(q.get_mpz_t()), root))
        return std::nullopt;
      val *= rat_pow(root, mpz_get_si(p.get_mpz_t()));
    }
    xi.push_back(val);
  }
  return xi;
}

bool satisfies_system(const GenericSystem& sys, const std::map<SVar, Rat>& specialization,
                      const std::vector<Rat>& xi)
{
  for (const auto& v : xi)
    if (sgn(v) == 0)
      return false;
  std::map<SVar, Rat> assign = specialization;
  long maxshift = 0;
  for (int i = 0; i < sys.poly_count(); ++i)
    for (const auto& v : sys.poly(i).variables())
      maxshift = std::max(maxshift, static_cast<long>(v.shift));
  for (int j = 0; j < sys.n(); ++j)
    for (long l = 0; l <= maxshift; ++l)
      assign[SVar{j, static_cast<int>(l)}] = xi[static_cast<std::size_t>(j)];
  for (int i = 0; i < sys.poly_count(); ++i)
    if (sgn(sys.poly(i).evaluate(assign)) != 0)
      return false;
  return true;
}

}  // namespace sdres
