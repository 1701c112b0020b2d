#include <sdres/diffpoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace sdres {

int LaurentMonomial::exponent(SVar v) const
{
  auto it = std::lower_bound(exp_.begin(), exp_.end(), v,
                             [](const auto& p, const SVar& key) { return p.first < key; });
  if (it != exp_.end() && it->first == v)
    return it->second;
  return 0;
}

long LaurentMonomial::total_degree() const
{
  long d = 0;
  for (const auto& [v, e] : exp_)
    d += e;
  return d;
}

long LaurentMonomial::degree_in_var(int var) const
{
  long d = 0;
  for (const auto& [v, e] : exp_)
    if (v.var == var)
      d += e;
  return d;
}

LaurentMonomial LaurentMonomial::from_pairs(std::vector<std::pair<SVar, int>> pairs)
{
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LaurentMonomial m;
  for (auto& [v, e] : pairs) {
    if (e == 0)
      continue;
    if (!m.exp_.empty() && m.exp_.back().first == v)
      throw std::logic_error("duplicate svar in monomial");
    m.exp_.push_back({v, e});
  }
  return m;
}

LaurentMonomial LaurentMonomial::mul(const LaurentMonomial& o) const
{
  LaurentMonomial r;
  r.exp_.reserve(exp_.size() + o.exp_.size());
  std::size_t i = 0, j = 0;
  while (i < exp_.size() || j < o.exp_.size()) {
    if (j == o.exp_.size() || (i < exp_.size() && exp_[i].first < o.exp_[j].first)) {
      r.exp_.push_back(exp_[i++]);
    } else if (i == exp_.size() || o.exp_[j].first < exp_[i].first) {
      r.exp_.push_back(o.exp_[j++]);
    } else {
      int e = exp_[i].second + o.exp_[j].second;
      if (e != 0)
        r.exp_.push_back({exp_[i].first, e});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentMonomial LaurentMonomial::inverse() const
{
  LaurentMonomial r = *this;
  for (auto& [v, e] : r.exp_)
    e = -e;
  return r;
}

LaurentMonomial LaurentMonomial::pow(long e) const
{
  LaurentMonomial r = *this;
  if (e == 0)
    return LaurentMonomial();
  for (auto& [v, ex] : r.exp_)
    ex = static_cast<int>(ex * e);
  return r;
}

LaurentMonomial LaurentMonomial::transform(int k) const
{
  LaurentMonomial r = *this;
  for (auto& [v, e] : r.exp_)
    v.shift += k;
  return r;  // key order is preserved: shifts move uniformly
}

int LaurentMonomial::compare(const LaurentMonomial& a, const LaurentMonomial& b)
{
  long da = a.total_degree(), db = b.total_degree();
  if (da != db)
    return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.exp_.size() || j < b.exp_.size()) {
    // exponent of the earliest key present in either monomial
    int ea, eb;
    if (j == b.exp_.size() || (i < a.exp_.size() && a.exp_[i].first < b.exp_[j].first)) {
      ea = a.exp_[i].second;
      eb = 0;
      ++i;
    } else if (i == a.exp_.size() || b.exp_[j].first < a.exp_[i].first) {
      ea = 0;
      eb = b.exp_[j].second;
      ++j;
    } else {
      ea = a.exp_[i].second;
      eb = b.exp_[j].second;
      ++i;
      ++j;
    }
    if (ea != eb)
      return ea > eb ? 1 : -1;
  }
  return 0;
}

namespace {
bool is_zero_local(const Rat& c) { return sgn(c) == 0; }
}  // namespace

DiffPoly DiffPoly::constant(const Rat& c)
{
  DiffPoly p;
  if (!is_zero_local(c))
    p.terms_.push_back({LaurentMonomial(), c});
  return p;
}

DiffPoly DiffPoly::monomial(const LaurentMonomial& m, const Rat& c)
{
  DiffPoly p;
  if (!is_zero_local(c))
    p.terms_.push_back({m, c});
  return p;
}

const Term& DiffPoly::leading() const
{
  if (terms_.empty())
    throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

DiffPoly DiffPoly::from_terms(std::vector<Term> ts)
{
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return LaurentMonomial::compare(a.mon, b.mon) > 0;
  });
  DiffPoly p;
  for (auto& t : ts) {
    if (is_zero_local(t.coeff))
      continue;
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
      if (is_zero_local(p.terms_.back().coeff))
        p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const
{
  std::vector<Term> ts;
  ts.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      ts.push_back(terms_[i++]);
    } else if (i == terms_.size()) {
      ts.push_back(o.terms_[j++]);
    } else {
      int c = LaurentMonomial::compare(terms_[i].mon, o.terms_[j].mon);
      if (c > 0) {
        ts.push_back(terms_[i++]);
      } else if (c < 0) {
        ts.push_back(o.terms_[j++]);
      } else {
        Rat s = terms_[i].coeff + o.terms_[j].coeff;
        if (!is_zero_local(s))
          ts.push_back({terms_[i].mon, s});
        ++i;
        ++j;
      }
    }
  }
  DiffPoly p;
  p.terms_ = std::move(ts);
  return p;
}

DiffPoly DiffPoly::operator-() const
{
  DiffPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const { return *this + (-o); }

DiffPoly DiffPoly::scaled(const Rat& c) const
{
  if (is_zero_local(c))
    return DiffPoly();
  DiffPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff *= c;
  return p;
}

DiffPoly DiffPoly::mul_monomial(const LaurentMonomial& m, const Rat& c) const
{
  if (is_zero_local(c))
    return DiffPoly();
  DiffPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    p.terms_.push_back({t.mon.mul(m), t.coeff * c});
  // multiplying by a fixed monomial preserves the term order
  return p;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const
{
  if (is_zero() || o.is_zero())
    return DiffPoly();
  if (o.terms_.size() == 1)
    return mul_monomial(o.terms_[0].mon, o.terms_[0].coeff);
  if (terms_.size() == 1)
    return o.mul_monomial(terms_[0].mon, terms_[0].coeff);
  std::map<LaurentMonomial, Rat> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      LaurentMonomial m = a.mon.mul(b.mon);
      auto [it, fresh] = acc.emplace(std::move(m), a.coeff * b.coeff);
      if (!fresh)
        it->second += a.coeff * b.coeff;
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!is_zero_local(c))
      ts.push_back({m, c});
  std::reverse(ts.begin(), ts.end());  // map is ascending; store descending
  DiffPoly p;
  p.terms_ = std::move(ts);
  return p;
}

DiffPoly DiffPoly::pow(long e) const
{
  if (e < 0)
    throw std::domain_error("negative polynomial power");
  DiffPoly r = DiffPoly::constant(Rat(1));
  DiffPoly b = *this;
  while (e > 0) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool operator==(const DiffPoly& a, const DiffPoly& b)
{
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mon == b.terms_[i].mon) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

DiffPoly DiffPoly::transform(int k) const
{
  DiffPoly p = *this;
  for (auto& t : p.terms_)
    t.mon = t.mon.transform(k);
  return p;  // uniform shift preserves the monomial order
}

long DiffPoly::total_degree() const
{
  long d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.mon.total_degree());
  return d;
}

ExtInt DiffPoly::degree_in_svar(SVar v) const
{
  ExtInt d = ExtInt::neg_inf();
  for (const auto& t : terms_) {
    int e = t.mon.exponent(v);
    if (e != 0)
      d = ext_max(d, ExtInt(e));
  }
  return d;
}

ExtInt DiffPoly::degree_in_var(int var) const
{
  ExtInt d = ExtInt::neg_inf();
  for (const auto& t : terms_) {
    long e = t.mon.degree_in_var(var);
    bool occurs = false;
    for (const auto& [v, ex] : t.mon.exponents())
      if (v.var == var && ex != 0)
        occurs = true;
    if (occurs)
      d = ext_max(d, ExtInt(e));
  }
  return d;
}

std::vector<SVar> DiffPoly::variables() const
{
  std::vector<SVar> vs;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mon.exponents())
      vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Rat DiffPoly::evaluate(const std::map<SVar, Rat>& assignment) const
{
  Rat acc(0);
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (const auto& [sv, e] : t.mon.exponents()) {
      auto it = assignment.find(sv);
      if (it == assignment.end())
        throw std::invalid_argument("missing assignment for a shifted variable");
      if (sgn(it->second) == 0 && e < 0)
        throw std::domain_error("zero base with negative exponent");
      v *= rat_pow(it->second, e);
    }
    acc += v;
  }
  return acc;
}

DiffPoly DiffPoly::partial(SVar v) const
{
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    int e = t.mon.exponent(v);
    if (e == 0)
      continue;
    ts.push_back({t.mon.mul(LaurentMonomial::var(v, -1)), t.coeff * Rat(e)});
  }
  return from_terms(std::move(ts));
}

DiffPoly DiffPoly::normalized() const
{
  if (terms_.empty())
    return *this;
  Int num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(terms_.front().coeff) < 0)
    scale = -scale;
  return scaled(scale);
}

OrderStats order_stats(const DiffPoly& p, int var)
{
  ExtInt ord = ExtInt::neg_inf(), lord = ExtInt::neg_inf();
  bool seen = false;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mon.exponents())
      if (v.var == var && e != 0) {
        if (!seen) {
          ord = ExtInt(v.shift);
          lord = ExtInt(v.shift);
          seen = true;
        } else {
          ord = ext_max(ord, ExtInt(v.shift));
          lord = ext_min(lord, ExtInt(v.shift));
        }
      }
  OrderStats s;
  s.ord = ord;
  s.lord = lord;
  s.eord = seen ? ExtInt(ord.value() - lord.value()) : ExtInt::neg_inf();
  return s;
}

NormForm norm_form(const DiffPoly& f, const VarTable& table)
{
  if (f.is_zero())
    throw std::domain_error("norm form of zero undefined");
  // per shifted main var: min exponent over terms, counting absence as 0
  std::map<SVar, int> minexp;
  for (const auto& t : f.terms())
    for (const auto& [v, e] : t.mon.exponents())
      if (table.is_main(v.var))
        minexp.emplace(v, e);
  for (auto& [v, m] : minexp) {
    for (const auto& t : f.terms())
      m = std::min(m, t.mon.exponent(v));
  }
  std::vector<std::pair<SVar, int>> clear;
  for (const auto& [v, m] : minexp)
    if (m != 0)
      clear.push_back({v, -m});
  NormForm nf;
  nf.clearing = LaurentMonomial::from_pairs(std::move(clear));
  nf.poly = f.mul_monomial(nf.clearing);
  return nf;
}

std::optional<std::vector<long>> transformally_homogeneous_layers(
    const DiffPoly& p, const std::vector<int>& group)
{
  if (group.empty())
    throw std::invalid_argument("empty variable group");
  int max_shift = -1;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mon.exponents())
      for (int g : group)
        if (v.var == g && e != 0)
          max_shift = std::max(max_shift, v.shift);
  std::vector<long> layers(static_cast<std::size_t>(max_shift + 1), 0);
  if (max_shift < 0)
    return layers;  // group absent: trivially homogeneous, no layers
  bool first = true;
  for (const auto& t : p.terms()) {
    std::vector<long> deg(layers.size(), 0);
    for (const auto& [v, e] : t.mon.exponents())
      for (int g : group)
        if (v.var == g && v.shift <= max_shift)
          deg[v.shift] += e;
    if (first) {
      layers = deg;
      first = false;
    } else if (deg != layers) {
      return std::nullopt;
    }
  }
  return layers;
}

}  // namespace sdres
