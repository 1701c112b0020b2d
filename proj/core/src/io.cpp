#include <sdres/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sdres {

namespace {

struct Token {
  enum Kind { Ident, Number, Plus, Minus, Star, Caret, At, Slash, Semi, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
public:
  Lexer(const std::string& text, int base_line) : text_(text), line_(base_line) {}

  Token next()
  {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size())
      return {Token::End, "", line_, col_};
    int line = line_, col = col_;
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      ++pos_;
      ++col_;
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '+': return single(Token::Plus);
      case '-': return single(Token::Minus);
      case '*': return single(Token::Star);
      case '^': return single(Token::Caret);
      case '@': return single(Token::At);
      case '/': return single(Token::Slash);
      case ';': return single(Token::Semi);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_++];
        ++col_;
      }
      return {Token::Number, s, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        s += text_[pos_++];
        ++col_;
      }
      return {Token::Ident, s, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_, col_ = 1;
};

struct RawFactor {
  std::string name;
  int shift = 0;
  long exp = 1;
  int line, col;
};

struct RawTerm {
  Rat coeff = Rat(1);
  std::vector<RawFactor> factors;
  int line, col;
};

struct RawPoly {
  std::vector<RawTerm> terms;
};

class PolyParser {
public:
  explicit PolyParser(Lexer& lex) : lex_(lex) { advance(); }

  std::vector<RawPoly> parse_all()
  {
    std::vector<RawPoly> polys;
    if (cur_.kind == Token::End)
      return polys;
    polys.push_back(parse_poly());
    while (cur_.kind == Token::Semi) {
      advance();
      if (cur_.kind == Token::End)
        break;  // trailing semicolon
      polys.push_back(parse_poly());
    }
    if (cur_.kind != Token::End)
      throw ParseError(cur_.line, cur_.col, "expected ';' or end of input");
    return polys;
  }

private:
  void advance() { cur_ = lex_.next(); }

  RawPoly parse_poly()
  {
    RawPoly p;
    bool neg = false;
    if (cur_.kind == Token::Minus) {
      neg = true;
      advance();
    } else if (cur_.kind == Token::Plus) {
      advance();
    }
    p.terms.push_back(parse_term(neg));
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      bool minus = cur_.kind == Token::Minus;
      advance();
      p.terms.push_back(parse_term(minus));
    }
    return p;
  }

  RawTerm parse_term(bool negated)
  {
    RawTerm t;
    t.line = cur_.line;
    t.col = cur_.col;
    bool any = false;
    if (cur_.kind == Token::Number) {
      t.coeff = parse_rational();
      any = true;
      if (cur_.kind == Token::Star)
        advance();
    }
    while (cur_.kind == Token::Ident) {
      t.factors.push_back(parse_factor());
      any = true;
      if (cur_.kind == Token::Star) {
        advance();
        if (cur_.kind != Token::Ident && cur_.kind != Token::Number)
          throw ParseError(cur_.line, cur_.col, "expected a factor after '*'");
        if (cur_.kind == Token::Number)
          throw ParseError(cur_.line, cur_.col, "numeric factor must lead its term");
      }
    }
    if (!any)
      throw ParseError(cur_.line, cur_.col, "expected a term");
    if (negated)
      t.coeff = -t.coeff;
    return t;
  }

  Rat parse_rational()
  {
    Int num(cur_.text);
    advance();
    Int den(1);
    if (cur_.kind == Token::Slash) {
      advance();
      if (cur_.kind != Token::Number)
        throw ParseError(cur_.line, cur_.col, "expected a denominator");
      den = Int(cur_.text);
      if (sgn(den) == 0)
        throw ParseError(cur_.line, cur_.col, "zero denominator");
      advance();
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  RawFactor parse_factor()
  {
    RawFactor f;
    f.name = cur_.text;
    f.line = cur_.line;
    f.col = cur_.col;
    advance();
    if (cur_.kind == Token::At) {
      advance();
      if (cur_.kind != Token::Number)
        throw ParseError(cur_.line, cur_.col, "expected a transform order after '@'");
      f.shift = std::stoi(cur_.text);
      advance();
    }
    if (cur_.kind == Token::Caret) {
      advance();
      bool neg = false;
      if (cur_.kind == Token::Minus) {
        neg = true;
        advance();
      }
      if (cur_.kind != Token::Number)
        throw ParseError(cur_.line, cur_.col, "expected an exponent after '^'");
      f.exp = std::stol(cur_.text);
      if (neg)
        f.exp = -f.exp;
      if (f.exp == 0)
        throw ParseError(cur_.line, cur_.col, "zero exponent");
      advance();
    }
    return f;
  }

  Lexer& lex_;
  Token cur_;
};

// u<digit><digit> or u<digits>_<digits>
bool coeff_name(const std::string& s, int& block, int& slot)
{
  if (s.size() < 2 || s[0] != 'u')
    return false;
  auto underscore = s.find('_');
  if (underscore != std::string::npos) {
    std::string a = s.substr(1, underscore - 1), b = s.substr(underscore + 1);
    if (a.empty() || b.empty())
      return false;
    for (char c : a + b)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    block = std::stoi(a);
    slot = std::stoi(b);
    return true;
  }
  if (s.size() != 3)
    return false;
  if (!std::isdigit(static_cast<unsigned char>(s[1])) ||
      !std::isdigit(static_cast<unsigned char>(s[2])))
    return false;
  block = s[1] - '0';
  slot = s[2] - '0';
  return true;
}

struct HeaderInfo {
  int version = 1;
  std::vector<std::string> declared_main;
  std::map<std::string, std::string> options;
  std::string body;
  int body_base_line = 1;
};

HeaderInfo split_header(const std::string& text)
{
  HeaderInfo h;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string body;
  bool in_body = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto notspace = [](char c) { return !std::isspace(static_cast<unsigned char>(c)); };
    trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), notspace));
    if (!in_body) {
      if (trimmed.empty() || trimmed[0] == '#')
        continue;
      std::istringstream ls(trimmed);
      std::string word;
      ls >> word;
      if (word == "version") {
        int v;
        if (!(ls >> v))
          throw ParseError(lineno, 1, "malformed version line");
        h.version = v;
        continue;
      }
      if (word == "main") {
        std::string name;
        while (ls >> name)
          h.declared_main.push_back(name);
        continue;
      }
      if (word == "option") {
        std::string key, value;
        if (!(ls >> key >> value))
          throw ParseError(lineno, 1, "malformed option line");
        h.options[key] = value;
        continue;
      }
      in_body = true;
      h.body_base_line = lineno;
    }
    body += line;
    body += "\n";
  }
  h.body = body;
  return h;
}

DiffPoly raw_to_poly(const RawPoly& raw, const VarTable& table)
{
  std::vector<Term> ts;
  for (const auto& term : raw.terms) {
    std::map<SVar, int> exps;
    for (const auto& f : term.factors) {
      int id = -1;
      int b, s;
      if (coeff_name(f.name, b, s) && table.has_coeff_var(b, s))
        id = table.coeff_var(b, s);
      else
        id = table.find(f.name);
      if (id < 0)
        throw ParseError(f.line, f.col, "undeclared variable " + f.name);
      if (f.exp < 0 && !table.is_main(id))
        throw ParseError(f.line, f.col, "Laurent exponent on coefficient variable " + f.name);
      exps[SVar{id, f.shift}] += static_cast<int>(f.exp);
    }
    std::vector<std::pair<SVar, int>> pairs(exps.begin(), exps.end());
    ts.push_back({LaurentMonomial::from_pairs(std::move(pairs)), term.coeff});
  }
  return DiffPoly::from_terms(std::move(ts));
}

}  // namespace

SystemDocument parse_document(const std::string& text)
{
  HeaderInfo h = split_header(text);
  Lexer lex(h.body, h.body_base_line);
  PolyParser parser(lex);
  std::vector<RawPoly> raws = parser.parse_all();
  if (raws.empty())
    throw ParseError(1, 1, "empty document");

  SystemDocument doc;
  doc.version = h.version;
  doc.declared_main = h.declared_main;
  doc.options = h.options;
  doc.table = std::make_shared<VarTable>();

  // main vars first: declared order, then first appearance
  std::vector<std::string> mains = h.declared_main;
  std::set<std::string> seen(mains.begin(), mains.end());
  std::map<std::pair<int, int>, std::pair<int, int>> coeff_pos;  // (i,k) -> (line,col)
  for (const auto& raw : raws)
    for (const auto& term : raw.terms)
      for (const auto& f : term.factors) {
        int b, s;
        if (coeff_name(f.name, b, s)) {
          coeff_pos.emplace(std::make_pair(b, s), std::make_pair(f.line, f.col));
          continue;
        }
        if (!seen.count(f.name)) {
          seen.insert(f.name);
          mains.push_back(f.name);
        }
      }
  for (const auto& name : mains)
    doc.table->add_main(name);
  for (const auto& [bs, pos] : coeff_pos) {
    std::string name = (bs.first <= 9 && bs.second <= 9)
                           ? "u" + std::to_string(bs.first) + std::to_string(bs.second)
                           : "u" + std::to_string(bs.first) + "_" + std::to_string(bs.second);
    doc.table->add_coeff(name, bs.first, bs.second);
  }

  for (const auto& raw : raws)
    doc.polys.push_back(raw_to_poly(raw, *doc.table));

  // generic-shape validation; leave system empty when it fails
  int np = static_cast<int>(raws.size());
  bool generic = doc.table->main_count() >= 1;
  std::vector<std::vector<LaurentMonomial>> supports(static_cast<std::size_t>(np));
  for (int i = 0; i < np && generic; ++i) {
    const RawPoly& raw = raws[static_cast<std::size_t>(i)];
    std::map<int, LaurentMonomial> slot_monomials;
    for (const auto& term : raw.terms) {
      int block = -1, slot = -1;
      std::vector<std::pair<SVar, int>> mains_only;
      int coeff_count = 0;
      for (const auto& f : term.factors) {
        int b, s;
        if (coeff_name(f.name, b, s)) {
          ++coeff_count;
          block = b;
          slot = s;
          if (f.exp != 1 || f.shift != 0)
            generic = false;
        } else {
          int id = doc.table->find(f.name);
          mains_only.push_back({SVar{id, f.shift}, static_cast<int>(f.exp)});
        }
      }
      if (coeff_count != 1 || block != i || term.coeff != 1) {
        generic = false;
        break;
      }
      std::map<SVar, int> merged;
      for (auto& [v, e] : mains_only)
        merged[v] += e;
      std::vector<std::pair<SVar, int>> pairs(merged.begin(), merged.end());
      LaurentMonomial mon = LaurentMonomial::from_pairs(std::move(pairs));
      if (slot_monomials.count(slot)) {
        generic = false;
        break;
      }
      slot_monomials[slot] = std::move(mon);
    }
    if (!generic)
      break;
    int l = static_cast<int>(slot_monomials.size()) - 1;
    if (l < 1) {
      generic = false;
      break;
    }
    for (int kslot = 0; kslot <= l; ++kslot) {
      auto it = slot_monomials.find(kslot);
      if (it == slot_monomials.end()) {
        generic = false;
        break;
      }
      supports[static_cast<std::size_t>(i)].push_back(it->second);
    }
    std::set<LaurentMonomial> dedupe(supports[static_cast<std::size_t>(i)].begin(),
                                     supports[static_cast<std::size_t>(i)].end());
    if (dedupe.size() != supports[static_cast<std::size_t>(i)].size())
      throw ParseError(1, 1, "duplicate monomial in one support (polynomial " +
                                 std::to_string(i) + ")");
  }
  if (generic) {
    try {
      doc.system.emplace(doc.table, std::move(supports));
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  return doc;
}

GenericSystem parse_system(const std::string& text)
{
  SystemDocument doc = parse_document(text);
  if (!doc.system)
    throw ParseError(1, 1, "document is not a generic coefficient system");
  return *doc.system;
}

namespace {

std::string monomial_to_text(const LaurentMonomial& m, const VarTable& table)
{
  if (m.is_one())
    return "1";
  std::string s;
  for (const auto& [v, e] : m.exponents()) {
    if (!s.empty())
      s += "*";
    s += table.info(v.var).name;
    if (v.shift > 0)
      s += "@" + std::to_string(v.shift);
    if (e != 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string poly_to_text(const DiffPoly& p, const VarTable& table)
{
  if (p.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0)
        c = -c;
    }
    std::string mono = monomial_to_text(t.mon, table);
    if (c != 1 || mono == "1") {
      s += c.get_str();
      if (mono != "1")
        s += "*";
    }
    if (mono != "1")
      s += mono;
    first = false;
  }
  return s;
}

std::string print_system(const GenericSystem& sys)
{
  std::string s = "version 1\nmain";
  for (int j = 0; j < sys.n(); ++j)
    s += " " + sys.table().info(j).name;
  s += "\n";
  for (int i = 0; i < sys.poly_count(); ++i) {
    s += poly_to_text(sys.poly(i), sys.table());
    if (i + 1 < sys.poly_count())
      s += ";\n";
    else
      s += "\n";
  }
  return s;
}

DiffPoly parse_poly(const std::string& text, const VarTable& table)
{
  Lexer lex(text, 1);
  PolyParser parser(lex);
  auto raws = parser.parse_all();
  if (raws.size() != 1)
    throw ParseError(1, 1, "expected a single polynomial");
  return raw_to_poly(raws[0], table);
}

std::string certificate_to_text(const ResultantCertificate& cert, const VarTable& table)
{
  std::string s = poly_to_text(cert.sr, table);
  s += "\norders:";
  for (const auto& o : cert.orders)
    s += " " + o.str();
  s += "\ndegree: " + std::to_string(cert.degree);
  s += "\nengine: " + cert.engine;
  s += "\nverified: vanishing=";
  s += cert.verification.vanishing_ok ? "ok" : "FAIL";
  s += " homogeneity=";
  s += cert.verification.homogeneity_ok ? "ok" : "FAIL";
  s += " trials=" + std::to_string(cert.verification.trials);
  s += "\n";
  return s;
}

namespace {

nlohmann::json rat_json(const Int& v)
{
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x > -(1L << 53) && x < (1L << 53))
      return nlohmann::json(x);
  }
  return nlohmann::json(v.get_str());
}

nlohmann::json ext_json(const ExtInt& v)
{
  if (!v.finite())
    return nullptr;
  return nlohmann::json(v.value());
}

}  // namespace

std::string certificate_to_json(const ResultantCertificate& cert, const VarTable& table)
{
  nlohmann::json j;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : cert.sr.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [v, e] : t.mon.exponents())
      mono.push_back({table.info(v.var).name, v.shift, e});
    terms.push_back({rat_json(t.coeff.get_num()), rat_json(t.coeff.get_den()), mono});
  }
  j["resultant"] = terms;
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : cert.orders)
    orders.push_back(ext_json(o));
  j["orders"] = orders;
  j["degree"] = cert.degree;
  j["engine"] = cert.engine;
  nlohmann::json ver;
  ver["trials"] = cert.verification.trials;
  ver["vanishing"] = cert.verification.vanishing_ok;
  ver["homogeneity"] = cert.verification.homogeneity_ok;
  ver["layers"] = cert.verification.layers;
  j["verification"] = ver;
  return j.dump();
}

std::string bounds_to_text(const BoundReport& rep)
{
  auto vec = [](const std::vector<ExtInt>& v) {
    std::string s;
    for (const auto& x : v)
      s += " " + x.str();
    return s;
  };
  std::string s;
  s += "super-essential:";
  for (int i : rep.super_essential)
    s += " " + std::to_string(i);
  s += "\njacobi:" + vec(rep.jacobi);
  s += "\nmodified:" + vec(rep.modified);
  s += "\nsubsystem:" + vec(rep.subsystem);
  s += "\ngamma_low: " + std::to_string(rep.gamma_low);
  s += "\ns_low:" + vec(rep.s_low);
  s += "\ns_low_sum: " + std::to_string(rep.s_low_sum);
  s += "\nm_max: " + std::to_string(rep.m_max);
  s += "\neord_bound:" + vec(rep.eord_bound);
  s += "\norder_bound_eord:" + vec(rep.order_bound_eord);
  s += "\nfinal:" + vec(rep.final_bound);
  bool any_clamp = false;
  for (bool c : rep.clamped)
    any_clamp = any_clamp || c;
  if (any_clamp) {
    s += "\nclamped:";
    for (std::size_t i = 0; i < rep.clamped.size(); ++i)
      if (rep.clamped[i])
        s += " " + std::to_string(i);
  }
  s += "\n";
  return s;
}

std::string bounds_to_json(const BoundReport& rep)
{
  nlohmann::json j;
  auto vec = [](const std::vector<ExtInt>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v)
      a.push_back(ext_json(x));
    return a;
  };
  j["super_essential"] = rep.super_essential;
  j["jacobi"] = vec(rep.jacobi);
  j["modified"] = vec(rep.modified);
  j["subsystem"] = vec(rep.subsystem);
  j["gamma_low"] = rep.gamma_low;
  j["s_low"] = vec(rep.s_low);
  j["s_low_sum"] = rep.s_low_sum;
  j["m_max"] = rep.m_max;
  j["eord_bound"] = vec(rep.eord_bound);
  j["order_bound_eord"] = vec(rep.order_bound_eord);
  j["final"] = vec(rep.final_bound);
  j["clamped"] = rep.clamped;
  return j.dump();
}

std::string dense_report_to_text(const DenseResultantReport& rep)
{
  std::string s;
  s += "block-orders:";
  for (const auto& o : rep.block_orders)
    s += " " + o.str();
  s += "\ndegree-cap: " + rep.degree_cap.get_str();
  if (rep.degrees_available) {
    s += "\nblock-degrees:";
    for (const auto& d : rep.block_degrees)
      s += " " + d.get_str();
    s += "\ntotal-degree: " + rep.total_degree.get_str();
  }
  if (rep.guard_exceeded)
    s += "\nresultant: skipped (size guard exceeded)";
  s += "\n";
  if (rep.certificate)
    s += certificate_to_text(*rep.certificate, *rep.table);
  return s;
}

std::string dense_report_to_json(const DenseResultantReport& rep)
{
  nlohmann::json j;
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : rep.block_orders)
    orders.push_back(ext_json(o));
  j["block_orders"] = orders;
  j["degree_cap"] = rat_json(rep.degree_cap);
  j["degrees_available"] = rep.degrees_available;
  if (rep.degrees_available) {
    nlohmann::json bd = nlohmann::json::array();
    for (const auto& d : rep.block_degrees)
      bd.push_back(rat_json(d));
    j["block_degrees"] = bd;
    j["total_degree"] = rat_json(rep.total_degree);
  }
  j["guard_exceeded"] = rep.guard_exceeded;
  if (rep.certificate)
    j["certificate"] = nlohmann::json::parse(certificate_to_json(*rep.certificate, *rep.table));
  return j.dump();
}

}  // namespace sdres
