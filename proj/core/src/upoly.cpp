#include <sdres/upoly.hpp>

#include <stdexcept>

namespace sdres {

UPoly UPoly::x_power(int k, Rat c)
{
  UPoly p;
  if (sgn(c) == 0)
    return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
  p.c_.back() = std::move(c);
  return p;
}

const Rat& UPoly::coeff(int i) const
{
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return zero;
  return c_[static_cast<std::size_t>(i)];
}

void UPoly::trim()
{
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

UPoly UPoly::from_coeffs(std::vector<Rat> cs)
{
  UPoly p;
  p.c_ = std::move(cs);
  p.trim();
  return p;
}

UPoly UPoly::operator+(const UPoly& o) const
{
  std::vector<Rat> cs(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    cs[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    cs[i] += o.c_[i];
  return from_coeffs(std::move(cs));
}

UPoly UPoly::operator-(const UPoly& o) const
{
  std::vector<Rat> cs(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    cs[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    cs[i] -= o.c_[i];
  return from_coeffs(std::move(cs));
}

UPoly UPoly::operator*(const UPoly& o) const
{
  if (is_zero() || o.is_zero())
    return UPoly();
  std::vector<Rat> cs(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      cs[i + j] += c_[i] * o.c_[j];
  return from_coeffs(std::move(cs));
}

UPoly UPoly::scaled(const Rat& c) const
{
  if (sgn(c) == 0)
    return UPoly();
  std::vector<Rat> cs = c_;
  for (auto& v : cs)
    v *= c;
  return from_coeffs(std::move(cs));
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const
{
  if (d.is_zero())
    throw std::domain_error("division by zero polynomial");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo;
  int dd = d.degree();
  const Rat& lead = d.c_.back();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd >= dd)
    quo.assign(static_cast<std::size_t>(rd - dd) + 1, Rat(0));
  while (rd >= dd) {
    while (rd >= 0 && sgn(rem[static_cast<std::size_t>(rd)]) == 0)
      --rd;
    if (rd < dd)
      break;
    Rat f = rem[static_cast<std::size_t>(rd)] / lead;
    quo[static_cast<std::size_t>(rd - dd)] = f;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(rd - dd + i)] -= f * d.c_[static_cast<std::size_t>(i)];
  }
  q = from_coeffs(std::move(quo));
  r = from_coeffs(std::move(rem));
}

Rat UPoly::eval(const Rat& x) const
{
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string UPoly::str() const
{
  if (is_zero())
    return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (sgn(c) == 0)
      continue;
    if (!s.empty())
      s += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0)
      s += "-";
    Rat a = abs(c);
    if (a != 1 || i == 0)
      s += a.get_str();
    if (i > 0) {
      if (a != 1)
        s += "*";
      s += "x";
      if (i > 1)
        s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace sdres
