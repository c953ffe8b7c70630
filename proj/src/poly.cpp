#include "nazeta/poly.hpp"

#include "nazeta/errors.hpp"

namespace nazeta {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Poly Poly::constant(const Rational& a) {
  Poly p;
  if (!a.is_zero())
    p.c_ = {a};
  return p;
}

Poly Poly::monomial(const Rational& a, size_t k) {
  Poly p;
  if (!a.is_zero()) {
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = a;
  }
  return p;
}

Rational Poly::leading() const {
  if (c_.empty())
    throw input_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_)
    a = -a;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& s) const {
  Poly r = *this;
  for (auto& a : r.c_)
    a *= s;
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1)
    return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  r.trim();
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * z + c_[i].to_double();
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero())
    throw input_error("polynomial division by zero");
  Poly q, r = a;
  const long db = b.degree();
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const long k = r.degree() - db;
    const Rational f = r.leading() / lb;
    q = q + Poly::monomial(f, static_cast<size_t>(k));
    r = r - b * Poly::monomial(f, static_cast<size_t>(k));
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  return a.scaled(Rational(1) / a.leading());
}

Rational Poly::resultant(const Poly& a, const Poly& b) {
  // res(a, b) over Q by the Euclidean recursion
  //   res(a, b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
  // with r = a mod b, bottoming out at res(a, const c) = c^(deg a).
  if (a.is_zero() || b.is_zero())
    return Rational(0);
  Poly f = a, g = b;
  Rational acc(1);
  bool flip = false;
  while (g.degree() > 0) {
    Poly r = divrem(f, g).second;
    long dr = r.is_zero() ? -1 : r.degree();
    if ((f.degree() % 2) && (g.degree() % 2))
      flip = !flip;
    if (r.is_zero())
      return Rational(0);
    acc *= Rational::pow(g.leading(), f.degree() - dr);
    f = std::move(g);
    g = std::move(r);
  }
  acc *= Rational::pow(g.coeff(0), f.degree());
  return flip ? -acc : acc;
}

std::vector<std::pair<Poly, int>> Poly::squarefree(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0)
    return out;
  Poly f = p.scaled(Rational(1) / p.leading());
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = divrem(f, a).first;
  Poly c = divrem(d, a).first;
  Poly z = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, z);
    if (g.degree() > 0)
      out.emplace_back(g, mult);
    b = divrem(b, g).first;
    Poly znext = divrem(z, g).first - b.derivative();
    z = std::move(znext);
    ++mult;
  }
  return out;
}

TruncatedSeries series_expand(const Poly& num, const Poly& den, size_t order) {
  if (den.is_zero() || den.coeff(0).is_zero())
    throw input_error("series expansion with pole at origin");
  TruncatedSeries s;
  s.c.assign(order + 1, Rational(0));
  const Rational d0inv = Rational(1) / den.coeff(0);
  for (size_t i = 0; i <= order; ++i) {
    Rational acc = num.coeff(i);
    for (size_t j = 1; j <= i; ++j)
      acc -= den.coeff(j) * s.c[i - j];
    s.c[i] = acc * d0inv;
  }
  return s;
}

Poly functional_dual(const Poly& p, unsigned long q, size_t D) {
  if (D % 2 != 0)
    throw input_error("functional dual requires an even degree bound");
  if (p.degree() > static_cast<long>(D))
    throw input_error("polynomial degree exceeds the dual's degree bound");
  std::vector<Rational> c(D + 1, Rational(0));
  const long half = static_cast<long>(D) / 2;
  for (size_t i = 0; i <= D; ++i)
    c[i] = p.coeff(D - i) * Rational::int_pow(q, static_cast<long>(i) - half);
  return Poly(std::move(c));
}

} // namespace nazeta
