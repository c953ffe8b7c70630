#pragma once

// Dense univariate polynomials over the exact rationals, plus truncated power
// series and rational-function expansion. The coefficient vector is always
// trimmed (no trailing zeros); the zero polynomial has degree() == -1.

#include "nazeta/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace nazeta {

class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& a);
  // t^k with coefficient a.
  static Poly monomial(const Rational& a, size_t k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of t^i; zero beyond the stored range.
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Rational& s) const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> z) const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Monic gcd (gcd of zero polynomials is zero).
  static Poly gcd(Poly a, Poly b);
  // Resultant via the subresultant-free Euclidean sequence over Q.
  static Rational resultant(const Poly& a, const Poly& b);

  // Yun's square-free decomposition: returns pairs (factor, multiplicity)
  // with the factors square-free, pairwise coprime, and multiplicities
  // strictly increasing. Product of factor^multiplicity recovers the monic
  // part of the input.
  static std::vector<std::pair<Poly, int>> squarefree(const Poly& p);

private:
  void trim();
  std::vector<Rational> c_;
};

// Numerator/denominator pair; denominator must be nonzero where used.
struct RationalFn {
  Poly num;
  Poly den;
};

// Power-series prefix: coefficient of t^i at index i, all indices < size
// present (no trimming; trailing zeros are meaningful here).
struct TruncatedSeries {
  std::vector<Rational> c;
  Rational coeff(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
  size_t order() const { return c.size(); }
};

// Expand num/den as a power series through t^order (inclusive). Requires
// den(0) != 0; otherwise the function has a pole at the origin.
TruncatedSeries series_expand(const Poly& num, const Poly& den, size_t order);

// Functional-equation dual of a degree <= D polynomial: coefficient i of the
// result is coeff(P, D - i) * q^(i - D/2). D must be even so the exponent is
// an integer at every index; the dual is an involution, and P satisfies the
// functional equation exactly when dual(P) == P.
Poly functional_dual(const Poly& p, unsigned long q, size_t D);

} // namespace nazeta
