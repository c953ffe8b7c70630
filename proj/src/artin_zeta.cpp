#include "nazeta/artin_zeta.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace nazeta {

struct ArtinZeta::RootCache {
  std::once_flag once;
  std::vector<std::complex<double>> roots;
};

ArtinZeta::ArtinZeta(uint64_t q, unsigned g, Poly numerator)
    : q_(q), g_(g), num_(std::move(numerator)), roots_(std::make_shared<RootCache>()) {
  if (q < 2)
    throw input_error("zeta base q must be >= 2");
  if (num_.degree() != static_cast<long>(2 * g))
    throw math_error("zeta numerator must have degree 2g = " + std::to_string(2 * g) +
                     ", got " + std::to_string(num_.degree()));
  if (num_.coeff(0) != Rational(1))
    throw math_error("zeta numerator must have constant term 1");
  if (functional_dual(num_, q, 2 * g) != num_)
    throw math_error("zeta numerator violates the functional-equation symmetry "
                     "a_{2g-i} = a_i q^{g-i}");
}

ArtinZeta ArtinZeta::from_curve(const HyperellipticCurve& c) {
  std::vector<uint64_t> counts;
  counts.reserve(c.genus);
  for (unsigned m = 1; m <= c.genus; ++m)
    counts.push_back(count_points(c, m));
  return ArtinZeta(c.base.q(), c.genus, zeta_from_counts(c.base.q(), c.genus, counts));
}

Rational ArtinZeta::class_number() const {
  Rational h = num_.eval(Rational(1));
  if (!h.is_positive())
    throw math_error("class number P(1) must be positive, got " + h.str());
  return h;
}

Rational ArtinZeta::zeta_value(long n) const {
  if (n < 2)
    throw input_error("zeta value at or beyond pole: need n >= 2");
  const Rational t = Rational::int_pow(q_, -n);
  const Rational qt = Rational::int_pow(q_, 1 - n);
  return num_.eval(t) / ((Rational(1) - t) * (Rational(1) - qt));
}

Rational ArtinZeta::divisor_count(unsigned d) const {
  Poly den = Poly(std::vector<Rational>{Rational(1), Rational(-1)}) *
             Poly(std::vector<Rational>{Rational(1), -Rational(BigInt(q_))});
  return series_expand(num_, den, d).coeff(d);
}

const std::vector<std::complex<double>>& ArtinZeta::reciprocal_roots() const {
  std::call_once(roots_->once, [this] {
    // P(t) = prod (1 - omega_i t), so the omega_i are the roots of the
    // reversed polynomial t^{2g} P(1/t).
    std::vector<Rational> rev(num_.coeffs().rbegin(), num_.coeffs().rend());
    auto found = find_roots(Poly(std::move(rev)));
    for (const auto& [z, mult] : found)
      for (int i = 0; i < mult; ++i)
        roots_->roots.push_back(z);
  });
  return roots_->roots;
}

double ArtinZeta::weil_deviation() const {
  const double sq = std::sqrt(static_cast<double>(q_));
  double dev = 0.0;
  for (const auto& w : reciprocal_roots())
    dev = std::max(dev, std::abs(std::abs(w) - sq));
  return dev;
}

} // namespace nazeta
