#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nazeta/errors.hpp"
#include "nazeta/roots.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace nazeta;

namespace {

Poly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c)
    v.emplace_back(x);
  return Poly(std::move(v));
}

// Rebuild lc * prod (t - z)^m from the computed roots and compare
// coefficientwise against the input at relative tolerance.
double reconstruction_error(const Poly& p,
                            const std::vector<std::pair<std::complex<double>, int>>& roots) {
  std::vector<std::complex<double>> c{p.leading().to_double()};
  for (const auto& [z, m] : roots) {
    for (int k = 0; k < m; ++k) {
      std::vector<std::complex<double>> next(c.size() + 1, {0.0, 0.0});
      for (size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= z * c[i];
      }
      c = std::move(next);
    }
  }
  // The convolution builds bottom-up, so c[i] is the coefficient of t^i.
  double scale = 0.0, err = 0.0;
  for (size_t i = 0; i < c.size(); ++i)
    scale = std::max(scale, std::abs(p.coeff(i).to_double()));
  for (size_t i = 0; i < c.size(); ++i)
    err = std::max(err, std::abs(c[i] - p.coeff(i).to_double()));
  return err / scale;
}

} // namespace

TEST_CASE("linear and quadratic roots are exact formulas") {
  auto r = find_roots(poly({-6, 2}));  // 2t - 6
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == std::complex<double>(3.0, 0.0));
  CHECK(r[0].second == 1);

  // 1 - t - t^2 has reciprocal golden-ratio roots (-1 +- sqrt 5)/2.
  auto g = find_roots(poly({1, -1, -1}));
  REQUIRE(g.size() == 2);
  const double s5 = std::sqrt(5.0);
  CHECK(g[0].first.real() == doctest::Approx((-1.0 - s5) / 2.0).epsilon(1e-14));
  CHECK(g[1].first.real() == doctest::Approx((-1.0 + s5) / 2.0).epsilon(1e-14));
  CHECK(g[0].first.imag() == 0.0);
  CHECK(g[1].first.imag() == 0.0);
}

TEST_CASE("complex conjugate pairs") {
  // t^2 + 1 = 0 at +-i.
  auto r = find_roots(poly({1, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].first.imag() == doctest::Approx(-1.0));
  CHECK(r[1].first.imag() == doctest::Approx(1.0));
  CHECK(r[0].first.real() == doctest::Approx(0.0));
}

TEST_CASE("multiplicities come from the exact square-free split") {
  // (1 + 3t^2)^2: double roots at +-i/sqrt(3).
  Poly p = poly({1, 0, 3}) * poly({1, 0, 3});
  auto r = find_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0].second == 2);
  CHECK(r[1].second == 2);
  CHECK(r[0].first.imag() == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(r[1].first.imag() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(reconstruction_error(p, r) < 1e-8);
}

TEST_CASE("higher degree with mixed real and complex roots") {
  // (t-1)(t-2)(t^2+t+1)(t^2+4): degree 6, two real roots, two conjugate pairs.
  Poly p = poly({-1, 1}) * poly({-2, 1}) * poly({1, 1, 1}) * poly({4, 0, 1});
  auto r = find_roots(p);
  REQUIRE(r.size() == 6);
  for (const auto& [z, m] : r)
    CHECK(m == 1);
  CHECK(reconstruction_error(p, r) < 1e-8);
  // Roots sorted by (real, imag): -1/2 +- sqrt(3)/2 i first, then +-2i, 1, 2.
  CHECK(r[0].first.real() == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(r[5].first.real() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("weil-type polynomial roots pair off at modulus sqrt q") {
  // 1 + 9t^4 over q = 3: reciprocal roots of modulus sqrt(3) in conjugate
  // quadruple; the polynomial's roots have modulus 3^(-1/4)... the point of
  // this case is only that all moduli agree and reconstruction is tight.
  Poly p = poly({1, 0, 0, 0, 9});
  auto r = find_roots(p);
  REQUIRE(r.size() == 4);
  for (const auto& [z, m] : r)
    CHECK(std::abs(z) == doctest::Approx(std::pow(9.0, -0.25)).epsilon(1e-12));
  CHECK(reconstruction_error(p, r) < 1e-10);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(find_roots(poly({7})), input_error);
  CHECK_THROWS_AS(find_roots(Poly()), input_error);
}

TEST_CASE("large coefficient spread still reconstructs") {
  // (t - 1000)(t - 1/1000)(t^2 + t + 41)
  Poly p = poly({-1000, 1}) *
           Poly(std::vector<Rational>{Rational::from_string("-1/1000"), Rational(1)}) *
           poly({41, 1, 1});
  auto r = find_roots(p);
  REQUIRE(r.size() == 4);
  CHECK(reconstruction_error(p, r) < 1e-8);
}
