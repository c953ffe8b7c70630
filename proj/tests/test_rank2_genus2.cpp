#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nazeta/errors.hpp"
#include "nazeta/rank2_genus2.hpp"

#include <cmath>
#include <cstdio>

using namespace nazeta;

namespace {

Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Rank2Input input_q3() {
  Field F = Field::make(3, 1);
  return rank2_input_from_curve(make_curve(F, {1, 0, 0, 0, 0, 1}));
}

Rank2Input input_for(uint64_t p) {
  Field F = Field::make(p, 1);
  return rank2_input_from_curve(make_curve(F, {1, 0, 0, 0, 0, 1}));
}

} // namespace

TEST_CASE("rank-2 input extraction and validation") {
  Rank2Input in = input_q3();
  CHECK(in.n1 == Rational(4));
  CHECK(in.h == Rational(10));
  CHECK(in.w_count == 2);
  CHECK(in.z.q() == 3);

  // Genus-1 numerators are rejected: the explicit formulas are genus-2.
  ArtinZeta elliptic(3, 1, Poly({Rational(1), Rational(0), Rational(3)}));
  CHECK_THROWS_AS((void)make_rank2_input(elliptic, 0), input_error);
}

TEST_CASE("degree-level masses match the hand-derived stratification") {
  Rank2Input in = input_q3();

  CHECK(beta2_line(in, 0) == rat(175, 8));
  CHECK(beta2_line(in, 1) == Rational(20));
  CHECK(beta2_degree(in, 0) == rat(875, 4));
  CHECK(beta2_degree(in, 1) == Rational(200));

  // Spot check against the fully expanded stratum sum at d = 0, q = 3:
  // total 27/2 * 365/216 = 365/16, minus strata 10 * 3 / (4 * 8) = 15/16.
  CHECK(beta2_line(in, 0) == rat(365, 16) - rat(15, 16));

  CHECK_THROWS_AS((void)beta2_line(in, 2), input_error);
  CHECK_THROWS_AS((void)beta2_line(in, -1), input_error);
  CHECK_THROWS_AS((void)beta2_degree(in, 5), input_error);
}

TEST_CASE("printed closed form overshoots by class-number powers") {
  Rank2Input in = input_q3();

  // Exponent-3 reading at q = 3: negative at odd degree, an impossible mass.
  CHECK(beta2_closed_form(in, 0, 3) == rat(1075, 8));
  CHECK(beta2_closed_form(in, 1, 3) == rat(-425, 8));
  CHECK(beta2_closed_form(in, 1, 3).is_negative());
  CHECK(beta2_closed_form(in, 0, 4) == rat(-5675, 8));
  CHECK(beta2_closed_form(in, 1, 4) == rat(-20675, 8));

  // The three readings share the leading term q^3 zeta(2) h / (q-1) and
  // their strata terms sit in exact ratio h : h^2 : h^3.
  Rational first = rat(1825, 8);
  for (int d = 0; d <= 1; ++d) {
    Rational t_dr = first - beta2_degree(in, d);
    Rational t3 = first - beta2_closed_form(in, d, 3);
    Rational t4 = first - beta2_closed_form(in, d, 4);
    CHECK(t3 == in.h * t_dr);
    CHECK(t4 == in.h * t3);
  }

  CHECK_THROWS_AS((void)beta2_closed_form(in, 0, 2), input_error);
  CHECK_THROWS_AS((void)beta2_closed_form(in, 0, 5), input_error);
  CHECK_THROWS_AS((void)beta2_closed_form(in, 2, 3), input_error);
}

TEST_CASE("gamma values at degrees 0..2") {
  Rank2Input in = input_q3();
  CHECK(gamma2g2(in, 0) == Rational(15));
  CHECK(gamma2g2(in, 1) == Rational(40));
  CHECK(gamma2g2(in, 2) == rat(311, 2));
  CHECK_THROWS_AS((void)gamma2g2(in, 3), input_error);
  CHECK_THROWS_AS((void)gamma2g2(in, -1), input_error);
}

TEST_CASE("assembled table and numerator for the base curve") {
  Rank2Input in = input_q3();
  InvariantTable t = rank2_genus2_table(in);
  CHECK(t.r == 2);
  CHECK(t.q == 3);
  CHECK(t.g == 2);
  REQUIRE(t.alpha_core.size() == 3);
  CHECK(t.alpha_core[0] == rat(935, 4));
  CHECK(t.alpha_core[1] == Rational(240));
  CHECK(t.alpha_core[2] == rat(1497, 4));
  REQUIRE(t.beta_core.size() == 2);
  CHECK(t.beta_core[0] == rat(875, 4));
  CHECK(t.beta_core[1] == Rational(200));

  NonAbelianZeta z2 = assemble_rank2_genus2(in);
  Poly expected(std::vector<Rational>{Rational(15), Rational(40), rat(11, 2),
                                      Rational(120), Rational(465),
                                      Rational(360), rat(99, 2),
                                      Rational(1080), Rational(1215)});
  CHECK(z2.numerator() == expected);
  CHECK(functional_dual(z2.numerator(), 3, 8) == z2.numerator());

  RationalFn Z = zeta_rational(z2);
  TruncatedSeries S = series_expand(Z.num, Z.den, 2);
  CHECK(S.coeff(0) == Rational(15));
  CHECK(S.coeff(1) == Rational(40));
  CHECK(S.coeff(2) == rat(311, 2));
}

TEST_CASE("second curve keeps every structural invariant") {
  Field F = Field::make(5, 1);
  Rank2Input in = rank2_input_from_curve(make_curve(F, {0, 1, 0, 0, 0, 1}));
  CHECK(in.h == Rational(36));
  CHECK(in.n1 == Rational(6));
  CHECK(in.w_count == 2);

  CHECK(gamma2g2(in, 0) == Rational(45));
  CHECK(gamma2g2(in, 1) == Rational(216));
  CHECK(beta2_line(in, 0).is_positive());
  CHECK(beta2_line(in, 1).is_positive());
  CHECK(beta2_line(in, 0) <= siegel_mass(in.z, 2));
  CHECK(beta2_line(in, 1) <= siegel_mass(in.z, 2));

  NonAbelianZeta z2 = assemble_rank2_genus2(in);
  CHECK(z2.numerator().degree() == 8);
  CHECK(functional_dual(z2.numerator(), 5, 8) == z2.numerator());

  RationalFn Z = zeta_rational(z2);
  TruncatedSeries S = series_expand(Z.num, Z.den, 2);
  for (int d = 0; d <= 2; ++d)
    CHECK(S.coeff(d) == gamma2g2(in, d));
}

TEST_CASE("field sweep: functional equation, masses, pairing, asymptotics") {
  double prev_q_over_gamma0 = 1e300;
  double prev_alpha0_ratio = 1e300;
  for (uint64_t p : {3ull, 11ull, 31ull, 41ull}) {
    CAPTURE(p);
    Rank2Input in = input_for(p);
    NonAbelianZeta z2 = assemble_rank2_genus2(in);
    const Poly& P = z2.numerator();

    CHECK(functional_dual(P, p, 8) == P);
    RationalFn Z = zeta_rational(z2);
    TruncatedSeries S = series_expand(Z.num, Z.den, 2);
    for (int d = 0; d <= 2; ++d)
      CHECK(S.coeff(d) == gamma2g2(in, d));

    // Root multiset stable under omega -> q/omega.
    const auto& roots = z2.reciprocal_roots();
    REQUIRE(roots.size() == 8);
    double pairing = 0.0;
    for (const auto& w : roots) {
      std::complex<double> partner = static_cast<double>(p) / w;
      double best = 1e300;
      for (const auto& v : roots)
        best = std::min(best, std::abs(partner - v));
      pairing = std::max(pairing, best);
    }
    CHECK(pairing < 1e-6);

    Rational cap = siegel_mass(in.z, 2);
    InvariantTable t = rank2_genus2_table(in);
    for (int d = 0; d <= 1; ++d) {
      Rational bl = beta2_line(in, d);
      CHECK(bl.is_positive());
      CHECK(bl <= cap);
    }
    for (long d = 0; d <= 4; ++d)
      CHECK(clifford_ok(t, d));

    // Growth ratios stay bounded across the sweep and the two scaled ones
    // decrease monotonically in q. Observed values:
    //   q        beta0/q^4  beta1/q^4  q/gamma0   alpha0/q^6
    //   3        2.700617   2.469136   0.200000   0.320645
    //   11       0.779910   0.775903   0.125000   0.006495
    //   31       0.974741   0.973838   0.034091   0.001015
    //   41       1.565721   1.564393   0.016129   0.000932
    double q4 = std::pow(static_cast<double>(p), 4.0);
    double beta0_ratio = beta2_degree(in, 0).to_double() / q4;
    double beta1_ratio = beta2_degree(in, 1).to_double() / q4;
    double q_over_gamma0 =
        static_cast<double>(p) / gamma2g2(in, 0).to_double();
    double alpha0_ratio = t.alpha_core[0].to_double() /
                          std::pow(static_cast<double>(p), 6.0);
    CHECK(beta0_ratio > 0.0);
    CHECK(beta0_ratio < 4.0);
    CHECK(beta1_ratio > 0.0);
    CHECK(beta1_ratio < 4.0);
    CHECK(q_over_gamma0 < prev_q_over_gamma0);
    CHECK(alpha0_ratio < prev_alpha0_ratio);
    prev_q_over_gamma0 = q_over_gamma0;
    prev_alpha0_ratio = alpha0_ratio;
  }
}

TEST_CASE("report passes every row on the degree-6 Weierstrass curve") {
  Field F = Field::make(11, 1);
  Rank2Input in = rank2_input_from_curve(make_curve(F, {1, 0, 0, 0, 0, 1}));
  CHECK(in.w_count == 6);

  CheckReport rep = rank2_genus2_report(in);
  CHECK(rep.all_pass());
  for (const CheckRow& r : rep.rows()) {
    CAPTURE(r.name);
    CHECK(r.status == "pass");
  }
  CHECK(rep.rows().size() >= 15);
}

TEST_CASE("report downgrades the Weierstrass row to warn at q = 3") {
  Rank2Input in = input_q3();
  CheckReport rep = rank2_genus2_report(in);
  CHECK(rep.all_pass());
  bool saw_warn = false;
  for (const CheckRow& r : rep.rows())
    if (r.status == "warn") {
      saw_warn = true;
      CHECK(r.name == "weierstrass_count_6");
    }
  CHECK(saw_warn);
}
