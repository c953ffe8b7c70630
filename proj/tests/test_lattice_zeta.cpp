#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nazeta/errors.hpp"
#include "nazeta/lattice_zeta.hpp"

#include <complex>
#include <string>

using namespace nazeta;
using cplx = std::complex<double>;

// Reference values below were computed independently at 30-digit precision
// from the classical closed forms: the square-lattice Epstein series
// factorizes as 4 zeta(s) beta(s) (beta the Dirichlet beta function), the
// moduli-domain integral of Ehat reduces to
//   xi(s) = 2 xihat(2s)/(s-1) - 2 xihat(2s-1)/s,
// with xihat(w) = pi^{-w/2} Gamma(w/2) zeta(w), and the theta value at
// tau = i is Gamma(1/4)^2 / (2 pi^{3/2}) squared into theta3(e^{-pi})^2.

namespace {

const UpperHalfPoint kI{0.0, 1.0};
const EpsteinParams kTight{1e-13, 2000000};

UpperHalfPoint inverted(const UpperHalfPoint& tau) {
    // -1/tau, the other generator of the modular group
    double n2 = tau.x * tau.x + tau.y * tau.y;
    return {-tau.x / n2, tau.y / n2};
}

}  // namespace

TEST_CASE("complex gamma against classical values") {
    CHECK(std::abs(complex_gamma(cplx(5.0, 0.0)) - cplx(24.0, 0.0)) < 1e-12);
    CHECK(std::abs(complex_gamma(cplx(0.5, 0.0)) - cplx(1.7724538509055160, 0.0)) < 1e-13);
    // Gamma(1+i) = 0.49801566811835604 - 0.15494982830181069 i
    cplx g1i = complex_gamma(cplx(1.0, 1.0));
    CHECK(std::abs(g1i - cplx(0.49801566811835604, -0.15494982830181069)) < 1e-13);
    // Reflection side: Gamma(-0.5) = -2 sqrt(pi)
    CHECK(std::abs(complex_gamma(cplx(-0.5, 0.0)) - cplx(-3.5449077018110320, 0.0)) < 1e-12);
    // Functional identity Gamma(z+1) = z Gamma(z) off the real axis
    cplx z(0.3, 2.1);
    CHECK(std::abs(complex_gamma(z + 1.0) - z * complex_gamma(z)) < 1e-13);
    CHECK_THROWS_AS((void)complex_gamma(cplx(-3.0, 0.0)), math_error);
}

TEST_CASE("form lower bound and validation") {
    CHECK(form_lower_bound(kI) == doctest::Approx(1.0).epsilon(1e-14));
    // hexagonal corner: T = 2/sqrt(3) * ... = (1 + 1/4 + 3/4) / (sqrt(3)/2)
    UpperHalfPoint hex{-0.5, 0.8660254037844386};
    CHECK(form_lower_bound(hex) == doctest::Approx(0.5773502691896258).epsilon(1e-12));
    // The bound never exceeds the true minimum of the form: at tau = 0.5 + 5i
    // the shortest vector is (1,0) with Q = 1/y = 0.2, the eigenvalue is less.
    UpperHalfPoint tall{0.5, 5.0};
    CHECK(form_lower_bound(tall) < 0.2);
    CHECK(form_lower_bound(tall) > 0.19);
    CHECK_THROWS_WITH_AS((void)form_lower_bound(UpperHalfPoint{0.0, -1.0}),
                         "tau must lie in the upper half plane (y > 0)", input_error);
    CHECK_THROWS_AS((void)form_lower_bound(UpperHalfPoint{0.0, 0.0}), input_error);
}

TEST_CASE("theta sum: frozen value, inversion, validation") {
    // theta3(e^-pi)^2 - 1 at the square lattice
    CHECK(theta_minus_one(kI, 1.0, kTight) ==
          doctest::Approx(0.18034059901609623).epsilon(1e-12));
    // unimodular inversion theta(1/u) = u theta(u), zero vector included
    UpperHalfPoint tau{0.2, 0.9};
    for (double u : {1.3, 1.7, 2.5}) {
        double lhs = 1.0 + theta_minus_one(tau, 1.0 / u, kTight);
        double rhs = u * (1.0 + theta_minus_one(tau, u, kTight));
        CHECK(std::abs(lhs - rhs) < 1e-11);
    }
    CHECK_THROWS_AS((void)theta_minus_one(kI, 0.0, kTight), input_error);
    CHECK_THROWS_AS((void)theta_minus_one(kI, -1.0, kTight), input_error);
    CHECK_THROWS_AS((void)theta_minus_one(kI, 1.0, EpsteinParams{0.0, 100}), input_error);
}

TEST_CASE("direct Epstein sum: frozen square-lattice value and honesty") {
    // 4 zeta(2) beta(2) = 6.02681203969194012 for the raw sum at tau = i;
    // the completed value divides by pi^2 (Gamma(2) = 1).
    EpsteinParams ep{5e-8, 2000000};
    cplx d = epstein_hat_direct(kI, cplx(2.0, 0.0), ep);
    double raw = d.real() * 9.86960440108935862;  // pi^2
    CHECK(std::abs(raw - 6.02681203969194012) < 1e-6);
    CHECK(std::abs(d.imag()) < 1e-15);

    // the tail_tol contract: tightening the tolerance moves the result by
    // less than the looser tolerance
    cplx loose = epstein_hat_direct(kI, cplx(2.0, 0.0), EpsteinParams{1e-5, 2000000});
    CHECK(std::abs(loose - d) < 1e-5);

    CHECK_THROWS_WITH_AS(
        (void)epstein_hat_direct(kI, cplx(1.0, 0.0), ep),
        "divergent direct sum: the raw Epstein series needs Re s > 1", input_error);
    CHECK_THROWS_AS((void)epstein_hat_direct(kI, cplx(0.5, 3.0), ep), input_error);
    // a hopeless tolerance runs out of radius instead of spinning forever
    CHECK_THROWS_AS(
        (void)epstein_hat_direct(kI, cplx(1.2, 0.0), EpsteinParams{1e-8, 500}),
        numeric_error);
}

TEST_CASE("theta split matches the direct sum where both converge") {
    EpsteinParams split_ep{1e-10, 2000000};
    EpsteinParams direct_ep{1e-8, 2000000};
    // frozen: Ehat(i, 2) = 0.61064372945147934
    cplx sp = epstein_hat(kI, cplx(2.0, 0.0), split_ep);
    CHECK(std::abs(sp - cplx(0.61064372945147934, 0.0)) < 1e-10);
    CHECK(std::abs(sp - epstein_hat_direct(kI, cplx(2.0, 0.0), direct_ep)) < 2e-8);

    // Off the real axis the direct sum's tail bound forces a much larger
    // radius per digit (the shell bound decays like k^{2 - 2 sigma}), so
    // these points run at a looser tolerance to stay fast.
    UpperHalfPoint tau{0.2, 0.9};
    EpsteinParams loose_ep{1e-5, 2000000};
    for (cplx s : {cplx(1.8, 0.7), cplx(2.5, -1.2)}) {
        cplx a = epstein_hat(tau, s, split_ep);
        cplx b = epstein_hat_direct(tau, s, loose_ep);
        CHECK(std::abs(a - b) < 2e-5);
    }
    cplx a2 = epstein_hat(tau, cplx(2.0, 0.0), split_ep);
    cplx b2 = epstein_hat_direct(tau, cplx(2.0, 0.0), direct_ep);
    CHECK(std::abs(a2 - b2) < 2e-8);
}

TEST_CASE("completed Epstein function: reflection, modular and conjugation symmetry") {
    EpsteinParams ep{1e-11, 2000000};
    UpperHalfPoint tau{0.2, 0.9};
    // s <-> 1-s is exact for the split representation
    for (cplx s : {cplx(1.3, 0.0), cplx(2.2, 1.5), cplx(-0.7, 0.4)}) {
        cplx a = epstein_hat(tau, s, ep);
        cplx b = epstein_hat(tau, 1.0 - s, ep);
        CHECK(std::abs(a - b) < 1e-13);
    }
    // tau and -1/tau present the same lattice
    for (cplx s : {cplx(1.6, 0.0), cplx(0.4, 1.1)}) {
        cplx a = epstein_hat(tau, s, ep);
        cplx b = epstein_hat(inverted(tau), s, ep);
        CHECK(std::abs(a - b) < 1e-11);
    }
    // conjugation
    cplx c1 = epstein_hat(tau, cplx(1.4, 2.2), ep);
    cplx c2 = epstein_hat(tau, cplx(1.4, -2.2), ep);
    CHECK(std::abs(c1 - std::conj(c2)) < 1e-13);

    CHECK_THROWS_WITH_AS((void)epstein_hat(tau, cplx(1.0, 0.0), ep),
                         "evaluation at singularity: s = 0 and s = 1 are poles",
                         input_error);
    CHECK_THROWS_AS((void)epstein_hat(tau, cplx(1e-9, 0.0), ep), input_error);
}

TEST_CASE("h0: frozen grid, nonnegativity, hexagonal minimum") {
    CHECK(h0_lattice(kI, kTight) == doctest::Approx(0.16580304006210934).epsilon(1e-12));
    CHECK(h0_lattice(UpperHalfPoint{0.0, 0.8}, kTight) ==
          doctest::Approx(0.18887065909146181).epsilon(1e-12));
    CHECK(h0_lattice(UpperHalfPoint{0.0, 1.2}, kTight) ==
          doctest::Approx(0.18131550363487434).epsilon(1e-12));
    CHECK(h0_lattice(UpperHalfPoint{0.3, 0.95}, kTight) ==
          doctest::Approx(0.15594147460097793).epsilon(1e-12));
    UpperHalfPoint hex{-0.5, 0.8660254037844386};
    double h_hex = h0_lattice(hex, kTight);
    CHECK(h_hex == doctest::Approx(0.14807103644607150).epsilon(1e-12));

    // h0 = log(1 + positive), so it is positive everywhere; the square point
    // is the minimum along x = 0 and the hexagonal point undercuts it
    for (double x : {-0.4, 0.0, 0.4}) {
        for (double y : {0.85, 1.0, 1.3}) {
            double h = h0_lattice(UpperHalfPoint{x, y}, kTight);
            CHECK(h > 0.0);
            CHECK(h_hex <= h + 1e-12);
        }
    }
    CHECK(h0_lattice(UpperHalfPoint{0.0, 0.8}, kTight) > h0_lattice(kI, kTight));
    CHECK(h0_lattice(UpperHalfPoint{0.0, 1.2}, kTight) > h0_lattice(kI, kTight));
}

TEST_CASE("moduli domain area by quadrature") {
    QuadSpec q{1e-9, 400000, 0};
    QuadResult a = semistable_area(q);
    CHECK(std::abs(a.value.real() - semistable_area_closed()) < 1e-8);
    CHECK(std::abs(a.value.imag()) == 0.0);
    CHECK(a.cells >= 8);
    CHECK(a.error_estimate < 1e-9);
    CHECK(semistable_area_closed() == doctest::Approx(0.047197551196597746).epsilon(1e-15));
}

TEST_CASE("xi: frozen values off the critical line") {
    QuadSpec q{1e-7, 400000, 0};
    // both from the closed form via the completed Riemann xi function
    QuadResult x2 = xi_rank2(cplx(2.0, 0.0), q);
    CHECK(std::abs(x2.value.real() - 0.028011244230845020) < 1e-8);
    CHECK(x2.value.real() > 0.0);
    CHECK(std::abs(x2.value.imag()) < 1e-12);

    QuadResult x13 = xi_rank2(cplx(1.3, 0.0), q);
    CHECK(std::abs(x13.value.real() - 0.12514971604259060) < 1e-8);
    QuadResult x17 = xi_rank2(cplx(1.7, 0.0), q);
    CHECK(std::abs(x17.value.real() - 0.043929421414368761) < 1e-8);
    // the center of the critical strip, regular despite both poles nearby
    QuadResult xc = xi_rank2(cplx(0.5, 0.0), q);
    CHECK(std::abs(xc.value.real() - (-0.18476567172896827)) < 1e-8);
    // left of the strip via the continuation
    QuadResult xm = xi_rank2(cplx(-0.5, 0.0), q);
    CHECK(std::abs(xm.value.real() - 0.067121491264608854) < 1e-8);
    CHECK(x2.error_estimate < 1e-7);
}

TEST_CASE("xi: functional equation and conjugation") {
    QuadSpec q{1e-7, 400000, 0};
    // s <-> 1-s through the continuation; the defect stays far below 5e-6
    QuadResult a = xi_rank2(cplx(1.3, 0.0), q);
    QuadResult b = xi_rank2(cplx(-0.3, 0.0), q);
    CHECK(std::abs(a.value - b.value) < 5e-6);
    CHECK(std::abs(a.value - b.value) < 1e-12);

    QuadResult c = xi_rank2(cplx(1.4, 2.2), q);
    QuadResult d = xi_rank2(cplx(1.4, -2.2), q);
    CHECK(std::abs(c.value - std::conj(d.value)) < 1e-12);

    // determinism: the cell tree and reduction order do not depend on the
    // thread count
    QuadResult t1 = xi_rank2(cplx(1.3, 0.0), QuadSpec{1e-7, 400000, 1});
    QuadResult t8 = xi_rank2(cplx(1.3, 0.0), QuadSpec{1e-7, 400000, 8});
    CHECK(t1.value.real() == t8.value.real());
    CHECK(t1.value.imag() == t8.value.imag());
    CHECK(t1.cells == t8.cells);
}

TEST_CASE("xi: residues at the poles match the domain area") {
    QuadSpec q{1e-7, 400000, 0};
    double r1 = residue_at_one(q);
    double r0 = residue_at_zero(q);
    // three-node extrapolation carries an O(h^3) truncation error of about
    // 3.5e-4 here; the pole structure itself is what is being verified
    CHECK(std::abs(r1 - semistable_area_closed()) < 1e-3);
    CHECK(std::abs(r0 + semistable_area_closed()) < 1e-3);
    CHECK(std::abs(std::abs(r1) - std::abs(r0)) < 2e-3);
    CHECK(r1 > 0.0);
    CHECK(r0 < 0.0);
}

TEST_CASE("xi: singularities and quadrature failure") {
    QuadSpec q{1e-7, 400000, 0};
    CHECK_THROWS_WITH_AS((void)xi_rank2(cplx(1.0, 0.0), q),
                         "evaluation at singularity: s = 0 and s = 1 are poles",
                         input_error);
    CHECK_THROWS_AS((void)xi_rank2(cplx(0.0, 0.0), q), input_error);
    CHECK_THROWS_AS((void)xi_rank2(cplx(1.0 + 1e-9, 0.0), q), input_error);
    CHECK_THROWS_AS((void)xi_rank2(cplx(1.5, 0.0), QuadSpec{0.0, 100, 1}), input_error);
    CHECK_THROWS_AS((void)xi_rank2(cplx(1.5, 0.0), QuadSpec{1e-7, 0, 1}), input_error);

    // an unreachable tolerance must fail loudly, not return a wrong value
    try {
        (void)xi_rank2(cplx(1.5, 0.0), QuadSpec{1e-12, 20, 1});
        FAIL("expected numeric_error");
    } catch (const numeric_error& e) {
        CHECK(std::string(e.what()).find("quadrature failure") == 0);
    }
}

TEST_CASE("critical line: reality, frozen samples, sign change bracket") {
    QuadSpec q{1e-8, 400000, 0};
    // pointwise real: u^{s-1} + u^{-s} pairs into 2 u^{-1/2} cos(t log u)
    // on Re s = 1/2, so Im vanishes identically, not just after quadrature
    QuadResult x3 = xi_rank2(cplx(0.5, 3.0), q);
    CHECK(x3.value.imag() == 0.0);
    CHECK(std::abs(x3.value.real() - (-0.00225375252048795)) < 1e-9);
    QuadResult x5 = xi_rank2(cplx(0.5, 5.0), q);
    CHECK(std::abs(x5.value.real() - (-1.7720813e-4)) < 1e-9);

    ScanResult sc = critical_scan(6.0, 9.0, 0.5, q);
    CHECK(sc.points.size() == 7);
    CHECK(sc.points.front().t == 6.0);
    CHECK(sc.points.back().t == 9.0);
    CHECK(sc.max_im <= 10.0 * q.tol);
    REQUIRE(sc.sign_changes.size() == 1);
    // the first crossing of Re xi on the half line sits between 7.5 and 8
    CHECK(sc.sign_changes[0].first == 7.5);
    CHECK(sc.sign_changes[0].second == 8.0);
    CHECK(sc.points[0].xi.real() < 0.0);
    CHECK(sc.points[6].xi.real() > 0.0);

    CHECK_THROWS_WITH_AS((void)critical_scan(3.0, 2.0, 0.5, q),
                         "scan range is empty or unbounded", input_error);
    CHECK_THROWS_WITH_AS((void)critical_scan(2.0, 3.0, 0.0, q),
                         "scan step must be positive", input_error);
    CHECK_THROWS_AS((void)critical_scan(2.0, 3.0, -0.5, q), input_error);
}
