#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace nazeta {

// A point tau = x + iy in the upper half plane, standing for the rank-2
// lattice Z(1,0) + Z(x,y) rescaled to covolume 1.  The attached quadratic
// form is Q(m,n) = ((m + n x)^2 + (n y)^2) / y, which has determinant 1.
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;
};

// Controls for the lattice sums (direct Epstein sum, theta sums).
// tail_tol bounds the discarded tail in absolute value; max_radius caps the
// sup-norm shell radius so a hopeless request fails instead of spinning.
struct EpsteinParams {
    double tail_tol = 1e-8;
    unsigned long max_radius = 2000000;
};

// Controls for adaptive quadrature over the moduli domain.
// tol is the absolute error target for the whole integral, max_cells caps
// the number of evaluated cells, threads = 0 means use the hardware count.
struct QuadSpec {
    double tol = 1e-7;
    std::size_t max_cells = 400000;
    unsigned threads = 0;
};

struct QuadResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    std::size_t cells = 0;
};

struct ScanPoint {
    double t;
    std::complex<double> xi;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    // Consecutive sample pairs (t_i, t_{i+1}) across which Re xi changes sign.
    std::vector<std::pair<double, double>> sign_changes;
    double max_im = 0.0;
};

// Gamma(z) for complex z via the Lanczos approximation (g = 7, 9 terms),
// with the reflection formula for Re z < 1/2.  Poles at 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

// Lower bound for Q on nonzero integer vectors: the least eigenvalue of the
// Gram matrix, (T - sqrt(T^2 - 4))/2 with T = (1 + x^2 + y^2)/y >= 2.  The
// true minimum over integer vectors can be larger; tails only need a bound.
double form_lower_bound(const UpperHalfPoint& tau);

// theta(u) - 1 = sum over nonzero (m,n) of exp(-pi u Q(m,n)), truncated so
// the discarded tail is below tail_tol.
double theta_minus_one(const UpperHalfPoint& tau, double u,
                       const EpsteinParams& params = {});

// Completed Epstein zeta  pi^{-s} Gamma(s) sum' Q(m,n)^{-s}  by direct shell
// summation.  Only converges for Re s > 1; anything else is rejected with
// "divergent direct sum".  The tail estimate uses Q >= lattice_minimum * k^2
// on the sup-norm shell of radius k.
std::complex<double> epstein_hat_direct(const UpperHalfPoint& tau,
                                        std::complex<double> s,
                                        const EpsteinParams& params = {});

// The same function by the theta split
//   Ehat(s) = int_1^inf (theta(u) - 1)(u^{s-1} + u^{-s}) du + 1/(s-1) - 1/s,
// valid for every s except the poles at 0 and 1 ("evaluation at
// singularity").  This is the analytic continuation used everywhere the
// argument leaves Re s > 1, and it satisfies Ehat(s) = Ehat(1-s) exactly.
std::complex<double> epstein_hat(const UpperHalfPoint& tau,
                                 std::complex<double> s,
                                 const EpsteinParams& params = {});

// log of the full theta sum (the zero vector included) at u = 1:
//   h0 = log sum_{m,n} exp(-pi Q(m,n)).
// Nonnegative, since the (0,0) term alone contributes 1.
double h0_lattice(const UpperHalfPoint& tau, const EpsteinParams& params = {});

// Area pi/3 - 1 of the semistable moduli domain
//   { x + iy : |x| <= 1/2, x^2 + y^2 >= 1, y <= 1 }
// under the hyperbolic measure dx dy / y^2.
double semistable_area_closed();

// The same area by the production quadrature, as a cross-check of the
// integrator and of the measure normalization.
QuadResult semistable_area(const QuadSpec& quad = {});

// Rank-2 zeta: integral of epstein_hat(tau, s) over the semistable domain
// against dx dy / y^2, by adaptive cell refinement.  Shares the poles of the
// integrand at s = 0 and s = 1; rejects arguments within 1e-6 of either.
// A refinement that cannot reach the tolerance inside max_cells raises
// "quadrature failure".
QuadResult xi_rank2(std::complex<double> s, const QuadSpec& quad = {});

// Residues of xi_rank2 at s = 1 and s = 0 by Richardson extrapolation of
// (s - 1) xi(s) through s = 1.5, 1.25, 1.125 (mirrored for s = 0).  Both
// should come out at +/- (pi/3 - 1), the domain area.
double residue_at_one(const QuadSpec& quad = {});
double residue_at_zero(const QuadSpec& quad = {});

// Samples xi_rank2(1/2 + it) for t = t_min, t_min + step, ..., <= t_max.
// The values must be real up to quadrature noise; max |Im| > 10 * quad.tol
// raises "inconsistent continuation".  Sign changes of Re xi between
// consecutive samples are returned as brackets.
ScanResult critical_scan(double t_min, double t_max, double step,
                         const QuadSpec& quad = {});

}  // namespace nazeta
