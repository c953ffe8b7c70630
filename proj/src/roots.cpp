#include "nazeta/roots.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nazeta {

namespace {

using cplx = std::complex<double>;

// Scale of p at z for the residual test: sum_i |a_i| |z|^i.
double poly_scale(const std::vector<double>& absc, double az) {
  double s = 0.0, zp = 1.0;
  for (double a : absc) {
    s += a * zp;
    zp *= az;
  }
  return s;
}

bool residual_ok(const Poly& p, const std::vector<double>& absc, cplx z, double tol) {
  double scale = poly_scale(absc, std::abs(z));
  if (scale == 0.0)
    scale = 1.0;
  return std::abs(p.eval(z)) <= tol * scale;
}

// Aberth-Ehrlich simultaneous iteration on a square-free polynomial. The
// initial guesses sit on a circle of the Cauchy root bound's radius with an
// irrational angular offset so no guess starts on a symmetry axis.
std::vector<cplx> aberth(const Poly& p, const std::vector<double>& absc, double tol) {
  const long n = p.degree();
  const Poly dp = p.derivative();
  const double lead = std::abs(p.leading().to_double());
  double radius = 0.0;
  for (long i = 0; i < n; ++i)
    radius = std::max(radius, std::abs(p.coeff(static_cast<size_t>(i)).to_double()) / lead);
  radius = 1.0 + radius;

  std::vector<cplx> z(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * (static_cast<double>(k) + 0.354) / static_cast<double>(n) + 0.7;
    z[static_cast<size_t>(k)] = radius * cplx(std::cos(ang), std::sin(ang));
  }

  const int max_iter = 400;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (size_t i = 0; i < z.size(); ++i) {
      cplx pz = p.eval(z[i]);
      cplx dz = dp.eval(z[i]);
      if (pz == cplx(0.0, 0.0))
        continue;
      cplx newton = (dz == cplx(0.0, 0.0)) ? cplx(1e-12, 1e-12) : pz / dz;
      cplx sum(0.0, 0.0);
      for (size_t j = 0; j < z.size(); ++j)
        if (j != i)
          sum += 1.0 / (z[i] - z[j]);
      cplx corr = newton / (1.0 - newton * sum);
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-15 * (1.0 + radius))
      break;
  }

  // Newton polish: quadratic convergence from the Aberth cluster, and the
  // residual contract is enforced per root afterwards.
  for (auto& zi : z) {
    for (int k = 0; k < 8; ++k) {
      cplx pz = p.eval(zi);
      cplx dz = dp.eval(zi);
      if (dz == cplx(0.0, 0.0))
        break;
      cplx step = pz / dz;
      zi -= step;
      if (std::abs(step) < 1e-17 * (1.0 + std::abs(zi)))
        break;
    }
    // Real-axis snap: exact polynomials over Q have conjugate-symmetric
    // roots, so a vanishing imaginary part is noise, not signal.
    if (std::abs(zi.imag()) < 1e-12 * (1.0 + std::abs(zi.real())) &&
        residual_ok(p, absc, cplx(zi.real(), 0.0), 1e-10))
      zi = cplx(zi.real(), 0.0);
  }

  for (const auto& zi : z)
    if (!residual_ok(p, absc, zi, tol))
      throw numeric_error("root refinement failed to meet the residual bound");
  return z;
}

std::vector<cplx> roots_of_squarefree(const Poly& p, double tol) {
  const long n = p.degree();
  if (n == 1) {
    double a = p.coeff(1).to_double(), b = p.coeff(0).to_double();
    return {cplx(-b / a, 0.0)};
  }
  if (n == 2) {
    double a = p.coeff(2).to_double(), b = p.coeff(1).to_double(), c = p.coeff(0).to_double();
    double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      double sq = std::sqrt(disc);
      // The numerically stable branch: avoid cancellation in -b +- sq.
      double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
      double r1 = q / a;
      double r2 = (q != 0.0) ? c / q : -b / a - r1;
      return {cplx(r1, 0.0), cplx(r2, 0.0)};
    }
    double sq = std::sqrt(-disc);
    return {cplx(-b / (2.0 * a), sq / (2.0 * a)), cplx(-b / (2.0 * a), -sq / (2.0 * a))};
  }
  std::vector<double> absc;
  absc.reserve(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i)
    absc.push_back(std::abs(p.coeff(static_cast<size_t>(i)).to_double()));
  return aberth(p, absc, tol);
}

} // namespace

std::vector<std::pair<cplx, int>> find_roots(const Poly& p, double tol) {
  if (p.degree() < 1)
    throw input_error("root finding requires degree >= 1");
  std::vector<std::pair<cplx, int>> out;
  for (const auto& [factor, mult] : Poly::squarefree(p)) {
    for (cplx z : roots_of_squarefree(factor, tol))
      out.emplace_back(z, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real())
      return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

} // namespace nazeta
