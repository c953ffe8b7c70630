#include "nazeta/lattice_zeta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "nazeta/errors.hpp"

namespace nazeta {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Gauss-Legendre rule on [-1, 1], used for the theta-split
// u-integral where the integrand decays like exp(-pi * lambda * u).
constexpr int kGL15 = 15;
constexpr double kGL15Node[kGL15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854,
};
constexpr double kGL15Weight[kGL15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173,
};

// 5-point Gauss-Legendre rule, used per axis on quadrature cells over the
// moduli domain.
constexpr int kGL5 = 5;
constexpr double kGL5Node[kGL5] = {
    -0.9061798459386640, -0.5384693101056831, 0.0,
    0.5384693101056831,  0.9061798459386640,
};
constexpr double kGL5Weight[kGL5] = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891,
};

void require_upper_half(const UpperHalfPoint& tau) {
    if (!(tau.y > 0.0) || !std::isfinite(tau.x) || !std::isfinite(tau.y)) {
        throw input_error("tau must lie in the upper half plane (y > 0)");
    }
}

// Bound on sum_{j > k} 8 j exp(-pi u lambda j^2), using
// j^2 - k^2 >= 2k (j - k) to compare against a geometric series.
double shell_tail_bound(double lambda, unsigned long k, double u) {
    double rho = std::exp(-2.0 * kPi * u * lambda * double(k));
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    double head = std::exp(-kPi * u * lambda * double(k) * double(k));
    return 8.0 * head * (double(k) * rho / (1.0 - rho) + rho / ((1.0 - rho) * (1.0 - rho)));
}

// Values of Q on nonzero vectors, enumerated by sup-norm shells until the
// discarded tail at scale u_min is below cut.
struct ThetaTable {
    std::vector<double> qvals;
    double lambda = 1.0;
};

ThetaTable build_theta_table(const UpperHalfPoint& tau, double u_min, double cut,
                             unsigned long max_radius) {
    ThetaTable tt;
    tt.lambda = form_lower_bound(tau);
    const double x = tau.x, y = tau.y;
    for (unsigned long k = 1;; ++k) {
        long kk = long(k);
        for (long n = -kk; n <= kk; ++n) {
            double a = double(kk) + double(n) * x, b = double(n) * y;
            tt.qvals.push_back((a * a + b * b) / y);
            a = double(-kk) + double(n) * x;
            tt.qvals.push_back((a * a + b * b) / y);
        }
        for (long m = -kk + 1; m <= kk - 1; ++m) {
            double a = double(m) + double(kk) * x, b = double(kk) * y;
            tt.qvals.push_back((a * a + b * b) / y);
            a = double(m) - double(kk) * x;
            tt.qvals.push_back((a * a + b * b) / y);
        }
        if (shell_tail_bound(tt.lambda, k, u_min) < cut) break;
        if (k >= max_radius) {
            throw numeric_error("summation radius exhausted before the theta tail met its bound");
        }
    }
    std::sort(tt.qvals.begin(), tt.qvals.end());
    return tt;
}

double theta_from_table(const ThetaTable& tt, double u) {
    // Summed smallest-last so the tiny terms do not drown in the big ones.
    double s = 0.0;
    for (auto it = tt.qvals.rbegin(); it != tt.qvals.rend(); ++it) {
        s += std::exp(-kPi * u * *it);
    }
    return s;
}

std::complex<double> split_integrand(const ThetaTable& tt, std::complex<double> s, double u) {
    double lu = std::log(u);
    double tm1 = theta_from_table(tt, u);
    return tm1 * (std::exp((s - 1.0) * lu) + std::exp(-s * lu));
}

std::complex<double> gl15_panel(const ThetaTable& tt, std::complex<double> s, double a,
                                double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < kGL15; ++i) {
        acc += kGL15Weight[i] * split_integrand(tt, s, c + h * kGL15Node[i]);
    }
    return acc * h;
}

std::complex<double> adaptive_panel(const ThetaTable& tt, std::complex<double> s, double a,
                                    double b, double share, int depth) {
    std::complex<double> whole = gl15_panel(tt, s, a, b);
    double m = 0.5 * (a + b);
    std::complex<double> halves = gl15_panel(tt, s, a, m) + gl15_panel(tt, s, m, b);
    if (std::abs(halves - whole) <= share) return halves;
    if (depth >= 40) {
        throw numeric_error("quadrature failure: panel refinement did not converge");
    }
    return adaptive_panel(tt, s, a, m, 0.5 * share, depth + 1) +
           adaptive_panel(tt, s, m, b, 0.5 * share, depth + 1);
}

void require_off_poles(std::complex<double> s) {
    if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6) {
        throw input_error("evaluation at singularity: s = 0 and s = 1 are poles");
    }
}

std::complex<double> epstein_hat_from_table(const ThetaTable& tt, std::complex<double> s,
                                            double tol) {
    // integral of (theta(u) - 1)(u^{s-1} + u^{-s}) over [1, inf) by doubling
    // panels, stopped once the analytic remainder bound is negligible.
    double sigma_hat = std::max(s.real(), 1.0 - s.real());
    std::complex<double> integral = 0.0;
    double lo = 1.0;
    double share = 0.25 * tol;
    for (int panel = 0;; ++panel) {
        double hi = 2.0 * lo;
        integral += adaptive_panel(tt, s, lo, hi, share, 0);
        lo = hi;
        share *= 0.5;
        if (panel >= 1) {
            // Remainder past u = lo: theta - 1 decays at least like
            // exp(-pi lambda (u - lo)) times its value at lo, and the power
            // factor is at most 2 u^{sigma_hat - 1}.
            double denom = kPi * tt.lambda - std::max(sigma_hat - 1.0, 0.0) / lo;
            if (denom > 0.0) {
                double rem = 2.0 * theta_from_table(tt, lo) *
                             std::pow(lo, sigma_hat - 1.0) / denom;
                if (rem < 0.25 * tol) break;
            }
        }
        if (panel >= 60) {
            throw numeric_error("quadrature failure: theta integral tail did not close");
        }
    }
    return integral + 1.0 / (s - 1.0) - 1.0 / s;
}

// Adaptive quadrature over the moduli domain.  The domain is mapped onto
// the rectangle (x, v) in [-1/2, 1/2] x [0, 1] by
//   y = ylow(x) + v (1 - ylow(x)),  ylow(x) = sqrt(1 - x^2),
// which carries the corners of the region onto cell boundaries and the
// measure dx dy / y^2 onto (1 - ylow(x)) / y^2 dx dv.
template <class G>
std::complex<double> gl5_cell(const G& g, double x0, double x1, double v0, double v1) {
    double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
    double cv = 0.5 * (v0 + v1), hv = 0.5 * (v1 - v0);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < kGL5; ++i) {
        double x = cx + hx * kGL5Node[i];
        std::complex<double> row = 0.0;
        for (int j = 0; j < kGL5; ++j) {
            row += kGL5Weight[j] * g(x, cv + hv * kGL5Node[j]);
        }
        acc += kGL5Weight[i] * row;
    }
    return acc * hx * hv;
}

struct CellBudget {
    std::atomic<std::size_t> used{0};
    std::size_t cap = 0;
};

template <class G>
void refine_cell(const G& g, double x0, double x1, double v0, double v1, double share,
                 int depth, CellBudget& budget, std::complex<double>& value,
                 double& err) {
    if (budget.used.fetch_add(1) >= budget.cap) {
        throw numeric_error("quadrature failure: cell budget exhausted before tolerance");
    }
    std::complex<double> whole = gl5_cell(g, x0, x1, v0, v1);
    double xm = 0.5 * (x0 + x1), vm = 0.5 * (v0 + v1);
    std::complex<double> parts = gl5_cell(g, x0, xm, v0, vm) + gl5_cell(g, xm, x1, v0, vm) +
                                 gl5_cell(g, x0, xm, vm, v1) + gl5_cell(g, xm, x1, vm, v1);
    double diff = std::abs(parts - whole);
    if (diff <= share) {
        value += parts;
        err += diff;
        return;
    }
    if (depth >= 16) {
        throw numeric_error("quadrature failure: cell refinement did not converge");
    }
    refine_cell(g, x0, xm, v0, vm, 0.25 * share, depth + 1, budget, value, err);
    refine_cell(g, xm, x1, v0, vm, 0.25 * share, depth + 1, budget, value, err);
    refine_cell(g, x0, xm, vm, v1, 0.25 * share, depth + 1, budget, value, err);
    refine_cell(g, xm, x1, vm, v1, 0.25 * share, depth + 1, budget, value, err);
}

template <class G>
QuadResult integrate_domain(const G& g, const QuadSpec& quad) {
    if (!(quad.tol > 0.0)) throw input_error("quadrature tolerance must be positive");
    if (quad.max_cells == 0) throw input_error("cell budget must be positive");

    // Root cells split at x = 0 (where the lower arc meets y = 1) and at the
    // quarter lines, so every corner of the region sits on a cell boundary.
    constexpr int kRoots = 8;
    const double xs[5] = {-0.5, -0.25, 0.0, 0.25, 0.5};
    const double vs[3] = {0.0, 0.5, 1.0};

    CellBudget budget;
    budget.cap = quad.max_cells;
    std::complex<double> values[kRoots];
    double errs[kRoots] = {0};
    std::exception_ptr fail[kRoots] = {};

    unsigned want = quad.threads ? quad.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    want = std::min<unsigned>(want, kRoots);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int r = next.fetch_add(1);
            if (r >= kRoots) return;
            int xi = r % 4, vi = r / 4;
            try {
                refine_cell(g, xs[xi], xs[xi + 1], vs[vi], vs[vi + 1],
                            quad.tol / kRoots, 0, budget, values[r], errs[r]);
            } catch (...) {
                fail[r] = std::current_exception();
            }
        }
    };

    if (want <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < want; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (int r = 0; r < kRoots; ++r) {
        if (fail[r]) std::rethrow_exception(fail[r]);
    }

    QuadResult out;
    for (int r = 0; r < kRoots; ++r) {
        out.value += values[r];
        out.error_estimate += errs[r];
    }
    out.cells = budget.used.load();
    return out;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    static const double kLanczos[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (z.real() < 0.5) {
        if (z.imag() == 0.0 && z.real() == std::floor(z.real())) {
            throw math_error("gamma pole at a nonpositive integer");
        }
        std::complex<double> sp = std::sin(kPi * z);
        return kPi / (sp * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + double(i));
    std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double form_lower_bound(const UpperHalfPoint& tau) {
    require_upper_half(tau);
    double trace = (1.0 + tau.x * tau.x + tau.y * tau.y) / tau.y;
    double disc = std::max(trace * trace - 4.0, 0.0);
    return 0.5 * (trace - std::sqrt(disc));
}

double theta_minus_one(const UpperHalfPoint& tau, double u, const EpsteinParams& params) {
    require_upper_half(tau);
    if (!(u > 0.0)) throw input_error("theta needs a positive scale u");
    if (!(params.tail_tol > 0.0)) throw input_error("tail tolerance must be positive");
    ThetaTable tt = build_theta_table(tau, u, params.tail_tol, params.max_radius);
    return theta_from_table(tt, u);
}

std::complex<double> epstein_hat_direct(const UpperHalfPoint& tau, std::complex<double> s,
                                        const EpsteinParams& params) {
    require_upper_half(tau);
    if (!(params.tail_tol > 0.0)) throw input_error("tail tolerance must be positive");
    double sigma = s.real();
    if (!(sigma > 1.0)) {
        throw input_error("divergent direct sum: the raw Epstein series needs Re s > 1");
    }
    double lambda = form_lower_bound(tau);
    std::complex<double> pref = std::exp(-s * std::log(kPi)) * complex_gamma(s);
    double pmag = std::abs(pref);
    const bool real_s = s.imag() == 0.0;
    const double x = tau.x, y = tau.y;
    std::complex<double> acc = 0.0;
    for (unsigned long k = 1;; ++k) {
        long kk = long(k);
        double shell_re = 0.0, shell_im = 0.0;
        auto add = [&](double a, double b) {
            double q = (a * a + b * b) / y;
            if (real_s) {
                shell_re += std::pow(q, -sigma);
            } else {
                std::complex<double> t = std::exp(-s * std::log(q));
                shell_re += t.real();
                shell_im += t.imag();
            }
        };
        for (long n = -kk; n <= kk; ++n) {
            add(double(kk) + double(n) * x, double(n) * y);
            add(double(-kk) + double(n) * x, double(n) * y);
        }
        for (long m = -kk + 1; m <= kk - 1; ++m) {
            add(double(m) + double(kk) * x, double(kk) * y);
            add(double(m) - double(kk) * x, double(kk) * y);
        }
        acc += std::complex<double>(shell_re, shell_im);
        // Tail: sum over shells past k of 8 j (lambda j^2)^{-sigma}
        //       <= 8 lambda^{-sigma} k^{2 - 2 sigma} / (2 sigma - 2).
        double tail = 8.0 * std::pow(lambda, -sigma) *
                      std::pow(double(k), 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0);
        if (pmag * tail < params.tail_tol) break;
        if (k >= params.max_radius) {
            throw numeric_error("summation radius exhausted before the tail met tail_tol");
        }
    }
    return pref * acc;
}

std::complex<double> epstein_hat(const UpperHalfPoint& tau, std::complex<double> s,
                                 const EpsteinParams& params) {
    require_upper_half(tau);
    if (!(params.tail_tol > 0.0)) throw input_error("tail tolerance must be positive");
    require_off_poles(s);
    ThetaTable tt = build_theta_table(tau, 1.0, 1e-16, params.max_radius);
    return epstein_hat_from_table(tt, s, params.tail_tol);
}

double h0_lattice(const UpperHalfPoint& tau, const EpsteinParams& params) {
    require_upper_half(tau);
    if (!(params.tail_tol > 0.0)) throw input_error("tail tolerance must be positive");
    ThetaTable tt = build_theta_table(tau, 1.0, params.tail_tol, params.max_radius);
    return std::log1p(theta_from_table(tt, 1.0));
}

double semistable_area_closed() { return kPi / 3.0 - 1.0; }

QuadResult semistable_area(const QuadSpec& quad) {
    auto g = [](double x, double v) -> std::complex<double> {
        double yl = std::sqrt(1.0 - x * x);
        double y = yl + v * (1.0 - yl);
        return (1.0 - yl) / (y * y);
    };
    return integrate_domain(g, quad);
}

QuadResult xi_rank2(std::complex<double> s, const QuadSpec& quad) {
    require_off_poles(s);
    EpsteinParams ep;
    ep.tail_tol = std::min(1e-9, 1e-2 * quad.tol);
    auto g = [&](double x, double v) -> std::complex<double> {
        double yl = std::sqrt(1.0 - x * x);
        double y = yl + v * (1.0 - yl);
        UpperHalfPoint tau{x, y};
        return epstein_hat(tau, s, ep) * ((1.0 - yl) / (y * y));
    };
    return integrate_domain(g, quad);
}

double residue_at_one(const QuadSpec& quad) {
    // Thin the pole: (s - 1) xi(s) extends across s = 1; extrapolate it to
    // s = 1 from three geometrically spaced nodes (Richardson weights for
    // spacings 1/2, 1/4, 1/8 are 1/3, -2, 8/3).
    const double nodes[3] = {1.5, 1.25, 1.125};
    double f[3];
    for (int i = 0; i < 3; ++i) {
        f[i] = ((nodes[i] - 1.0) * xi_rank2(nodes[i], quad).value).real();
    }
    return f[0] / 3.0 - 2.0 * f[1] + f[2] * 8.0 / 3.0;
}

double residue_at_zero(const QuadSpec& quad) {
    const double nodes[3] = {-0.5, -0.25, -0.125};
    double f[3];
    for (int i = 0; i < 3; ++i) {
        f[i] = (nodes[i] * xi_rank2(nodes[i], quad).value).real();
    }
    return f[0] / 3.0 - 2.0 * f[1] + f[2] * 8.0 / 3.0;
}

ScanResult critical_scan(double t_min, double t_max, double step, const QuadSpec& quad) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || t_max < t_min) {
        throw input_error("scan range is empty or unbounded");
    }
    if (!(step > 0.0)) throw input_error("scan step must be positive");
    ScanResult out;
    for (std::size_t k = 0;; ++k) {
        double t = t_min + double(k) * step;
        if (t > t_max + 1e-9 * step) break;
        QuadResult q = xi_rank2(std::complex<double>(0.5, t), quad);
        out.points.push_back({t, q.value});
        out.max_im = std::max(out.max_im, std::abs(q.value.imag()));
    }
    if (out.max_im > 10.0 * quad.tol) {
        throw numeric_error(
            "inconsistent continuation: xi(1/2 + it) should be real up to "
            "quadrature noise");
    }
    for (std::size_t i = 1; i < out.points.size(); ++i) {
        double a = out.points[i - 1].xi.real(), b = out.points[i].xi.real();
        if (a * b < 0.0) {
            out.sign_changes.emplace_back(out.points[i - 1].t, out.points[i].t);
        }
    }
    return out;
}

}  // namespace nazeta
