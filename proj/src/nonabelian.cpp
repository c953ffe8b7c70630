#include "nazeta/nonabelian.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/roots.hpp"

#include <cmath>
#include <mutex>

namespace nazeta {

namespace {

void validate_beta_core(unsigned r, const std::vector<Rational>& beta) {
  if (beta.size() != r)
    throw input_error("beta core must have exactly r entries");
  for (const Rational& b : beta)
    if (!b.is_positive())
      throw math_error("beta invariants must be strictly positive");
  for (unsigned j = 1; j < r; ++j)
    if (beta[j] != beta[r - j])
      throw math_error("beta core must satisfy beta(j) = beta(r-j)");
}

} // namespace

struct NonAbelianZeta::RootCache {
  std::once_flag once;
  std::vector<std::complex<double>> roots;
};

NonAbelianZeta::NonAbelianZeta(unsigned r, uint64_t q, unsigned g,
                               Poly numerator, std::vector<Rational> beta_core)
    : r_(r), q_(q), g_(g), num_(std::move(numerator)),
      beta_(std::move(beta_core)), roots_(std::make_shared<RootCache>()) {
  if (r_ < 1)
    throw input_error("rank must be >= 1");
  if (g_ < 2)
    throw input_error("genus must be >= 2");
  if (q_ < 2)
    throw input_error("q must be >= 2");
  const size_t D = 2ull * r_ * g_;
  if (num_.degree() != static_cast<long>(D))
    throw math_error("numerator must have degree exactly 2rg");
  if (functional_dual(num_, q_, D) != num_)
    throw math_error("numerator violates the functional-equation symmetry "
                     "a_{2rg-i} = a_i q^{rg-i}");
  validate_beta_core(r_, beta_);
}

const std::vector<std::complex<double>>& NonAbelianZeta::reciprocal_roots() const {
  std::call_once(roots_->once, [this] {
    const long D = num_.degree();
    std::vector<Rational> rev(D + 1);
    for (long i = 0; i <= D; ++i)
      rev[i] = num_.coeff(D - i);
    std::vector<std::complex<double>> flat;
    for (const auto& [z, mult] : find_roots(Poly(std::move(rev))))
      for (int i = 0; i < mult; ++i)
        flat.push_back(z);
    roots_->roots = std::move(flat);
  });
  return roots_->roots;
}

double NonAbelianZeta::weil_deviation() const {
  const double target = std::sqrt(static_cast<double>(q_));
  double worst = 0.0;
  for (const auto& w : reciprocal_roots())
    worst = std::max(worst, std::abs(std::abs(w) - target));
  return worst;
}

NonAbelianZeta assemble_zeta(const InvariantTable& t) {
  Poly num = complete_by_fe(ugly_coefficients(t), t.r, t.q, t.g);
  return NonAbelianZeta(t.r, t.q, t.g, std::move(num), t.beta_core);
}

RationalFn zeta_rational(const NonAbelianZeta& z) {
  const long r = z.r();
  std::vector<Rational> dl(r + 1, Rational(0)), dq(r + 1, Rational(0));
  dl[0] = Rational(1);
  dl[r] = Rational(-1);
  dq[0] = Rational(1);
  dq[r] = -Rational::int_pow(z.q(), r);
  return RationalFn{z.numerator(), Poly(dl) * Poly(dq)};
}

TruncatedSeries zeta_series_direct(const InvariantTable& t, unsigned order) {
  const long top = static_cast<long>(t.r) * (2 * static_cast<long>(t.g) - 2);
  const long half = static_cast<long>(t.r) * (static_cast<long>(t.g) - 1);
  std::vector<Rational> c(order + 1, Rational(0));
  for (long d = 0; d <= top && d <= static_cast<long>(order); ++d)
    c[d] = extend_alpha(t, d) - extend_beta(t, d);
  for (long i = 1; i <= static_cast<long>(t.r); ++i) {
    for (long n = 0;; ++n) {
      const long deg = top + i + n * static_cast<long>(t.r);
      if (deg > static_cast<long>(order))
        break;
      c[deg] = extend_beta(t, i) *
               (Rational::int_pow(t.q, half + i + n * static_cast<long>(t.r)) -
                Rational(1));
    }
  }
  return TruncatedSeries{std::move(c)};
}

CountingNumber counting_number(const NonAbelianZeta& z, unsigned m) {
  if (m < 1)
    throw input_error("counting numbers are indexed by m >= 1");

  RationalFn Z = zeta_rational(z);
  TruncatedSeries S = series_expand(Z.num, Z.den, m);
  // Normalize to constant term 1, then take the log-series coefficient:
  // with A = 1 + sum u_i t^i and L = log A,
  //   l_m = u_m - (1/m) sum_{j=1}^{m-1} j l_j u_{m-j}.
  const Rational z0 = S.coeff(0);
  if (z0.is_zero())
    throw math_error("zeta value at t = 0 vanishes; cannot normalize");
  std::vector<Rational> u(m + 1), l(m + 1, Rational(0));
  for (unsigned i = 0; i <= m; ++i)
    u[i] = S.coeff(i) / z0;
  for (unsigned i = 1; i <= m; ++i) {
    Rational acc(0);
    for (unsigned j = 1; j < i; ++j)
      acc += Rational(static_cast<long>(j)) * l[j] * u[i - j];
    l[i] = u[i] - acc / Rational(static_cast<long>(i));
  }
  Rational exact = Rational(static_cast<long>(m)) * l[m];

  double power_sum = 0.0;
  for (const auto& w : z.reciprocal_roots())
    power_sum += std::pow(w, static_cast<double>(m)).real();
  double numeric = -power_sum;
  if (m % z.r() == 0)
    numeric += static_cast<double>(z.r()) *
               (1.0 + std::pow(static_cast<double>(z.q()), static_cast<double>(m)));
  return CountingNumber{std::move(exact), numeric};
}

std::complex<double> evaluate_partial_xi(const PartialXiData& dat, unsigned r,
                                         uint64_t q, unsigned g,
                                         std::complex<double> s) {
  const long top = static_cast<long>(r) * (2 * static_cast<long>(g) - 2);
  const long half = static_cast<long>(r) * (static_cast<long>(g) - 1);
  if (dat.d_L < 0 || dat.d_L > half)
    throw input_error("level degree must lie in [0, r(g-1)]");
  if (!dat.beta_L.is_positive())
    throw input_error("boundary mass beta_L must be positive");
  for (const auto& [d, mass] : dat.masses) {
    if (d < 0 || d > top || (d != dat.d_L && d != top - dat.d_L))
      throw input_error("mass degree outside the moduli window for this level");
    if (!mass.is_positive())
      throw input_error("masses must be positive");
  }

  const double lnq = std::log(static_cast<double>(q));
  auto qp = [lnq](std::complex<double> e) { return std::exp(e * lnq); };

  std::complex<double> acc = 0.0;
  for (const auto& [d, mass] : dat.masses) {
    const double chi = static_cast<double>(d - half);
    acc += 0.5 * mass.to_double() * (qp(-s * chi) + qp((s - 1.0) * chi));
  }

  const double dd = static_cast<double>(dat.d_L - half);
  const double D = static_cast<double>(top);
  const std::complex<double> den1 = qp((s - 1.0) * D) - 1.0;
  const std::complex<double> den0 = qp(-s * D) - 1.0;
  if (std::abs(den1) < 1e-12 || std::abs(den0) < 1e-12)
    throw numeric_error("evaluation at singularity: s is too close to a pole "
                        "of the boundary bracket");
  const std::complex<double> bracket =
      (qp((1.0 - s) * dd) + qp((s - 1.0) * dd)) / den1 +
      (qp(s * dd) + qp(-s * dd)) / den0;
  return acc + dat.beta_L.to_double() * bracket;
}

Rational siegel_mass(const ArtinZeta& z, unsigned r) {
  if (r < 1)
    throw input_error("rank must be >= 1");
  const long e = (static_cast<long>(r) * r - 1) * (static_cast<long>(z.g()) - 1);
  Rational mass = Rational::int_pow(z.q(), e) / (Rational(BigInt(z.q())) - Rational(1));
  for (unsigned i = 2; i <= r; ++i)
    mass *= z.zeta_value(i);
  return mass;
}

bool clifford_ok(const InvariantTable& t, long d) {
  const Rational a = extend_alpha(t, d);
  const Rational b = extend_beta(t, d);
  return a * a <= Rational::int_pow(t.q, d + 2 * static_cast<long>(t.r)) * b * b;
}

} // namespace nazeta
