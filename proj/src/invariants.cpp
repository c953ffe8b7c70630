#include "nazeta/invariants.hpp"

#include "nazeta/errors.hpp"

#include <string>

namespace nazeta {

namespace {

Rational qpow(const InvariantTable& t, long e) {
  return Rational::int_pow(t.q, e);
}

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace

InvariantTable make_table(unsigned r, uint64_t q, unsigned g,
                          std::vector<Rational> alpha_core,
                          std::vector<Rational> beta_core) {
  if (r < 1)
    throw input_error("rank must be >= 1");
  if (g < 2)
    throw input_error("genus must be >= 2");
  if (q < 2)
    throw input_error("base q must be >= 2");
  if (alpha_core.size() != static_cast<size_t>(r * (g - 1) + 1))
    throw input_error("alpha core must cover degrees 0..r(g-1)");
  if (beta_core.size() != r)
    throw input_error("beta core must cover residues 0..r-1");
  for (const Rational& a : alpha_core)
    if (!a.is_positive())
      throw math_error("alpha values must be positive");
  for (const Rational& b : beta_core)
    if (!b.is_positive())
      throw math_error("beta values must be positive");
  for (unsigned j = 1; j < r; ++j)
    if (beta_core[j] != beta_core[r - j])
      throw math_error("beta core violates the symmetry beta(j) = beta(r-j)");
  InvariantTable t;
  t.r = r;
  t.q = q;
  t.g = g;
  t.alpha_core = std::move(alpha_core);
  t.beta_core = std::move(beta_core);
  return t;
}

Rational extend_beta(const InvariantTable& t, long d) {
  long a = d < 0 ? -d : d;
  return t.beta_core[static_cast<size_t>(mod_pos(a, static_cast<long>(t.r)))];
}

Rational extend_alpha(const InvariantTable& t, long d) {
  const long half = static_cast<long>(t.r) * (static_cast<long>(t.g) - 1);  // r(g-1)
  const long top = 2 * half;                                                // r(2g-2)
  if (d < 0)
    return extend_beta(t, d);
  if (d > top)
    return extend_beta(t, d) * qpow(t, d - half);
  if (d <= half)
    return t.alpha_core[static_cast<size_t>(d)];
  return t.alpha_core[static_cast<size_t>(top - d)] * qpow(t, d - half);
}

Rational gamma_of(const InvariantTable& t, long d) {
  return extend_alpha(t, d) - extend_beta(t, d);
}

std::vector<Rational> ugly_coefficients(const InvariantTable& t) {
  const long r = t.r;
  const long g = t.g;
  const long rg = r * g;
  const Rational qr = qpow(t, r);
  const Rational qr1 = qr + Rational(1);

  auto alpha = [&](long d) { return extend_alpha(t, d); };
  auto beta = [&](long d) { return extend_beta(t, d); };

  std::vector<Rational> a(static_cast<size_t>(rg) + 1, Rational(0));
  for (long i = 0; i <= rg; ++i) {
    // The uniform recurrence, valid everywhere once alpha is extended.
    const Rational uniform = alpha(i) - qr1 * alpha(i - r) + qr * alpha(i - 2 * r);

    // Explicit case split; ranges overlap for small g, and every branch
    // that applies must reproduce the uniform value.
    std::vector<Rational> branches;
    if (0 <= i && i <= r - 1)
      branches.push_back(alpha(i) - beta(i));
    if (r <= i && i <= 2 * r - 1)
      branches.push_back(alpha(i) - qr1 * alpha(i - r) + qr * beta(i - r));
    if (2 * r <= i && i <= r * (g - 1) - 1)
      branches.push_back(alpha(i) - qr1 * alpha(i - r) + qr * alpha(i - 2 * r));
    if (i == r * (g - 1))
      branches.push_back(alpha(r * (g - 1)) - qr1 * alpha(r * (g - 2)) + qr * alpha(r * (g - 3)));
    if (r * (g - 1) + 1 <= i && i <= rg - 1)
      branches.push_back(alpha(i) - qr1 * alpha(i - r) + qr * alpha(i - 2 * r));
    if (i == rg)
      branches.push_back(Rational(2) * qr * alpha(r * (g - 2)) - qr1 * alpha(r * (g - 1)));

    if (branches.empty())
      throw math_error("ugly formula inconsistency: no case covers index " + std::to_string(i));
    for (const Rational& b : branches)
      if (b != uniform)
        throw math_error("ugly formula inconsistency at index " + std::to_string(i) +
                         ": case value " + b.str() + " vs recurrence " + uniform.str());
    a[static_cast<size_t>(i)] = uniform;
  }
  return a;
}

Poly complete_by_fe(const std::vector<Rational>& lower, unsigned r, uint64_t q, unsigned g) {
  const size_t rg = static_cast<size_t>(r) * g;
  if (lower.size() != rg + 1)
    throw input_error("lower coefficient list must have length rg+1");
  std::vector<Rational> c(2 * rg + 1, Rational(0));
  for (size_t i = 0; i <= rg; ++i)
    c[i] = lower[i];
  for (size_t i = 0; i < rg; ++i)
    c[2 * rg - i] = lower[i] * Rational::int_pow(q, static_cast<long>(rg) - static_cast<long>(i));
  return Poly(std::move(c));
}

InvariantTable table_rank1(const ArtinZeta& z) {
  const Rational h = z.class_number();
  const Rational beta0 = h / Rational(BigInt(z.q()) - 1);
  std::vector<Rational> alpha;
  alpha.reserve(z.g());
  for (unsigned d = 0; d + 1 <= z.g(); ++d)
    alpha.push_back(z.divisor_count(d) + beta0);
  return make_table(1, z.q(), z.g(), std::move(alpha), {beta0});
}

} // namespace nazeta
