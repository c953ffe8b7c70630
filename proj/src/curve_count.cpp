#include "nazeta/curve_count.hpp"

#include "nazeta/errors.hpp"

#include <future>
#include <string>
#include <thread>

namespace nazeta {

namespace {

using FPoly = std::vector<FieldElt>;  // ascending, trimmed

void trim(const Field& F, FPoly& a) {
  while (!a.empty() && F.is_zero(a.back()))
    a.pop_back();
}

FPoly derivative(const Field& F, const FPoly& a) {
  FPoly d;
  for (size_t i = 1; i < a.size(); ++i)
    d.push_back(F.mul(a[i], F.from_int(i % F.p())));
  trim(F, d);
  return d;
}

FPoly polymod(const Field& F, FPoly a, const FPoly& b) {
  const size_t db = b.size() - 1;
  const FieldElt lb_inv = F.inv(b.back());
  while (a.size() > db) {
    FieldElt c = F.mul(a.back(), lb_inv);
    size_t shift = a.size() - 1 - db;
    if (!F.is_zero(c)) {
      for (size_t j = 0; j < db; ++j)
        a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    }
    a.pop_back();
    trim(F, a);
    if (a.size() <= db)
      break;
  }
  trim(F, a);
  return a;
}

bool coprime(const Field& F, FPoly a, FPoly b) {
  while (!b.empty()) {
    FPoly r = polymod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;  // unit gcd
}

FieldElt eval(const Field& F, const FPoly& f, const FieldElt& x) {
  FieldElt acc = F.zero();
  for (size_t i = f.size(); i-- > 0;) {
    acc = F.mul(acc, x);
    acc = F.add(acc, f[i]);
  }
  return acc;
}

uint64_t count_range(const Field& F, const FPoly& f, uint64_t lo, uint64_t hi) {
  uint64_t n = 0;
  for (uint64_t idx = lo; idx < hi; ++idx) {
    switch (F.square_class(eval(F, f, F.elt_at(idx)))) {
      case SquareClass::zero: n += 1; break;
      case SquareClass::square: n += 2; break;
      case SquareClass::nonsquare: break;
    }
  }
  return n;
}

} // namespace

HyperellipticCurve make_curve(const Field& base, std::vector<FieldElt> f_coeffs) {
  if (f_coeffs.empty() || base.is_zero(f_coeffs.back()))
    throw input_error("curve degree drop: leading coefficient of f vanishes in the field");
  const size_t deg = f_coeffs.size() - 1;
  if (deg % 2 == 0 || deg < 5)
    throw input_error("f must have odd degree >= 5, got degree " + std::to_string(deg));
  FPoly fp = f_coeffs;
  if (!coprime(base, fp, derivative(base, fp)))
    throw input_error("f is not squarefree over the base field (gcd(f, f') != 1)");
  return HyperellipticCurve{base, std::move(f_coeffs),
                            static_cast<unsigned>((deg - 1) / 2)};
}

HyperellipticCurve make_curve(const Field& base, const std::vector<long long>& f_coeffs) {
  std::vector<FieldElt> v;
  v.reserve(f_coeffs.size());
  const long long p = static_cast<long long>(base.p());
  for (long long c : f_coeffs)
    v.push_back(base.from_int(static_cast<uint64_t>(((c % p) + p) % p)));
  return make_curve(base, v);
}

uint64_t count_points(const HyperellipticCurve& c, unsigned m) {
  if (m < 1)
    throw input_error("extension degree m must be >= 1");
  const Field& B = c.base;
  // Field::make enforces the p^(k*m) <= 2^32 budget.
  Field ext = (m == 1) ? B : Field::make(B.p(), B.k() * m);

  FPoly f_ext;
  f_ext.reserve(c.f.size());
  if (m == 1) {
    f_ext = c.f;
  } else if (B.k() == 1) {
    for (const FieldElt& a : c.f)
      f_ext.push_back(ext.from_int(a[0]));
  } else {
    const FieldElt rho = B.embed_generator(ext);
    for (const FieldElt& a : c.f)
      f_ext.push_back(ext.compose(a, rho));
  }

  const uint64_t Q = ext.q();
  uint64_t affine = 0;
  const uint64_t parallel_threshold = 1ull << 20;
  if (Q < parallel_threshold) {
    affine = count_range(ext, f_ext, 0, Q);
  } else {
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::future<uint64_t>> parts;
    uint64_t chunk = (Q + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      uint64_t lo = w * chunk, hi = std::min(Q, lo + chunk);
      if (lo >= hi)
        break;
      parts.push_back(std::async(std::launch::async,
                                 [&ext, &f_ext, lo, hi] { return count_range(ext, f_ext, lo, hi); }));
    }
    for (auto& part : parts)
      affine += part.get();
  }
  return affine + 1;  // the odd-degree model's single point at infinity
}

unsigned weierstrass_count(const HyperellipticCurve& c) {
  if (c.genus != 2)
    throw input_error("weierstrass count is defined here only for genus 2");
  const Field& F = c.base;
  unsigned roots = 0;
  for (uint64_t idx = 0; idx < F.q(); ++idx)
    if (F.is_zero(eval(F, c.f, F.elt_at(idx))))
      ++roots;
  return roots + 1;
}

Poly zeta_from_counts(uint64_t q, unsigned g, const std::vector<uint64_t>& counts) {
  if (counts.size() < g)
    throw input_error("need at least N_1..N_g to reconstruct a genus-g numerator");
  for (uint64_t n : counts)
    if (n < 1)
      throw input_error("point counts must be >= 1 (the point at infinity always exists)");

  std::vector<Rational> S(g + 1, Rational(0));
  for (unsigned m = 1; m <= g; ++m)
    S[m] = Rational(BigInt(counts[m - 1])) - Rational::int_pow(q, m) - Rational(1);

  std::vector<Rational> c(2 * g + 1, Rational(0));
  c[0] = Rational(1);
  for (unsigned i = 1; i <= g; ++i) {
    Rational acc(0);
    for (unsigned m = 1; m <= i; ++m)
      acc += S[m] * c[i - m];
    c[i] = acc / Rational(static_cast<long>(i));
    if (!c[i].is_integer())
      throw math_error("inconsistent counts: numerator coefficient " + std::to_string(i) +
                       " is not an integer (" + c[i].str() + ")");
  }
  for (unsigned i = 0; i < g; ++i)
    c[2 * g - i] = c[i] * Rational::int_pow(q, static_cast<long>(g) - static_cast<long>(i));
  Poly P(std::move(c));

  // Counts past N_g were not consumed above; check them against the
  // reconstruction so that an over-determined input cannot silently lie.
  // With e_k = (-1)^k a_k the Newton identities give the power sums s_m of
  // the reciprocal roots, and N_m must equal q^m + 1 - s_m.
  if (counts.size() > g) {
    std::vector<Rational> e(2 * g + 1, Rational(0));
    for (unsigned k = 0; k <= 2 * g; ++k)
      e[k] = (k % 2 == 0) ? P.coeff(k) : -P.coeff(k);
    std::vector<Rational> s(counts.size() + 1, Rational(0));
    for (unsigned m = 1; m <= counts.size(); ++m) {
      Rational acc = (m <= 2 * g) ? Rational(static_cast<long>(m)) * e[m]
                                  : Rational(0);
      if (m % 2 == 0) acc = -acc;
      for (unsigned j = 1; j < m && j <= 2 * g; ++j) {
        Rational term = e[j] * s[m - j];
        acc += (j % 2 == 0) ? -term : term;
      }
      s[m] = acc;
      Rational predicted = Rational::int_pow(q, m) + Rational(1) - s[m];
      if (predicted != Rational(BigInt(counts[m - 1])))
        throw math_error("inconsistent counts: N_" + std::to_string(m) +
                         " = " + std::to_string(counts[m - 1]) +
                         " but the reconstructed numerator predicts " +
                         predicted.str());
    }
  }
  return P;
}

} // namespace nazeta
