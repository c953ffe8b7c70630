#pragma once

// The rank-1 zeta object: exact numerator P(t) of Z(t) = P(t)/((1-t)(1-qt)),
// its special values, class number, divisor counts, and numerically computed
// reciprocal roots. Everything exact stays exact; roots are a cached numeric
// side channel that no exact operation consults.

#include "nazeta/curve_count.hpp"
#include "nazeta/poly.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace nazeta {

class ArtinZeta {
public:
  // Validates deg = 2g, P(0) = 1, and the exact coefficient symmetry
  // a_{2g-i} = a_i q^{g-i}; violations are mathematical-consistency errors.
  ArtinZeta(uint64_t q, unsigned g, Poly numerator);

  // Count N_1..N_g by enumeration and reconstruct the numerator.
  static ArtinZeta from_curve(const HyperellipticCurve& c);

  uint64_t q() const { return q_; }
  unsigned g() const { return g_; }
  const Poly& numerator() const { return num_; }

  // h = #Pic^0 = P(1); positive for every genuine curve zeta.
  Rational class_number() const;

  // Exact zeta_C(n) = P(q^-n) / ((1-q^-n)(1-q^(1-n))) for n >= 2.
  Rational zeta_value(long n) const;

  // Number of effective divisors of degree d: Taylor coefficient of Z at t^d.
  Rational divisor_count(unsigned d) const;

  // The 2g reciprocal roots omega_i (P(t) = prod (1 - omega_i t)), with
  // multiplicity, sorted by (real, imag). Computed once, thread-safe.
  const std::vector<std::complex<double>>& reciprocal_roots() const;

  // max_i | |omega_i| - sqrt(q) |: zero under the Riemann hypothesis for
  // curves; callers flag (never repair) inputs where this is large.
  double weil_deviation() const;

private:
  uint64_t q_;
  unsigned g_;
  Poly num_;

  struct RootCache;
  std::shared_ptr<RootCache> roots_;
};

} // namespace nazeta
