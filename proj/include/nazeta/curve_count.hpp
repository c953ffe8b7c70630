#pragma once

// Point counting for odd-degree hyperelliptic curves y^2 = f(x) over F_q and
// its extensions, plus reconstruction of the zeta numerator from counts.
// Odd-degree models have exactly one point at infinity, so N_m is
// 1 + sum over x in F_{q^m} of {2, 1, 0} as f(x) is a nonzero square, zero,
// or a nonsquare.

#include "nazeta/finite_field.hpp"
#include "nazeta/poly.hpp"

#include <cstdint>
#include <vector>

namespace nazeta {

struct HyperellipticCurve {
  Field base;
  std::vector<FieldElt> f;  // coefficients of f, ascending degree, top nonzero
  unsigned genus = 0;       // (deg f - 1) / 2
};

// Validates: deg f odd and >= 5 with no degree drop (the supplied leading
// coefficient must be nonzero in the field), and f squarefree, checked by
// gcd(f, f') = 1 over the base field.
HyperellipticCurve make_curve(const Field& base, std::vector<FieldElt> f_coeffs);
// Convenience overload: integer coefficients reduced into the field.
HyperellipticCurve make_curve(const Field& base, const std::vector<long long>& f_coeffs);

// N_m: rational points over F_{q^m}, by exhaustive enumeration. The
// extension field p^(k*m) must stay within the 2^32 budget. Large
// enumerations are partitioned across threads; partial sums add.
uint64_t count_points(const HyperellipticCurve& c, unsigned m);

// Rational Weierstrass points of a genus-2 curve: roots of f in F_q plus the
// point at infinity. At most 6 = 2g+2.
unsigned weierstrass_count(const HyperellipticCurve& c);

// Artin numerator P of degree 2g from counts N_1..N_g (longer lists use the
// first g entries): with S_m = N_m - (q^m + 1), the log-derivative recursion
// c_i = (1/i) * sum_{m=1}^{i} S_m c_{i-m} gives the lower half, and the
// functional-equation symmetry c_{2g-i} = q^{g-i} c_i fills the rest. A
// non-integral c_i means the counts cannot come from a curve.
Poly zeta_from_counts(uint64_t q, unsigned g, const std::vector<uint64_t>& counts);

} // namespace nazeta
