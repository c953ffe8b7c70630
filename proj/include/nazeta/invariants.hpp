#pragma once

// Invariant tables for the rank-r mass formulas: the alpha core on degrees
// 0..r(g-1) and the beta core on residues 0..r-1 determine everything else
// through the extension rules (reflection for alpha, periodicity and
// evenness for beta). The table is the sole input to the numerator formula.

#include "nazeta/artin_zeta.hpp"
#include "nazeta/poly.hpp"
#include "nazeta/rational.hpp"

#include <cstdint>
#include <vector>

namespace nazeta {

struct InvariantTable {
  unsigned r = 1;
  uint64_t q = 0;
  unsigned g = 2;
  std::vector<Rational> alpha_core;  // index d, 0 <= d <= r(g-1)
  std::vector<Rational> beta_core;   // index j, 0 <= j <= r-1
};

// Validates r >= 1, g >= 2, core sizes, strict positivity of all entries,
// and the beta symmetry beta(j) = beta((r-j) mod r).
InvariantTable make_table(unsigned r, uint64_t q, unsigned g,
                          std::vector<Rational> alpha_core,
                          std::vector<Rational> beta_core);

// beta extended to all integers: beta(d) = beta_core[|d| mod r].
Rational extend_beta(const InvariantTable& t, long d);

// alpha extended to all integers:
//   d < 0            -> beta(d)
//   0 <= d <= r(2g-2) -> alpha core, or the reflection
//                        alpha(r(2g-2)-d) * q^(d-r(g-1)) past the midpoint
//   d > r(2g-2)       -> beta(d) * q^(d-r(g-1))
Rational extend_alpha(const InvariantTable& t, long d);

// gamma(d) = alpha(d) - beta(d); zero for d < 0.
Rational gamma_of(const InvariantTable& t, long d);

// Lower-half numerator coefficients a_0..a_{rg}. Each value is computed
// both by the explicit case split and by the uniform recurrence
//   a_i = alpha(i) - (q^r+1) alpha(i-r) + q^r alpha(i-2r)
// (alpha extended); every applicable branch must agree or the table
// violates the extension rules.
std::vector<Rational> ugly_coefficients(const InvariantTable& t);

// Fill a_{rg+1}..a_{2rg} by a_{2rg-i} = a_i q^{rg-i}; the result is a fixed
// point of functional_dual by construction.
Poly complete_by_fe(const std::vector<Rational>& lower, unsigned r, uint64_t q, unsigned g);

// The rank-1 table of an Artin zeta: beta(0) = h/(q-1) and
// alpha(d) = (number of effective divisors of degree d) + h/(q-1).
InvariantTable table_rank1(const ArtinZeta& z);

} // namespace nazeta
