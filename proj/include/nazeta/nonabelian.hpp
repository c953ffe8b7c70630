#pragma once

// Rank-r zeta objects assembled from an invariant table: the degree-2rg
// numerator over the denominator (1 - t^r)(1 - q^r t^r), an independent
// direct series route used to cross-check the assembly, counting numbers,
// the single-level partial zeta with its functional equation and residues,
// and the mass bounds (Siegel, Clifford) the tables must satisfy.

#include "nazeta/invariants.hpp"
#include "nazeta/poly.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace nazeta {

class NonAbelianZeta {
public:
  // Validates deg = 2rg, the exact functional-equation symmetry
  // a_{2rg-i} = a_i q^{rg-i}, and the beta core (size r, positive, even).
  NonAbelianZeta(unsigned r, uint64_t q, unsigned g, Poly numerator,
                 std::vector<Rational> beta_core);

  unsigned r() const { return r_; }
  uint64_t q() const { return q_; }
  unsigned g() const { return g_; }
  const Poly& numerator() const { return num_; }
  const std::vector<Rational>& beta_core() const { return beta_; }

  // The 2rg reciprocal roots of the numerator, with multiplicity, sorted by
  // (real, imag). Computed once on first use; thread-safe.
  const std::vector<std::complex<double>>& reciprocal_roots() const;

  // max_i | |omega_i| - sqrt(q) |.
  double weil_deviation() const;

private:
  unsigned r_;
  uint64_t q_;
  unsigned g_;
  Poly num_;
  std::vector<Rational> beta_;

  struct RootCache;
  std::shared_ptr<RootCache> roots_;
};

// Numerator from the table via the coefficient formula plus the symmetry
// fill; carries the table's beta core along.
NonAbelianZeta assemble_zeta(const InvariantTable& t);

// Z(t) as an explicit ratio with denominator (1 - t^r)(1 - q^r t^r).
RationalFn zeta_rational(const NonAbelianZeta& z);

// Independent route to the same series: head coefficients gamma(d) for
// 0 <= d <= r(2g-2) from the extended table, then the geometric tails
//   coeff of t^{r(2g-2)+i+rn} = beta(i) * (q^{r(g-1)+i+rn} - 1)
// for 1 <= i <= r, n >= 0. Must match the expansion of zeta_rational to
// every order; the tests drive both routes well past the core window.
TruncatedSeries zeta_series_direct(const InvariantTable& t, unsigned order);

struct CountingNumber {
  Rational exact;  // m * (t^m coefficient of log(Z/Z(0)))
  double numeric;  // r(1+q^m) - sum omega^m when r | m, else -sum omega^m
};

// The two routes agree within numeric root error; for r = 1 the exact value
// is the point count N_m itself.
CountingNumber counting_number(const NonAbelianZeta& z, unsigned m);

// One level of the moduli decomposition: masses live at the two degrees
// d_L and r(2g-2) - d_L inside the window [0, r(2g-2)].
struct PartialXiData {
  long d_L = 0;                     // 0 <= d_L <= r(g-1)
  std::map<long, Rational> masses;  // degree -> sum of q^{h0(V)} / #Aut(V)
  Rational beta_L = Rational(1);    // boundary mass, > 0
};

// xi^L(s): the finite mass sum, symmetric in s <-> 1-s term by term, plus
// the closed boundary bracket
//   [ (q^{(1-s)d} + q^{(s-1)d}) / (q^{(s-1)D} - 1)
//   + (q^{ s   d} + q^{ -s  d}) / (q^{ -s  D} - 1) ] * beta_L
// with d = d_L - r(g-1) and D = r(2g-2). Simple poles at s = 0 and s = 1:
//   Res_{s=1} xi^L = +2 beta_L / (r(2g-2) ln q)
//   Res_{s=0} xi^L = -2 beta_L / (r(2g-2) ln q)
// (near s = 1 only the first denominator vanishes, q^{(s-1)D} - 1 ~
// (s-1) D ln q, and the numerator above it tends to 2; likewise at s = 0).
// This fixes the normalization by which beta_L is read back off the pole.
std::complex<double> evaluate_partial_xi(const PartialXiData& dat, unsigned r,
                                         uint64_t q, unsigned g,
                                         std::complex<double> s);

// q^{(r^2-1)(g-1)} / (q-1) * prod_{i=2}^{r} zeta_C(i): the total mass the
// beta invariants are bounded by (after dividing out the class number).
Rational siegel_mass(const ArtinZeta& z, unsigned r);

// alpha(d)^2 <= q^{d+2r} beta(d)^2 (squared to stay exact for odd d).
bool clifford_ok(const InvariantTable& t, long d);

} // namespace nazeta
