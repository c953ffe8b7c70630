#pragma once

// Global zeta data over the rationals: reduce an integer curve at good odd
// primes, build the local rank-r numerators there, normalize to constant
// term 1, persist them in a JSON-lines store, and form truncated Euler
// products with a convergence report. The degree-4 elliptic closed form and
// its factorization identities live here too.

#include "nazeta/rank2_genus2.hpp"
#include "nazeta/report.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nazeta {

// y^2 = f(x) with integer coefficients, odd degree >= 5, squarefree over
// the rationals (nonzero discriminant).
struct IntegerCurve {
  std::vector<long long> f_coeffs;  // ascending, leading entry nonzero
  unsigned genus;                   // (deg f - 1) / 2
};

IntegerCurve make_integer_curve(std::vector<long long> f_coeffs);

// Odd primes p <= X at which the reduction stays a genus-preserving
// squarefree model: p divides neither disc(f) nor lc(f). Ascending.
std::vector<uint64_t> good_primes(const IntegerCurve& c, uint64_t X);

// The normalized local numerator at p: constant term exactly 1.
struct LocalFactor {
  uint64_t p = 0;
  Poly poly;
};

// r = 1 gives the degree-2g point-count numerator (already monic at t^0);
// r = 2 (genus 2 only) runs the explicit pipeline and divides by the
// constant term. A prime dividing disc(f) * lc(f), or p = 2, is rejected.
LocalFactor local_factor(const IntegerCurve& c, uint64_t p, unsigned r);

// File-backed map p -> LocalFactor, keyed to one (curve, rank) pair by a
// fingerprint so stale caches cannot be replayed against another curve.
class LocalFactorStore {
public:
  LocalFactorStore(uint64_t fingerprint, unsigned rank)
      : fingerprint_(fingerprint), rank_(rank) {}

  static uint64_t fingerprint_of(const IntegerCurve& c, unsigned rank);

  uint64_t fingerprint() const { return fingerprint_; }
  unsigned rank() const { return rank_; }
  size_t size() const { return factors_.size(); }

  // Factors are immutable once written: re-inserting the same prime is a
  // no-op when identical and an error when the polynomial differs.
  void insert(LocalFactor f);
  const LocalFactor* find(uint64_t p) const;

  void save(const std::string& path) const;
  static LocalFactorStore load(const std::string& path);

private:
  uint64_t fingerprint_;
  unsigned rank_;
  std::map<uint64_t, LocalFactor> factors_;
};

// Compute every missing factor for the good primes up to X, splitting the
// primes across `threads` workers (0 = hardware concurrency) and merging
// in ascending order so the resulting store is deterministic.
void compute_factors(const IntegerCurve& c, unsigned r, uint64_t X,
                     unsigned threads, LocalFactorStore& store);

// Smallest Re(s) with proven convergence of the rank-r Euler product.
double euler_abscissa(unsigned r, unsigned g);

struct EulerPartial {
  uint64_t x = 0;                    // primes p <= x were included
  std::complex<double> value{1.0, 0.0};
};

struct EulerReport {
  std::vector<EulerPartial> partials;  // at X/4, X/2, X
  std::vector<double> deltas;          // successive absolute differences
  std::complex<double> value{1.0, 0.0};
};

// prod_{p <= X good} 1 / Ptilde_p(p^{-s}), with partial products recorded
// at X/4, X/2, X. Below the abscissa the evaluation is refused unless
// force is set.
EulerReport truncated_product(const LocalFactorStore& store,
                              const IntegerCurve& c, std::complex<double> s,
                              uint64_t X, bool force = false);

// Degree-4 closed form [1, p-1, 2p-4, p^2-p, p^2] attached to an elliptic
// reduction at odd p, plus the exact factorization and duality identities
// it satisfies.
Poly elliptic_rank2_factor(uint64_t p);
CheckReport elliptic_identities_check(uint64_t p);

} // namespace nazeta
