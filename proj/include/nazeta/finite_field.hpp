#pragma once

// Arithmetic in F_{p^k}, p an odd prime, built for exhaustive enumeration
// and quadratic-character evaluation. Elements are coefficient vectors of
// F_p[u]/(modulus) in a fixed-size array; the modulus is chosen
// deterministically (lexicographically smallest monic irreducible, comparing
// coefficients low-degree-first) so serialized elements are reproducible.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace nazeta {

// Coefficient i of u^i, entries in [0, p). Indices >= k are zero. The bound
// k <= 20 is forced by the enumeration budget: 3^21 > 2^32.
using FieldElt = std::array<uint32_t, 20>;
inline constexpr unsigned kMaxFieldDegree = 20;

enum class SquareClass { zero, square, nonsquare };

bool is_prime(uint64_t n);

class Field {
public:
  // p odd prime, k >= 1, p^k <= 2^32. The modulus is found by trial division
  // against every monic divisor of degree <= k/2 and is identical across
  // calls and runs.
  static Field make(uint64_t p, unsigned k);

  uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElt zero() const { return FieldElt{}; }
  FieldElt one() const { return from_int(1); }
  FieldElt from_int(uint64_t n) const;

  bool is_zero(const FieldElt& a) const;
  FieldElt add(const FieldElt& a, const FieldElt& b) const;
  FieldElt sub(const FieldElt& a, const FieldElt& b) const;
  FieldElt neg(const FieldElt& a) const;
  FieldElt mul(const FieldElt& a, const FieldElt& b) const;
  FieldElt pow(FieldElt a, uint64_t e) const;
  FieldElt inv(const FieldElt& a) const;

  SquareClass square_class(const FieldElt& a) const;

  // Mixed-radix bijection with [0, q): index = sum coeffs[i] * p^i. elt_at
  // enumerates every element exactly once as idx runs over [0, q).
  uint64_t index_of(const FieldElt& a) const;
  FieldElt elt_at(uint64_t idx) const;

  // Image of this field's generator u inside ext = F_{p^{k*m}}: the
  // smallest-index root of this field's modulus in ext. With it,
  // ext.compose(a, rho) maps elements along the embedding.
  FieldElt embed_generator(const Field& ext) const;
  // Evaluate sum a_i * x^i in this field, a_i scalar coefficients.
  FieldElt compose(const FieldElt& a, const FieldElt& x) const;

private:
  Field() = default;

  uint64_t p_ = 0;
  uint64_t q_ = 0;
  unsigned k_ = 0;
  std::vector<uint32_t> modulus_;

  // Lazily built table of nonzero squares, shared across copies; fields
  // beyond the table budget fall back to Euler-criterion powering.
  struct SquareTable;
  std::shared_ptr<SquareTable> sqtab_;
};

} // namespace nazeta
