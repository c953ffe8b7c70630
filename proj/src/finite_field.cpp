#include "nazeta/finite_field.hpp"

#include "nazeta/errors.hpp"

#include <mutex>
#include <string>

namespace nazeta {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Dense polynomial remainder over F_p: a mod b, b monic, coefficients
// ascending. Both vectors trimmed to true degree.
std::vector<uint32_t> polymod_fp(std::vector<uint64_t> a, const std::vector<uint32_t>& b,
                                 uint64_t p) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    uint64_t lead = a.back() % p;
    size_t shift = a.size() - 1 - db;
    if (lead) {
      for (size_t j = 0; j < db; ++j) {
        uint64_t t = mulmod_u64(lead, b[j], p);
        a[shift + j] = (a[shift + j] + p - t) % p;
      }
    }
    a.pop_back();
  }
  std::vector<uint32_t> r;
  r.reserve(a.size());
  for (uint64_t c : a)
    r.push_back(static_cast<uint32_t>(c % p));
  while (!r.empty() && r.back() == 0)
    r.pop_back();
  return r;
}

// Does any monic divisor of degree <= k/2 divide the monic candidate?
bool has_small_divisor(const std::vector<uint32_t>& cand, uint64_t p) {
  const size_t k = cand.size() - 1;
  std::vector<uint64_t> cand64(cand.begin(), cand.end());
  for (size_t dd = 1; dd <= k / 2; ++dd) {
    // Enumerate all p^dd monic divisors of degree dd by odometer.
    std::vector<uint32_t> div(dd + 1, 0);
    div[dd] = 1;
    while (true) {
      if (polymod_fp(cand64, div, p).empty())
        return true;
      size_t pos = 0;
      while (pos < dd && div[pos] + 1 == p)
        div[pos++] = 0;
      if (pos == dd)
        break;
      ++div[pos];
    }
  }
  return false;
}

} // namespace

bool is_prime(uint64_t n) {
  if (n < 2)
    return false;
  for (uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0)
      return n == sp;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witness set for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

struct Field::SquareTable {
  std::once_flag built;
  std::vector<uint8_t> is_square;  // indexed by element index; nonzero squares marked
};

Field Field::make(uint64_t p, unsigned k) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw input_error("invalid characteristic: p must be an odd prime, got " + std::to_string(p));
  if (k < 1)
    throw input_error("field degree must be at least 1");
  const uint64_t budget = 1ull << 32;
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > budget)
      throw input_error("field too large: p^k exceeds the 2^32 enumeration budget");
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<uint64_t>(q);
  f.sqtab_ = std::make_shared<SquareTable>();
  if (k == 1) {
    f.modulus_ = {0, 1};
    return f;
  }
  // Lexicographically smallest monic irreducible, coefficients compared
  // low-degree-first: odometer with the constant term as the slowest digit.
  std::vector<uint32_t> cand(k + 1, 0);
  cand[k] = 1;
  while (true) {
    if (!has_small_divisor(cand, p)) {
      f.modulus_ = cand;
      return f;
    }
    size_t pos = k - 1;
    while (true) {
      if (cand[pos] + 1 < p) {
        ++cand[pos];
        break;
      }
      cand[pos] = 0;
      if (pos == 0)
        throw math_error("no irreducible polynomial found (unreachable for prime p)");
      --pos;
    }
  }
}

FieldElt Field::from_int(uint64_t n) const {
  FieldElt e{};
  e[0] = static_cast<uint32_t>(n % p_);
  return e;
}

bool Field::is_zero(const FieldElt& a) const {
  for (unsigned i = 0; i < k_; ++i)
    if (a[i])
      return false;
  return true;
}

FieldElt Field::add(const FieldElt& a, const FieldElt& b) const {
  FieldElt r{};
  for (unsigned i = 0; i < k_; ++i) {
    uint64_t s = static_cast<uint64_t>(a[i]) + b[i];
    r[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElt Field::sub(const FieldElt& a, const FieldElt& b) const {
  FieldElt r{};
  for (unsigned i = 0; i < k_; ++i) {
    uint64_t s = static_cast<uint64_t>(a[i]) + p_ - b[i];
    r[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElt Field::neg(const FieldElt& a) const { return sub(zero(), a); }

FieldElt Field::mul(const FieldElt& a, const FieldElt& b) const {
  if (k_ == 1) {
    FieldElt r{};
    r[0] = static_cast<uint32_t>(mulmod_u64(a[0], b[0], p_));
    return r;
  }
  // Schoolbook convolution. For k >= 2 the budget forces p <= 2^16, so each
  // product fits in 32 bits and k of them sum without overflow in 64.
  uint64_t acc[2 * kMaxFieldDegree - 1] = {0};
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i])
      continue;
    for (unsigned j = 0; j < k_; ++j)
      acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t lead = acc[i] % p_;
    if (lead) {
      // Subtract lead * u^(i-k) * modulus; the monic top cancels acc[i].
      for (unsigned j = 0; j < k_; ++j) {
        uint64_t t = mulmod_u64(lead, modulus_[j], p_);
        acc[i - k_ + j] += p_ - t % p_;
      }
    }
    acc[i] = 0;
  }
  FieldElt r{};
  for (unsigned i = 0; i < k_; ++i)
    r[i] = static_cast<uint32_t>(acc[i] % p_);
  return r;
}

FieldElt Field::pow(FieldElt a, uint64_t e) const {
  FieldElt r = one();
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElt Field::inv(const FieldElt& a) const {
  if (is_zero(a))
    throw input_error("division by zero in F_q");
  return pow(a, q_ - 2);
}

uint64_t Field::index_of(const FieldElt& a) const {
  uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;)
    idx = idx * p_ + a[i];
  return idx;
}

FieldElt Field::elt_at(uint64_t idx) const {
  FieldElt e{};
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

SquareClass Field::square_class(const FieldElt& a) const {
  if (is_zero(a))
    return SquareClass::zero;
  constexpr uint64_t table_budget = 1ull << 24;
  if (q_ <= table_budget) {
    std::call_once(sqtab_->built, [this] {
      sqtab_->is_square.assign(q_, 0);
      for (uint64_t i = 1; i < q_; ++i) {
        FieldElt t = elt_at(i);
        sqtab_->is_square[index_of(mul(t, t))] = 1;
      }
    });
    return sqtab_->is_square[index_of(a)] ? SquareClass::square : SquareClass::nonsquare;
  }
  FieldElt e = pow(a, (q_ - 1) / 2);
  return is_zero(sub(e, one())) ? SquareClass::square : SquareClass::nonsquare;
}

FieldElt Field::embed_generator(const Field& ext) const {
  if (ext.p_ != p_ || ext.k_ % k_ != 0)
    throw input_error("embedding requires an extension of the same characteristic");
  if (ext.k_ == k_)
    return ext.elt_at(k_ == 1 ? 0 : p_);  // identity: u itself (or 0 when k=1)
  if (k_ == 1)
    return ext.zero();  // scalars embed as constants; no generator needed
  for (uint64_t idx = 0; idx < ext.q_; ++idx) {
    FieldElt x = ext.elt_at(idx);
    // Evaluate this field's modulus at x inside ext (Horner, scalar coeffs).
    FieldElt acc = ext.zero();
    for (unsigned i = k_ + 1; i-- > 0;) {
      acc = ext.mul(acc, x);
      acc = ext.add(acc, ext.from_int(modulus_[i]));
    }
    if (ext.is_zero(acc))
      return x;
  }
  throw math_error("modulus has no root in the extension field (unreachable when k | ext.k)");
}

FieldElt Field::compose(const FieldElt& a, const FieldElt& x) const {
  FieldElt acc = zero();
  for (unsigned i = kMaxFieldDegree; i-- > 0;) {
    acc = mul(acc, x);
    acc = add(acc, from_int(a[i]));
  }
  return acc;
}

} // namespace nazeta
