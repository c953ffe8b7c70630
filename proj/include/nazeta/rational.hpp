#pragma once

// Exact rational arithmetic (GMP mpq underneath). Values are kept canonical:
// reduced to lowest terms, denominator positive. All bookkeeping that feeds a
// printed result or a consistency check stays in this type; doubles appear
// only in the root-finding and lattice layers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nazeta {

using BigInt = mpz_class;

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "n" or "n/d" with optional sign; rejects anything else.
  static Rational from_string(std::string_view s);

  // q^e for integer q >= 1 and any integer e (negative exponents invert).
  static Rational int_pow(unsigned long base, long e);
  static Rational pow(const Rational& b, long e);

  Rational operator-() const { Rational r; r.v_ = -v_; return r; }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_positive() const { return sgn(v_) > 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  // Exact integer value; throws math_error when not an integer.
  BigInt to_integer(const char* context = "value") const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

private:
  mpq_class v_;
};

} // namespace nazeta
