#include "nazeta/rational.hpp"

#include "nazeta/errors.hpp"

#include <cctype>

namespace nazeta {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0)
    throw input_error("rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // Validate shape before handing to GMP: GMP's set_str is permissive about
  // whitespace and bases, and silently accepts things like "1/" as 1.
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-'))
      t.remove_prefix(1);
    if (t.empty())
      return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  std::string_view num = s, den;
  bool has_den = false;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    has_den = true;
  }
  if (!is_int(num) || (has_den && !is_int(den)))
    throw input_error("malformed rational \"" + std::string(s) + "\"");
  // GMP rejects an explicit '+' sign, so drop it after validation.
  std::string norm(s);
  if (!norm.empty() && norm.front() == '+')
    norm.erase(norm.begin());
  if (auto slash = norm.find('/'); slash != std::string::npos && slash + 1 < norm.size() &&
                                   norm[slash + 1] == '+')
    norm.erase(slash + 1, 1);
  Rational r;
  if (r.v_.set_str(norm, 10) != 0)
    throw input_error("malformed rational \"" + std::string(s) + "\"");
  if (sgn(r.v_.get_den()) == 0)
    throw input_error("rational with zero denominator \"" + std::string(s) + "\"");
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw input_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::int_pow(unsigned long base, long e) {
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    return Rational(b);
  if (base == 0)
    throw input_error("zero base with negative exponent");
  return Rational(BigInt(1), b);
}

Rational Rational::pow(const Rational& b, long e) {
  if (e == 0)
    return Rational(1);
  if (b.is_zero()) {
    if (e < 0)
      throw input_error("zero base with negative exponent");
    return Rational(0);
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt np, dp;
  mpz_pow_ui(np.get_mpz_t(), b.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(dp.get_mpz_t(), b.v_.get_den().get_mpz_t(), k);
  return e > 0 ? Rational(np, dp) : Rational(dp, np);
}

BigInt Rational::to_integer(const char* context) const {
  if (!is_integer())
    throw math_error(std::string(context) + " is not an integer: " + str());
  return v_.get_num();
}

std::string Rational::str() const {
  mpq_class c = v_;
  return c.get_str();
}

} // namespace nazeta
