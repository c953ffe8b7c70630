#include "nazeta/euler_product.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/json_io.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace nazeta {

namespace {

Poly integer_poly(const std::vector<long long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs)
    c.push_back(Rational(static_cast<long>(v)));
  return Poly(std::move(c));
}

// |disc-like obstruction|: the reduction at p keeps degree and stays
// squarefree exactly when p divides neither res(f, f') nor lc(f).
BigInt reduction_obstruction(const IntegerCurve& c) {
  Poly f = integer_poly(c.f_coeffs);
  Rational res = Poly::resultant(f, f.derivative());
  Rational bad = res * Rational(static_cast<long>(c.f_coeffs.back()));
  if (!bad.is_integer())
    throw math_error("resultant of an integer polynomial came out fractional");
  BigInt n = bad.to_integer("reduction obstruction");
  return n < 0 ? BigInt(-n) : n;
}

bool divides(const BigInt& n, uint64_t p) {
  return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0;
}

std::string coeff_list(const Poly& p) {
  std::string out;
  for (long i = 0; i <= std::max(p.degree(), 0L); ++i) {
    if (i)
      out += ", ";
    out += p.coeff(i).str();
  }
  return out;
}

} // namespace

IntegerCurve make_integer_curve(std::vector<long long> f_coeffs) {
  if (f_coeffs.size() < 6 || f_coeffs.size() % 2 != 0)
    throw input_error("f must have odd degree at least 5");
  if (f_coeffs.back() == 0)
    throw input_error("leading coefficient of f must be nonzero");
  Poly f = integer_poly(f_coeffs);
  if (Poly::resultant(f, f.derivative()).is_zero())
    throw input_error("f must be squarefree (nonzero discriminant)");
  unsigned genus = static_cast<unsigned>((f_coeffs.size() - 2) / 2);
  return IntegerCurve{std::move(f_coeffs), genus};
}

std::vector<uint64_t> good_primes(const IntegerCurve& c, uint64_t X) {
  if (X < 3)
    throw input_error("prime bound must be at least 3");
  BigInt bad = reduction_obstruction(c);
  std::vector<uint64_t> out;
  for (uint64_t p = 3; p <= X; p += 2)
    if (is_prime(p) && !divides(bad, p))
      out.push_back(p);
  return out;
}

LocalFactor local_factor(const IntegerCurve& c, uint64_t p, unsigned r) {
  if (r != 1 && r != 2)
    throw input_error("local factors are built for rank 1 or 2");
  if (r == 2 && c.genus != 2)
    throw input_error("the rank-2 local factor needs a genus-2 curve");
  if (p < 2 || !is_prime(p))
    throw input_error("local factors live at primes");
  if (p == 2 || divides(reduction_obstruction(c), p))
    throw math_error("bad reduction at p = " + std::to_string(p));

  Field F = Field::make(p, 1);
  HyperellipticCurve red = make_curve(F, c.f_coeffs);
  if (r == 1) {
    ArtinZeta z = ArtinZeta::from_curve(red);
    return LocalFactor{p, z.numerator()};
  }
  NonAbelianZeta z2 = assemble_rank2_genus2(rank2_input_from_curve(red));
  const Poly& P = z2.numerator();
  return LocalFactor{p, P.scaled(Rational(1) / P.coeff(0))};
}

uint64_t LocalFactorStore::fingerprint_of(const IntegerCurve& c,
                                          unsigned rank) {
  std::string key = "r=" + std::to_string(rank) + ";f=";
  for (size_t i = 0; i < c.f_coeffs.size(); ++i) {
    if (i)
      key += ',';
    key += std::to_string(c.f_coeffs[i]);
  }
  uint64_t h = 14695981039346656037ull;
  for (unsigned char b : key) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

void LocalFactorStore::insert(LocalFactor f) {
  auto it = factors_.find(f.p);
  if (it != factors_.end()) {
    if (it->second.poly != f.poly)
      throw input_error("store already holds a different factor at p = " +
                        std::to_string(f.p));
    return;
  }
  if (f.poly.coeff(0) != Rational(1))
    throw input_error("local factors are normalized to constant term 1");
  factors_.emplace(f.p, std::move(f));
}

const LocalFactor* LocalFactorStore::find(uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? nullptr : &it->second;
}

void LocalFactorStore::save(const std::string& path) const {
  std::string out;
  {
    JsonWriter w;
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fingerprint_));
    w.begin_object().key("fingerprint").value(buf).key("r").value(rank_)
        .end_object();
    out = w.str() + "\n";
  }
  for (const auto& [p, f] : factors_) {
    JsonWriter w;
    w.begin_object().key("p").value(static_cast<unsigned long>(p))
        .key("coeffs");
    write_poly(w, f.poly);
    w.end_object();
    out += w.str() + "\n";
  }
  atomic_write(path, out);
}

LocalFactorStore LocalFactorStore::load(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line))
    throw input_error("store file is empty: " + path);
  uint64_t fp = 0;
  unsigned rank = 0;
  try {
    nlohmann::json h = nlohmann::json::parse(line);
    fp = std::stoull(h.at("fingerprint").get<std::string>(), nullptr, 16);
    rank = h.at("r").get<unsigned>();
  } catch (const std::exception& e) {
    throw input_error(std::string("store header malformed: ") + e.what());
  }
  LocalFactorStore store(fp, rank);
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      uint64_t p = j.at("p").get<uint64_t>();
      std::vector<Rational> coeffs;
      for (const auto& c : j.at("coeffs"))
        coeffs.push_back(Rational::from_string(c.get<std::string>()));
      store.insert(LocalFactor{p, Poly(std::move(coeffs))});
    } catch (const input_error&) {
      throw;
    } catch (const std::exception& e) {
      throw input_error("store line " + std::to_string(lineno) +
                        " malformed: " + e.what());
    }
  }
  return store;
}

void compute_factors(const IntegerCurve& c, unsigned r, uint64_t X,
                     unsigned threads, LocalFactorStore& store) {
  if (store.fingerprint() != LocalFactorStore::fingerprint_of(c, r) ||
      store.rank() != r)
    throw input_error("store fingerprint does not match this curve and rank");
  std::vector<uint64_t> todo;
  for (uint64_t p : good_primes(c, X))
    if (!store.find(p))
      todo.push_back(p);
  if (todo.empty())
    return;

  unsigned n = threads ? threads : std::thread::hardware_concurrency();
  if (n == 0)
    n = 1;
  n = std::min<unsigned>(n, static_cast<unsigned>(todo.size()));

  std::vector<std::optional<LocalFactor>> results(todo.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= todo.size())
        return;
      try {
        results[i] = local_factor(c, todo[i], r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure)
          failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  // Ascending merge keeps the store file byte-deterministic.
  for (auto& f : results)
    store.insert(std::move(*f));
}

double euler_abscissa(unsigned r, unsigned g) {
  return 1.0 + g + static_cast<double>(r) * (r - 1) * (g - 1.0);
}

EulerReport truncated_product(const LocalFactorStore& store,
                              const IntegerCurve& c, std::complex<double> s,
                              uint64_t X, bool force) {
  if (store.fingerprint() !=
      LocalFactorStore::fingerprint_of(c, store.rank()))
    throw input_error("store fingerprint does not match this curve and rank");
  double abscissa = euler_abscissa(store.rank(), c.genus);
  if (!force && s.real() < abscissa - 1e-12)
    throw input_error("Re(s) is below the convergence abscissa " +
                      std::to_string(abscissa) + "; pass force to evaluate");

  EulerReport rep;
  std::complex<double> prod{1.0, 0.0};
  const uint64_t marks[2] = {X / 4, X / 2};
  size_t mark = 0;
  for (uint64_t p : good_primes(c, X)) {
    while (mark < 2 && p > marks[mark]) {
      rep.partials.push_back({marks[mark], prod});
      ++mark;
    }
    const LocalFactor* f = store.find(p);
    if (!f)
      throw input_error("incomplete store: no local factor at p = " +
                        std::to_string(p));
    std::complex<double> t =
        std::exp(-s * std::log(static_cast<double>(p)));
    std::complex<double> v = f->poly.eval(t);
    if (std::abs(v) < 1e-15)
      throw numeric_error("local zero hit at p = " + std::to_string(p));
    prod *= 1.0 / v;
  }
  while (mark < 2) {
    rep.partials.push_back({marks[mark], prod});
    ++mark;
  }
  rep.partials.push_back({X, prod});
  rep.value = prod;
  for (size_t i = 1; i < rep.partials.size(); ++i)
    rep.deltas.push_back(
        std::abs(rep.partials[i].value - rep.partials[i - 1].value));
  return rep;
}

Poly elliptic_rank2_factor(uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw input_error("the closed form needs an odd prime");
  Rational pr{BigInt(p)};
  return Poly({Rational(1), pr - Rational(1), Rational(2) * pr - Rational(4),
               pr * pr - pr, pr * pr});
}

CheckReport elliptic_identities_check(uint64_t p) {
  Rational pr{BigInt(p)};
  Poly a({Rational(1), pr - Rational(2)});          // 1 + (p-2) t
  Poly unit({Rational(1), Rational(1)});            // 1 + t
  Poly a_p = a * unit;
  Poly b1({pr - Rational(2), pr});                  // (p-2) + p t
  Poly b2({Rational(1), pr});                       // 1 + p t
  Poly b_p = b1 * b2;

  CheckReport rep;
  Poly a_expected({Rational(1), pr - Rational(1), pr - Rational(2)});
  rep.add(predicate_row("a_factorization", a_p == a_expected,
                        coeff_list(a_p), coeff_list(a_expected)));
  Poly b_expected({pr - Rational(2), pr * pr - pr, pr * pr});
  rep.add(predicate_row("b_factorization", b_p == b_expected,
                        coeff_list(b_p), coeff_list(b_expected)));

  Poly factor = elliptic_rank2_factor(p);
  Poly sum = a_p + Poly::monomial(Rational(1), 2) * b_p;
  rep.add(predicate_row("factor_splits_as_a_plus_t2_b", factor == sum,
                        coeff_list(factor), coeff_list(sum)));

  // p^2 t^2 a(1/(p t)) reverses the coefficients with p-power weights.
  std::vector<Rational> dual_coeffs;
  for (long j = 0; j <= 2; ++j)
    dual_coeffs.push_back(a_p.coeff(static_cast<size_t>(2 - j)) *
                          Rational::pow(pr, j));
  Poly dual(std::move(dual_coeffs));
  rep.add(predicate_row("duality_a_to_b", dual == b_p, coeff_list(dual),
                        coeff_list(b_p)));
  return rep;
}

} // namespace nazeta
