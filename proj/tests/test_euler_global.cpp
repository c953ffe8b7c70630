#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nazeta/errors.hpp"
#include "nazeta/euler_product.hpp"
#include "nazeta/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <random>

using namespace nazeta;
namespace fs = std::filesystem;

namespace {

Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

IntegerCurve quintic() { return make_integer_curve({1, 0, 0, 0, 0, 1}); }

} // namespace

TEST_CASE("integer curve validation") {
  IntegerCurve c = quintic();
  CHECK(c.genus == 2);
  CHECK(make_integer_curve({0, -1, 0, 0, 0, 0, 0, 1}).genus == 3);

  CHECK_THROWS_AS((void)make_integer_curve({1, 0, 0, 1}), input_error);
  CHECK_THROWS_AS((void)make_integer_curve({1, 0, 1}), input_error);
  CHECK_THROWS_AS((void)make_integer_curve({1, 0, 0, 0, 1, 0}), input_error);
  // x^3 (x + 1)^2 has a repeated root.
  CHECK_THROWS_AS((void)make_integer_curve({0, 0, 0, 1, 2, 1}), input_error);
}

TEST_CASE("good primes exclude 2, discriminant primes, and lc primes") {
  // disc(x^5 + 1) = 5^5 up to sign, so only p = 2, 5 drop out.
  CHECK(Poly::resultant(Poly({Rational(1), Rational(0), Rational(0),
                              Rational(0), Rational(0), Rational(1)}),
                        Poly({Rational(0), Rational(0), Rational(0),
                              Rational(0), Rational(5)})) == Rational(3125));
  std::vector<uint64_t> expected = {3, 7, 11, 13, 17, 19, 23, 29};
  CHECK(good_primes(quintic(), 30) == expected);

  // Leading coefficient 3 knocks out p = 3 as well.
  IntegerCurve scaled = make_integer_curve({3, 0, 0, 0, 0, 3});
  CHECK(good_primes(scaled, 10) == std::vector<uint64_t>{7});

  CHECK_THROWS_AS((void)good_primes(quintic(), 2), input_error);
}

TEST_CASE("local factors at p = 3 match the frozen pipelines") {
  IntegerCurve c = quintic();

  LocalFactor r1 = local_factor(c, 3, 1);
  CHECK(r1.p == 3);
  CHECK(r1.poly == Poly({Rational(1), Rational(0), Rational(0), Rational(0),
                         Rational(9)}));

  LocalFactor r2 = local_factor(c, 3, 2);
  Poly expected(std::vector<Rational>{Rational(1), rat(8, 3), rat(11, 30),
                                      Rational(8), Rational(31), Rational(24),
                                      rat(33, 10), Rational(72), Rational(81)});
  CHECK(r2.poly == expected);
  CHECK(r2.poly.coeff(0) == Rational(1));

  CHECK_THROWS_AS((void)local_factor(c, 5, 1), math_error);
  CHECK_THROWS_AS((void)local_factor(c, 2, 1), math_error);
  CHECK_THROWS_AS((void)local_factor(c, 9, 1), input_error);
  CHECK_THROWS_AS((void)local_factor(c, 3, 3), input_error);
  IntegerCurve g3 = make_integer_curve({0, -1, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS((void)local_factor(g3, 5, 2), input_error);
}

TEST_CASE("fingerprints separate curves and ranks") {
  IntegerCurve c = quintic();
  CHECK(LocalFactorStore::fingerprint_of(c, 1) == 5215844029512599835ull);
  CHECK(LocalFactorStore::fingerprint_of(c, 2) == 3825897677106783642ull);
  IntegerCurve other = make_integer_curve({0, 1, 0, 0, 0, 1});
  CHECK(LocalFactorStore::fingerprint_of(other, 2) == 8907427135640387722ull);
}

TEST_CASE("store inserts are immutable and persistence round-trips") {
  IntegerCurve c = quintic();
  uint64_t fp = LocalFactorStore::fingerprint_of(c, 1);
  LocalFactorStore store(fp, 1);
  store.insert(local_factor(c, 3, 1));
  store.insert(local_factor(c, 7, 1));
  CHECK(store.size() == 2);
  REQUIRE(store.find(3) != nullptr);
  CHECK(store.find(5) == nullptr);

  // Re-inserting the identical factor is a no-op.
  store.insert(local_factor(c, 3, 1));
  CHECK(store.size() == 2);
  // A different polynomial at a held prime is refused.
  CHECK_THROWS_AS(
      store.insert(LocalFactor{3, Poly({Rational(1), Rational(5)})}),
      input_error);
  // Factors must be normalized.
  CHECK_THROWS_AS(
      store.insert(LocalFactor{13, Poly({Rational(2), Rational(5)})}),
      input_error);

  fs::path dir("tmp_test_euler");
  fs::remove_all(dir);
  std::string path = (dir / "factors.jsonl").string();
  store.save(path);
  std::string bytes = read_file(path);
  store.save(path);
  CHECK(read_file(path) == bytes);  // rewrite is byte-identical

  LocalFactorStore back = LocalFactorStore::load(path);
  CHECK(back.fingerprint() == fp);
  CHECK(back.rank() == 1);
  CHECK(back.size() == 2);
  REQUIRE(back.find(7) != nullptr);
  CHECK(back.find(7)->poly == store.find(7)->poly);

  atomic_write((dir / "empty.jsonl").string(), "");
  CHECK_THROWS_AS((void)LocalFactorStore::load((dir / "empty.jsonl").string()),
                  input_error);
  atomic_write((dir / "bad.jsonl").string(), "{\"x\":1}\n");
  CHECK_THROWS_AS((void)LocalFactorStore::load((dir / "bad.jsonl").string()),
                  input_error);
  atomic_write((dir / "line.jsonl").string(),
               "{\"fingerprint\":\"00000000000000ff\",\"r\":1}\nnot json\n");
  CHECK_THROWS_AS((void)LocalFactorStore::load((dir / "line.jsonl").string()),
                  input_error);
  fs::remove_all(dir);
}

TEST_CASE("parallel factor fill is deterministic and fingerprint-guarded") {
  IntegerCurve c = quintic();
  LocalFactorStore store(LocalFactorStore::fingerprint_of(c, 1), 1);
  compute_factors(c, 1, 20, 4, store);
  CHECK(store.size() == 6);  // 3, 7, 11, 13, 17, 19
  for (uint64_t p : good_primes(c, 20)) {
    REQUIRE(store.find(p) != nullptr);
    CHECK(store.find(p)->poly == local_factor(c, p, 1).poly);
  }
  compute_factors(c, 1, 20, 4, store);  // idempotent
  CHECK(store.size() == 6);

  LocalFactorStore wrong(12345, 1);
  CHECK_THROWS_AS(compute_factors(c, 1, 20, 2, wrong), input_error);
}

TEST_CASE("abscissa thresholds") {
  CHECK(euler_abscissa(1, 2) == 3.0);
  CHECK(euler_abscissa(2, 2) == 5.0);
  CHECK(euler_abscissa(1, 3) == 4.0);
  CHECK(euler_abscissa(2, 3) == 8.0);
}

TEST_CASE("truncated product: empty store, guards, and zero hits") {
  // No good primes <= 3 for this curve, so the empty product is exactly 1.
  IntegerCurve scaled = make_integer_curve({3, 0, 0, 0, 0, 3});
  LocalFactorStore empty(LocalFactorStore::fingerprint_of(scaled, 1), 1);
  EulerReport rep = truncated_product(empty, scaled, {3.5, 0.0}, 3);
  CHECK(rep.value == std::complex<double>(1.0, 0.0));
  REQUIRE(rep.partials.size() == 3);
  CHECK(rep.partials[2].x == 3);
  CHECK(rep.deltas == std::vector<double>{0.0, 0.0});

  IntegerCurve c = quintic();
  LocalFactorStore store(LocalFactorStore::fingerprint_of(c, 1), 1);
  compute_factors(c, 1, 20, 0, store);

  // Below Re(s) = 3 the evaluation is refused unless forced.
  CHECK_THROWS_AS((void)truncated_product(store, c, {2.0, 0.0}, 20),
                  input_error);
  CHECK_NOTHROW((void)truncated_product(store, c, {2.0, 0.0}, 20, true));

  // Asking past the stored range reports the missing prime.
  CHECK_THROWS_AS((void)truncated_product(store, c, {3.5, 0.0}, 50),
                  input_error);

  // A store from another curve cannot be replayed.
  IntegerCurve other = make_integer_curve({0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS((void)truncated_product(store, other, {3.5, 0.0}, 20),
                  input_error);

  // 1 - 3t vanishes at t = 3^{-1}; forcing s = 1 lands on it.
  LocalFactorStore zero(LocalFactorStore::fingerprint_of(c, 1), 1);
  zero.insert(LocalFactor{3, Poly({Rational(1), Rational(-3)})});
  CHECK_THROWS_AS((void)truncated_product(zero, c, {1.0, 0.0}, 3, true),
                  numeric_error);
}

TEST_CASE("rank-1 product converges inside the abscissa") {
  IntegerCurve c = quintic();
  LocalFactorStore store(LocalFactorStore::fingerprint_of(c, 1), 1);
  compute_factors(c, 1, 400, 0, store);

  EulerReport r200 = truncated_product(store, c, {3.0, 0.0}, 200);
  REQUIRE(r200.partials.size() == 3);
  CHECK(r200.partials[0].x == 50);
  CHECK(r200.partials[1].x == 100);
  CHECK(r200.partials[2].x == 200);
  REQUIRE(r200.deltas.size() == 2);
  CHECK(r200.deltas[1] < r200.deltas[0]);

  // Doubling the cutoff moves the value very little. The tail here decays
  // like X^{-3/2} since only p = 1 mod 5 contribute a nonzero linear term:
  // measured gaps are 5.3e-6 at X=200, 1.2e-6 at X=300, 2.7e-7 at X=600.
  EulerReport r400 = truncated_product(store, c, {3.0, 0.0}, 400);
  CHECK(std::abs(r400.value - r200.value) < 1e-5);

  // Partial products are finite and away from zero.
  CHECK(std::abs(r400.value) > 0.5);
  CHECK(std::abs(r400.value) < 2.0);
}

TEST_CASE("rank-2 product at s = 5.5 has shrinking deltas") {
  IntegerCurve c = quintic();
  LocalFactorStore store(LocalFactorStore::fingerprint_of(c, 2), 2);
  compute_factors(c, 2, 100, 0, store);

  EulerReport rep = truncated_product(store, c, {5.5, 0.0}, 100);
  REQUIRE(rep.deltas.size() == 2);
  CHECK(rep.deltas[1] < rep.deltas[0]);
  CHECK(rep.deltas[1] < 1e-4);
  CHECK(std::abs(rep.value) > 0.1);
}

TEST_CASE("elliptic closed form and identities") {
  CHECK(elliptic_rank2_factor(3) ==
        Poly({Rational(1), Rational(2), Rational(2), Rational(6),
              Rational(9)}));
  CHECK_THROWS_AS((void)elliptic_rank2_factor(2), input_error);
  CHECK_THROWS_AS((void)elliptic_rank2_factor(9), input_error);

  for (uint64_t p = 3; p <= 100; ++p) {
    if (!is_prime(p))
      continue;
    CheckReport rep = elliptic_identities_check(p);
    CHECK(rep.all_pass());
    CHECK(rep.rows().size() == 4);
  }

  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<uint64_t> dist(3, 9999);
  int tested = 0;
  while (tested < 25) {
    uint64_t p = dist(rng);
    if (!is_prime(p))
      continue;
    ++tested;
    CHECK(elliptic_identities_check(p).all_pass());
  }
}
