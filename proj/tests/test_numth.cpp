#include <doctest.h>

#include <random>
#include <stdexcept>

#include "weilsurf/numth.hpp"

using namespace weilsurf::numth;

namespace {

// Independent oracles: plain exhaustive search, no shared code with numth.
bool brute_square_mod(std::int64_t n, std::int64_t modulus) {
  const std::int64_t r = ((n % modulus) + modulus) % modulus;
  for (std::int64_t x = 0; x < modulus; ++x)
    if ((x * x) % modulus == r) return true;
  return false;
}

int brute_valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(-7, 7) == 1);
  CHECK(padic_valuation(0, 5).is_infinite());
  CHECK(padic_valuation(2 * 81 * 5, 3) == 4);
  CHECK(padic_valuation(10, 3) == 0);
  CHECK(padic_valuation(0, 5) > 1000);
  CHECK(Valuation(3) < Valuation::infinity());
}

TEST_CASE("padic_valuation is additive with infinity absorbing") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 500; ++i) {
      const std::int64_t x = dist(rng), y = dist(rng);
      CHECK(padic_valuation(Int(x) * y, p) == padic_valuation(x, p) + padic_valuation(y, p));
    }
  }
  CHECK((padic_valuation(0, 3) + Valuation(2)).is_infinite());
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(4) == Int(2));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK_FALSE(is_perfect_square(76));
  CHECK(is_perfect_square(0) == Int(0));
  for (Int r = 0; r <= 1'000'000; ++r) {
    const auto root = is_perfect_square(r * r);
    REQUIRE(root);
    REQUIRE(*root == r);
  }
  const Int big = (Int(1) << 62) + 12345;
  CHECK(is_perfect_square(big * big) == big);
  CHECK_FALSE(is_perfect_square(big * big + 1));
}

TEST_CASE("is_squarefree and prime_factors") {
  CHECK(is_squarefree(6));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(-49));
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(-1));
  CHECK_THROWS_AS(is_squarefree(0), std::invalid_argument);

  CHECK(prime_factors(7) == std::vector<Int>{7});
  CHECK(prime_factors(-12) == std::vector<Int>{2, 2, 3});
  CHECK(prime_factors(1).empty());
  CHECK_THROWS_AS(prime_factors(0), std::invalid_argument);

  for (std::int64_t n = -100'000; n <= 100'000; ++n) {
    if (n == 0) continue;
    // Independent squarefree oracle: trial division by d^2.
    bool oracle = true;
    const std::int64_t an = n < 0 ? -n : n;
    for (std::int64_t d = 2; d * d <= an; ++d)
      if (an % (d * d) == 0) {
        oracle = false;
        break;
      }
    const auto f = prime_factors(n);
    Int prod = 1;
    for (Int x : f) prod *= x;
    REQUIRE(prod == an);
    REQUIRE(is_squarefree(n) == oracle);
  }
}

TEST_CASE("is_square_mod_p") {
  CHECK(is_square_mod_p(1, 7));
  CHECK(is_square_mod_p(2, 7));
  CHECK_FALSE(is_square_mod_p(3, 7));
  CHECK(brute_square_mod(2, 7));
  CHECK_FALSE(brute_square_mod(3, 7));
  CHECK_THROWS_AS(is_square_mod_p(14, 7), std::invalid_argument);
  CHECK_THROWS_AS(is_square_mod_p(1, 2), std::invalid_argument);
  for (std::int64_t p : {3, 5, 7, 11, 13, 101})
    for (std::int64_t u = -300; u <= 300; ++u)
      if (u % p != 0) REQUIRE(is_square_mod_p(u, p) == brute_square_mod(u, p));
}

TEST_CASE("is_padic_square examples") {
  CHECK_FALSE(is_padic_square(-7, 7));
  CHECK(is_padic_square(17, 2));
  CHECK(brute_square_mod(17, 1 << 10));
  CHECK(is_padic_square(18, 7));
  CHECK_THROWS_AS(is_padic_square(0, 3), std::invalid_argument);
}

TEST_CASE("is_padic_square agrees with exhaustive search modulo a high power") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t n = -500; n <= 500; ++n) {
      if (n == 0) continue;
      const int v = brute_valuation(n, p);
      const int k = v + (p == 2 ? 5 : 3);
      std::int64_t modulus = 1;
      for (int i = 0; i < k; ++i) modulus *= p;
      INFO("n=" << n << " p=" << p);
      REQUIRE(is_padic_square(n, p) == brute_square_mod(n, modulus));
    }
  }
}

TEST_CASE("recognize_prime_power") {
  const auto nine = recognize_prime_power(9);
  REQUIRE(nine);
  CHECK(nine->p == 3);
  CHECK(nine->m == 2);
  const auto seven = recognize_prime_power(7);
  REQUIRE(seven);
  CHECK(seven->p == 7);
  CHECK(seven->m == 1);
  CHECK_FALSE(recognize_prime_power(12));
  CHECK_FALSE(recognize_prime_power(1'000'000));
  CHECK(recognize_prime_power(1024)->m == 10);
  CHECK_THROWS_AS(recognize_prime_power(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower::make(4, 1), std::invalid_argument);
  CHECK(PrimePower::make(3, 4).sqrt_q() == 9);
}

TEST_CASE("to_string of wide integers") {
  CHECK(to_string(0) == "0");
  CHECK(to_string(-42) == "-42");
  CHECK(to_string(Int(1) << 100) == "1267650600228229401496703205376");
}
