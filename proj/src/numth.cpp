#include "weilsurf/numth.hpp"

#include <algorithm>
#include <stdexcept>

namespace weilsurf::numth {

namespace {

using UInt = unsigned __int128;

constexpr std::int64_t kMaxPrimePower = std::int64_t{1} << 40;

UInt abs_u(Int n) { return n < 0 ? UInt(0) - UInt(n) : UInt(n); }

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  Int result = 1;
  Int b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

std::string to_string(Int n) {
  if (n == 0) return "0";
  UInt u = abs_u(n);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (n < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

int Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite valuation");
  return value_;
}

PrimePower PrimePower::make(std::int64_t p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m < 1) throw std::invalid_argument("exponent must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > kMaxPrimePower / p) throw std::invalid_argument("prime power too large");
    q *= p;
  }
  if (q >= kMaxPrimePower) throw std::invalid_argument("prime power too large");
  return PrimePower{p, m, q};
}

std::int64_t PrimePower::sqrt_q() const {
  if (!is_square()) throw std::logic_error("q is not a square");
  std::int64_t r = 1;
  for (int i = 0; i < m / 2; ++i) r *= p;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod(Int n, std::int64_t m) {
  Int r = n % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

Valuation padic_valuation(Int n, std::int64_t p) {
  if (n == 0) return Valuation::infinity();
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return Valuation(v);
}

Int isqrt(Int n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  if (n < 2) return n;
  // Newton iteration from an overestimate; monotone decreasing to floor(sqrt).
  UInt u = UInt(n);
  int bits = 0;
  for (UInt t = u; t > 0; t >>= 1) ++bits;
  UInt x = UInt(1) << ((bits + 1) / 2);
  while (true) {
    UInt y = (x + u / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return Int(x);
}

std::optional<Int> is_perfect_square(Int n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::vector<Int> prime_factors(Int n) {
  if (n == 0) throw std::invalid_argument("prime_factors(0)");
  UInt u = abs_u(n);
  std::vector<Int> factors;
  for (UInt d = 2; d * d <= u; d += (d == 2 ? 1 : 2)) {
    while (u % d == 0) {
      factors.push_back(Int(d));
      u /= d;
    }
  }
  if (u > 1) factors.push_back(Int(u));
  return factors;
}

bool is_squarefree(Int n) {
  if (n == 0) throw std::invalid_argument("is_squarefree(0)");
  const auto factors = prime_factors(n);
  return std::adjacent_find(factors.begin(), factors.end()) == factors.end();
}

bool is_square_mod_p(Int u, std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  const std::int64_t r = mod(u, p);
  if (r == 0) throw std::invalid_argument("u must be a unit modulo p");
  return powmod(r, (p - 1) / 2, p) == 1;
}

bool is_padic_square(Int n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("is_padic_square(0)");
  const int v = padic_valuation(n, p).value();
  if (v % 2 != 0) return false;
  Int unit = n;
  for (int i = 0; i < v; ++i) unit /= p;
  if (p == 2) return mod(unit, 8) == 1;
  return is_square_mod_p(unit, p);
}

std::optional<PrimePower> recognize_prime_power(Int q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (q >= kMaxPrimePower) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.front() != factors.back()) return std::nullopt;
  return PrimePower::make(static_cast<std::int64_t>(factors.front()),
                          static_cast<int>(factors.size()));
}

}  // namespace weilsurf::numth
