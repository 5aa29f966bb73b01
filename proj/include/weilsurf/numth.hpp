#pragma once

// Exact integer number theory used by the Weil-polynomial predicates.
//
// Everything here works on 128-bit signed integers so that the quartic
// inequalities in a and sqrt(q) never overflow for any input the library
// accepts (|a|, |b| < 2^63, q < 2^40).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilsurf::numth {

using Int = __int128;

std::string to_string(Int n);

/// p-adic valuation with a distinguished infinite value (the valuation of 0).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(int v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; must not be called on infinity.
  int value() const;

  friend constexpr bool operator==(const Valuation& x, const Valuation& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& x,
                                                    const Valuation& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ <=> y.infinite_;
    return x.value_ <=> y.value_;
  }
  friend constexpr bool operator==(const Valuation& x, int y) {
    return !x.infinite_ && x.value_ == y;
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& x, int y) {
    if (x.infinite_) return std::strong_ordering::greater;
    return x.value_ <=> y;
  }
  friend Valuation operator+(const Valuation& x, const Valuation& y) {
    if (x.infinite_ || y.infinite_) return infinity();
    return Valuation(x.value_ + y.value_);
  }
  /// 2·v, used for the "v >= m/2" tests without fractions.
  Valuation doubled() const { return infinite_ ? *this : Valuation(2 * value_); }

 private:
  int value_ = 0;
  bool infinite_ = false;
};

/// A prime power q = p^m with p verified prime.
struct PrimePower {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t q = 0;

  /// Throws std::invalid_argument if p is not prime, m < 1, or p^m >= 2^40.
  static PrimePower make(std::int64_t p, int m);

  bool is_square() const { return m % 2 == 0; }
  /// Positive integer square root of q; only meaningful when is_square().
  std::int64_t sqrt_q() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::int64_t n);

Valuation padic_valuation(Int n, std::int64_t p);

/// Nonnegative root r with r*r == n, or empty (always empty for n < 0).
std::optional<Int> is_perfect_square(Int n);

/// Floor of the square root of n >= 0.
Int isqrt(Int n);

/// Throws std::invalid_argument for n == 0.
bool is_squarefree(Int n);

/// Prime factors of |n| with multiplicity, ascending. Throws for n == 0.
std::vector<Int> prime_factors(Int n);

/// Quadratic residuosity of a unit modulo an odd prime (Euler's criterion).
/// Throws std::invalid_argument if p is not an odd prime or p | u.
bool is_square_mod_p(Int u, std::int64_t p);

/// Whether n is a square in Z_p. Throws std::invalid_argument for n == 0.
bool is_padic_square(Int n, std::int64_t p);

/// Decomposes q as p^m if possible. Throws std::invalid_argument for q < 2.
std::optional<PrimePower> recognize_prime_power(Int q);

/// Nonnegative residue of n modulo m > 0.
std::int64_t mod(Int n, std::int64_t m);

}  // namespace weilsurf::numth
