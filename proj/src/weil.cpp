#include "weilsurf/weil.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace weilsurf {

std::vector<Int> WeilCandidate::coefficients() const {
  const Int q = field.q;
  return {q * q, Int(a) * q, Int(b), Int(a), 1};
}

bool shape_ok(const WeilCandidate& c) {
  const Int q = c.q();
  const Int a = c.a;
  const Int b = c.b;
  // Order matters: each test bounds the magnitudes used by the next one.
  if (a * a > 16 * q) return false;
  if (b + 2 * q < 0) return false;
  if (4 * b > a * a + 8 * q) return false;
  return (b + 2 * q) * (b + 2 * q) >= 4 * a * a * q;
}

DeltaPair deltas(const WeilCandidate& c) {
  const Int q = c.q();
  const Int a = c.a;
  const Int b = c.b;
  return {a * a - 4 * (b - 2 * q), (b + 2 * q) * (b + 2 * q) - 4 * q * a * a};
}

int newton_prank(const WeilCandidate& c) {
  const auto va = numth::padic_valuation(c.a, c.p());
  const auto vb = numth::padic_valuation(c.b, c.p());
  if (vb == 0) return 2;
  if (va == 0) return 1;
  return 0;
}

std::optional<SplitPair> split_factors(const WeilCandidate& c) {
  const Int Delta = deltas(c).Delta;
  const auto root = numth::is_perfect_square(Delta);
  if (!root) return std::nullopt;
  // Delta = a^2 - 4(b - 2q) has the parity of a, so (-a ± root)/2 is integral.
  assert(((Int(c.a) - *root) % 2) == 0);
  auto s = static_cast<std::int64_t>((-Int(c.a) + *root) / 2);
  auto t = static_cast<std::int64_t>((-Int(c.a) - *root) / 2);
  if (std::llabs(s) < std::llabs(t) || (std::llabs(s) == std::llabs(t) && s < t)) std::swap(s, t);
  return SplitPair{s, t};
}

std::vector<WeilCandidate> enumerate_candidates(const PrimePower& field) {
  if (field.q > kMaxEnumerationQ) throw std::invalid_argument("q exceeds the enumeration cap");
  const std::int64_t q = field.q;
  std::vector<WeilCandidate> out;
  const auto a_max = static_cast<std::int64_t>(numth::isqrt(16 * Int(q)));
  for (std::int64_t a = -a_max; a <= a_max; ++a) {
    // b <= a^2/4 + 2q
    const std::int64_t b_hi = (a * a + 8 * q) / 4;
    // b >= 2|a| sqrt(q) - 2q, i.e. the least b with b + 2q >= 0 and (b + 2q)^2 >= 4 a^2 q
    const auto root = numth::isqrt(4 * Int(a) * a * q);
    std::int64_t b_lo = static_cast<std::int64_t>(root) - 2 * q;
    if (root * root < 4 * Int(a) * a * q) ++b_lo;
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      WeilCandidate c{field, a, b};
      assert(shape_ok(c));
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace weilsurf
