#pragma once

// Candidate Weil polynomials x^4 + a x^3 + b x^2 + a q x + q^2 and the
// integer quantities the classification reads off them.

#include <cstdint>
#include <optional>
#include <vector>

#include "weilsurf/numth.hpp"

namespace weilsurf {

using numth::Int;
using numth::PrimePower;

struct WeilCandidate {
  PrimePower field;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t q() const { return field.q; }
  std::int64_t p() const { return field.p; }
  int m() const { return field.m; }

  /// Coefficients of the quartic, constant term first.
  std::vector<Int> coefficients() const;

  friend bool operator==(const WeilCandidate&, const WeilCandidate&) = default;
};

/// Traces of the two elliptic factors (x^2 - s x + q)(x^2 - t x + q).
/// Canonical order: |s| >= |t|, and s > 0 when s == -t != 0.
struct SplitPair {
  std::int64_t s = 0;
  std::int64_t t = 0;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

struct DeltaPair {
  Int Delta = 0;  // a^2 - 4(b - 2q)
  Int delta = 0;  // (b + 2q)^2 - 4 q a^2
};

/// Exact-integer form of |a| <= 4 sqrt(q) and 2|a| sqrt(q) - 2q <= b <= a^2/4 + 2q.
bool shape_ok(const WeilCandidate& c);

/// Meaningful for shape-valid candidates (all quantities are then small).
DeltaPair deltas(const WeilCandidate& c);

/// p-rank read from the valuation case split. Requires shape_ok.
int newton_prank(const WeilCandidate& c);

/// Integer roots of x^2 + a x + (b - 2q) when Delta is a perfect square.
/// Requires shape_ok.
std::optional<SplitPair> split_factors(const WeilCandidate& c);

/// Upper bound on q accepted by enumerate_candidates.
inline constexpr std::int64_t kMaxEnumerationQ = 10'000;

/// All shape-valid (a, b) for this q in lexicographic order.
/// Throws std::invalid_argument for q above kMaxEnumerationQ.
std::vector<WeilCandidate> enumerate_candidates(const PrimePower& field);

}  // namespace weilsurf
