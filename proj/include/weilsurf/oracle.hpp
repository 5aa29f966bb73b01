#pragma once

// Exhaustive genus-2 curve enumeration over small fields, used as ground
// truth for the classifier.
//
// Odd characteristic models are y^2 = c F(x) with F monic squarefree of
// degree 5 (c = 1) or 6 (c in {1, fixed nonsquare}). Characteristic 2 models
// are y^2 + h(x) y = f(x) with 0 != h of degree <= 3 and f of degree <= 6
// taken modulo f ~ f + u^2 + h u, filtered by smoothness on both charts and
// geometric irreducibility.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weilsurf/classify.hpp"
#include "weilsurf/gf.hpp"

namespace weilsurf::oracle {

struct CurveOdd {
  gf::FieldPtr field;
  bool nonsquare_twist = false;  // leading multiplier c is the fixed nonsquare
  gf::Polynomial F;

  /// The multiplier c as a field element.
  gf::Elem multiplier() const;
};

struct CurveChar2 {
  gf::FieldPtr field;
  gf::Polynomial h;
  gf::Polynomial f;
};

using Curve = std::variant<CurveOdd, CurveChar2>;

/// N_1..N_4: projective point counts over GF(q), GF(q^2), GF(q^3), GF(q^4).
struct PointCounts {
  std::array<std::int64_t, 4> N{};
  friend bool operator==(const PointCounts&, const PointCounts&) = default;
};

using ABPair = std::pair<std::int64_t, std::int64_t>;
/// (a, b) -> number of enumerated models with that Weil polynomial.
using RealizedCounts = std::map<ABPair, std::int64_t>;

const std::vector<std::int64_t>& required_sizes();
const std::vector<std::int64_t>& stretch_sizes();
bool is_supported(std::int64_t q, bool allow_stretch);

/// The fixed nonsquare of GF(q), q odd: the nonsquare with the smallest index.
gf::Elem fixed_nonsquare(const gf::Field& field);

/// Smoothness of y^2 + h y = f on the affine chart and at u = 0 of the chart
/// at infinity. Characteristic 2 only.
bool char2_smooth(const gf::Polynomial& h, const gf::Polynomial& f);

/// False when f = u^2 + h u for some u over GF(q^2) of degree <= 3.
bool char2_geometrically_irreducible(const gf::Polynomial& h, const gf::Polynomial& f);

/// Canonical representatives of GF(q)[x]_{<=6} modulo {u^2 + h u : deg u <= 3};
/// exactly 2 q^3 of them.
std::vector<gf::Polynomial> char2_coset_representatives(const gf::Polynomial& h);

/// Streams every model of the family. Throws std::invalid_argument for a
/// field size outside the supported set (stretch sizes included).
void enumerate_curves(const gf::FieldPtr& field, const std::function<void(const Curve&)>& visit);

/// Direct count over GF(q^k), 1 <= k <= 4.
std::int64_t count_points(const Curve& curve, int k);
PointCounts count_points(const Curve& curve);

/// a = N1 - q - 1 and b = (a^2 + N2 - q^2 - 1) / 2, empty if that is not an integer.
std::optional<ABPair> weil_from_counts(std::int64_t N1, std::int64_t N2, std::int64_t q);

/// N_k == q^k + 1 - p_k for k = 1..4 with p_k the power sums of the roots of
/// x^4 + a x^3 + b x^2 + a q x + q^2.
bool verify_counts(std::int64_t a, std::int64_t b, std::int64_t q, const PointCounts& counts);

struct RealizedMap {
  RealizedCounts counts;
  std::int64_t models = 0;
};

/// Batched enumeration and counting. Every model must pass verify_counts;
/// a failure throws std::runtime_error. The result does not depend on `jobs`.
RealizedMap compute_realized(const gf::FieldPtr& field, unsigned jobs = 1);

/// Same buckets via enumerate_curves + count_points, one curve at a time.
RealizedMap compute_realized_slow(const gf::FieldPtr& field);

struct OracleOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool allow_stretch = false;
};

struct Anomaly {
  WeilCandidate candidate;
  bool classifier_says_jacobian = false;
  std::string verdict;  // surface kind, or not_weil reason, plus the rule
  bool realized = false;
  std::int64_t models = 0;
};

struct OracleReport {
  gf::FieldPtr field;
  RealizedCounts realized;
  std::int64_t models = 0;
  bool from_cache = false;
  std::int64_t candidates = 0;
  std::int64_t classifier_positive = 0;
  std::vector<Anomaly> anomalies;
};

/// Realized map, reusing a cache file under options.cache_dir when its
/// modulus and version match, and writing one otherwise.
OracleReport realized_map(const gf::FieldPtr& field, const OracleOptions& options);

/// Realized map plus a classifier comparison in both directions.
OracleReport crosscheck(const gf::FieldPtr& field, const OracleOptions& options);

}  // namespace weilsurf::oracle
