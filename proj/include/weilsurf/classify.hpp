#pragma once

// Decides whether a candidate is the Weil polynomial of an abelian surface,
// whether the isogeny class is principally polarizable, and whether it
// contains the Jacobian of a genus-2 curve, recording which table row
// blocked it.

#include <optional>
#include <string_view>

#include "weilsurf/weil.hpp"

namespace weilsurf {

enum class SurfaceKind { NotWeil, Ordinary, Mixed, Supersingular };

enum class NotWeilReason { Shape, MixedFail, SupersingularFail };

/// Blocking rows: R0..R9 for split classes, S0..S6 for simple ones.
enum class Rule { None, R0, R1, R2, R3, R4, R5, R6, R7, R8, R9, S0, S1, S2, S3, S4, S5, S6 };

std::string_view to_string(SurfaceKind kind);
std::string_view to_string(NotWeilReason reason);
std::string_view to_string(Rule rule);

struct SurfaceVerdict {
  SurfaceKind kind = SurfaceKind::NotWeil;
  std::optional<NotWeilReason> reason;  // set iff kind == NotWeil
  std::optional<bool> simple;           // set iff kind != NotWeil

  bool valid() const { return kind != SurfaceKind::NotWeil; }
};

struct JacobianDecision {
  bool exists = true;
  Rule rule = Rule::None;
  friend bool operator==(const JacobianDecision&, const JacobianDecision&) = default;
};

struct Classification {
  WeilCandidate candidate;
  bool shape_ok = false;
  SurfaceVerdict surface;
  std::optional<int> p_rank;
  std::optional<bool> simple;
  std::optional<SplitPair> split;
  std::optional<bool> principally_polarizable;
  std::optional<JacobianDecision> jacobian;
};

/// Split supersingular validity (valuations, square Delta and the square-q
/// congruence side conditions). Assumes the supersingular valuation case.
bool split_supersingular_valid(const WeilCandidate& c);

/// Membership in the list of simple supersingular (a, b) with its p/q side
/// conditions. Assumes the supersingular valuation case.
bool simple_supersingular_valid(const WeilCandidate& c);

SurfaceVerdict surface_type(const WeilCandidate& c);

/// Throws std::invalid_argument when c is not an abelian-surface Weil polynomial.
bool principally_polarizable(const WeilCandidate& c);

/// Throws std::invalid_argument when c is not an abelian-surface Weil polynomial.
JacobianDecision jacobian_exists(const WeilCandidate& c);

Classification classify(const WeilCandidate& c);

}  // namespace weilsurf
