#include "weilsurf/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace weilsurf {

namespace {

using numth::padic_valuation;

bool divides(Int d, Int n) { return n % d == 0; }

// True when |a| == sqrt(k q) for an integer square root.
bool abs_equals_sqrt(std::int64_t a, Int kq) {
  const auto r = numth::is_perfect_square(kq);
  return r && Int(std::llabs(a)) == *r;
}

// The three conditions of the principal-polarizability obstruction, read as
// a statement about (a, b, q).
bool non_polarizable_conditions(const WeilCandidate& c) {
  const Int a = c.a;
  const Int b = c.b;
  if (a * a - b != c.q()) return false;
  if (b >= 0) return false;
  const auto primes = numth::prime_factors(b);
  return std::all_of(primes.begin(), primes.end(), [](Int ell) { return ell % 3 == 1; });
}

Rule split_rule(const WeilCandidate& c, const SplitPair& st, int prk) {
  const Int s = st.s;
  const Int t = st.t;
  const Int q = c.q();
  const std::int64_t p = c.p();
  const bool q_square = c.field.is_square();
  const Int diff = s > t ? s - t : t - s;

  if (diff == 1) return Rule::R0;
  if (prk == 2) {
    const Int d = t * t - 4 * q;
    if (s == t && (d == -3 || d == -4 || d == -7)) return Rule::R1;
    if (q == 2 && s * s == 1 && t * t == 1 && s != t) return Rule::R2;
  }
  if (prk == 1 && q_square) {
    if (s * s == 4 * q && s != t && numth::is_squarefree(diff)) return Rule::R3;
  }
  if (prk == 0) {
    if (p > 3 && s * s != t * t) return Rule::R4;
    if (p == 3 && !q_square && s * s == 3 * q && t * t == 3 * q) return Rule::R5;
    if (p == 3 && q_square && !divides(3 * Int(c.field.sqrt_q()), diff)) return Rule::R6;
    if (p == 2 && !divides(2 * q, s * s - t * t)) return Rule::R7;
    if ((q == 2 || q == 3) && s == t) return Rule::R8;
    if ((q == 4 || q == 9) && s * s == 4 * q && t * t == 4 * q) return Rule::R9;
  }
  return Rule::None;
}

Rule simple_rule(const WeilCandidate& c, int prk) {
  const Int a = c.a;
  const Int b = c.b;
  const Int q = c.q();
  const std::int64_t p = c.p();
  const bool q_square = c.field.is_square();

  // S0 restates the obstruction to principal polarizability row-wise.
  if (a * a - b == q && b < 0) {
    bool all_one_mod_three = true;
    Int rest = -b;
    for (Int d = 2; d * d <= rest; ++d) {
      if (rest % d != 0) continue;
      if (d % 3 != 1) all_one_mod_three = false;
      while (rest % d == 0) rest /= d;
    }
    if (rest > 1 && rest % 3 != 1) all_one_mod_three = false;
    if (all_one_mod_three) return Rule::S0;
  }
  if (prk == 2) {
    if (a == 0 && b == 1 - 2 * q) return Rule::S1;
    if (p > 2 && a == 0 && b == 2 - 2 * q) return Rule::S2;
  }
  if (prk == 0 && a == 0 && b == -q) {
    if (p % 12 == 11 && q_square) return Rule::S3;
    if (p == 3 && q_square) return Rule::S4;
    if (p == 2 && !q_square) return Rule::S5;
  }
  if (prk == 0 && (q == 2 || q == 3) && a == 0 && b == -2 * q) return Rule::S6;
  return Rule::None;
}

void require_valid(const WeilCandidate& c) {
  if (!surface_type(c).valid())
    throw std::invalid_argument("not the Weil polynomial of an abelian surface");
}

}  // namespace

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::NotWeil: return "not_weil";
    case SurfaceKind::Ordinary: return "ordinary";
    case SurfaceKind::Mixed: return "mixed";
    case SurfaceKind::Supersingular: return "supersingular";
  }
  return "?";
}

std::string_view to_string(NotWeilReason reason) {
  switch (reason) {
    case NotWeilReason::Shape: return "SHAPE";
    case NotWeilReason::MixedFail: return "MIXED_FAIL";
    case NotWeilReason::SupersingularFail: return "SS_FAIL";
  }
  return "?";
}

std::string_view to_string(Rule rule) {
  static constexpr std::string_view names[] = {"NONE", "R0", "R1", "R2", "R3", "R4", "R5", "R6", "R7",
                                               "R8",   "R9", "S0", "S1", "S2", "S3", "S4", "S5", "S6"};
  return names[static_cast<int>(rule)];
}

bool split_supersingular_valid(const WeilCandidate& c) {
  const auto va = padic_valuation(c.a, c.p());
  const auto vb = padic_valuation(c.b, c.p());
  if (va.doubled() < c.m()) return false;
  if (vb < c.m()) return false;
  if (!numth::is_perfect_square(deltas(c).Delta)) return false;
  if (c.field.is_square()) {
    const std::int64_t a1 = c.a / c.field.sqrt_q();
    const std::int64_t b1 = c.b / c.q();
    if (b1 == 2 && c.p() % 4 == 1) return false;
    if ((a1 - b1) % 2 != 0 && c.p() % 3 == 1) return false;
  }
  return true;
}

bool simple_supersingular_valid(const WeilCandidate& c) {
  const Int q = c.q();
  const std::int64_t p = c.p();
  const std::int64_t a = c.a;
  const Int b = c.b;
  const bool sq = c.field.is_square();

  if (a == 0) {
    if (b == 0) return sq ? p % 8 != 1 : p != 2;
    if (b == -q) return sq ? p % 12 != 1 : p != 3;
    if (b == q) return !sq;
    if (b == -2 * q) return !sq;
    if (b == 2 * q) return sq && p % 4 == 1;
    return false;
  }
  if (b == q) {
    if (sq && abs_equals_sqrt(a, q)) return p % 5 != 1;
    if (!sq && p == 2 && abs_equals_sqrt(a, 2 * q)) return true;
    return false;
  }
  if (b == 3 * q) {
    if (sq && abs_equals_sqrt(a, 4 * q)) return p % 3 == 1;
    if (!sq && p == 5 && abs_equals_sqrt(a, 5 * q)) return true;
    return false;
  }
  return false;
}

SurfaceVerdict surface_type(const WeilCandidate& c) {
  if (!shape_ok(c)) return {SurfaceKind::NotWeil, NotWeilReason::Shape, std::nullopt};
  const auto va = padic_valuation(c.a, c.p());
  const auto vb = padic_valuation(c.b, c.p());
  const DeltaPair d = deltas(c);
  const bool split = numth::is_perfect_square(d.Delta).has_value();

  if (vb == 0) return {SurfaceKind::Ordinary, std::nullopt, !split};

  if (va == 0) {
    const bool valuation_ok = vb.doubled() >= c.m();
    const bool delta_ok = d.delta == 0 || !numth::is_padic_square(d.delta, c.p());
    if (valuation_ok && delta_ok) return {SurfaceKind::Mixed, std::nullopt, !split};
    return {SurfaceKind::NotWeil, NotWeilReason::MixedFail, std::nullopt};
  }

  const bool split_ok = split_supersingular_valid(c);
  const bool simple_ok = simple_supersingular_valid(c);
  if (split_ok && simple_ok)
    throw std::logic_error("split and simple supersingular conditions both hold for q=" +
                           std::to_string(c.q()) + " a=" + std::to_string(c.a) +
                           " b=" + std::to_string(c.b));
  if (split_ok) return {SurfaceKind::Supersingular, std::nullopt, false};
  if (simple_ok) return {SurfaceKind::Supersingular, std::nullopt, true};
  return {SurfaceKind::NotWeil, NotWeilReason::SupersingularFail, std::nullopt};
}

bool principally_polarizable(const WeilCandidate& c) {
  require_valid(c);
  return !non_polarizable_conditions(c);
}

JacobianDecision jacobian_exists(const WeilCandidate& c) {
  const SurfaceVerdict verdict = surface_type(c);
  if (!verdict.valid()) throw std::invalid_argument("not the Weil polynomial of an abelian surface");
  const int prk = newton_prank(c);
  Rule rule = Rule::None;
  if (*verdict.simple) {
    rule = simple_rule(c, prk);
  } else {
    const auto st = split_factors(c);
    if (!st) throw std::logic_error("split class without integer traces");
    rule = split_rule(c, *st, prk);
  }
  return {rule == Rule::None, rule};
}

Classification classify(const WeilCandidate& c) {
  Classification out;
  out.candidate = c;
  out.shape_ok = shape_ok(c);
  out.surface = surface_type(c);
  if (!out.surface.valid()) return out;
  out.p_rank = newton_prank(c);
  out.simple = out.surface.simple;
  if (!*out.simple) out.split = split_factors(c);
  out.principally_polarizable = principally_polarizable(c);
  out.jacobian = jacobian_exists(c);
  return out;
}

}  // namespace weilsurf
