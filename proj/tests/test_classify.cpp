#include <doctest.h>

#include <stdexcept>

#include "weilsurf/classify.hpp"

using namespace weilsurf;

namespace {

PrimePower pp(std::int64_t q) { return *numth::recognize_prime_power(q); }

std::vector<PrimePower> prime_powers_up_to(std::int64_t limit) {
  std::vector<PrimePower> out;
  for (std::int64_t q = 2; q <= limit; ++q)
    if (auto f = numth::recognize_prime_power(q)) out.push_back(*f);
  return out;
}

// Non-polarizability restated from scratch, for the S0 agreement check.
bool obstruction_holds(const WeilCandidate& c) {
  if (Int(c.a) * c.a - c.b != c.q() || c.b >= 0) return false;
  std::int64_t n = -c.b;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (d % 3 != 1) return false;
    while (n % d == 0) n /= d;
  }
  return true;
}

}  // namespace

TEST_CASE("surface_type examples") {
  auto v = surface_type({pp(7), 0, -7});
  CHECK(v.kind == SurfaceKind::Supersingular);
  CHECK(v.simple == true);

  v = surface_type({pp(7), 0, 14});
  CHECK(v.kind == SurfaceKind::Supersingular);
  CHECK(v.simple == false);
  CHECK(split_factors({pp(7), 0, 14}) == SplitPair{0, 0});

  v = surface_type({pp(2), 0, 3});
  CHECK(v.kind == SurfaceKind::Ordinary);
  CHECK(v.simple == false);

  v = surface_type({pp(5), 0, -9});
  CHECK(v.kind == SurfaceKind::Ordinary);
  CHECK(v.simple == true);

  v = surface_type({pp(4), 17, 0});
  CHECK(v.kind == SurfaceKind::NotWeil);
  CHECK(v.reason == NotWeilReason::Shape);
}

TEST_CASE("surface_type failure reasons") {
  // delta = 15^2 - 20 = 205 = 5 * 41
  CHECK(surface_type({pp(5), 1, 5}).kind == SurfaceKind::Mixed);
  // delta = 525 = 25 * 21 and 21 is a square mod 5
  auto v = surface_type({pp(25), 1, -25});
  CHECK(v.kind == SurfaceKind::NotWeil);
  CHECK(v.reason == NotWeilReason::MixedFail);
  // 2 v_2(2) < 3
  v = surface_type({pp(8), 1, 2});
  CHECK(v.kind == SurfaceKind::NotWeil);
  CHECK(v.reason == NotWeilReason::MixedFail);
  // x^4 + 3x^3 + 6x^2 + 9x + 9 = (x^2 + 3x + 3)(x^2 + 3): split supersingular
  v = surface_type({pp(3), 3, 6});
  CHECK(v.kind == SurfaceKind::Supersingular);
  CHECK(v.simple == false);
  // v_3(3) < 2
  v = surface_type({pp(9), -3, 3});
  CHECK(v.kind == SurfaceKind::NotWeil);
  CHECK(v.reason == NotWeilReason::SupersingularFail);
}

TEST_CASE("principally_polarizable") {
  CHECK_FALSE(principally_polarizable({pp(7), 0, -7}));
  CHECK(principally_polarizable({pp(7), 2, -3}));
  CHECK(principally_polarizable({pp(5), 0, -9}));
  CHECK_THROWS_AS(principally_polarizable({pp(4), 17, 0}), std::invalid_argument);
}

TEST_CASE("jacobian_exists examples") {
  CHECK(jacobian_exists({pp(2), 0, 3}) == JacobianDecision{false, Rule::R2});
  CHECK(jacobian_exists({pp(7), 0, -7}) == JacobianDecision{false, Rule::S0});
  CHECK(jacobian_exists({pp(3), 0, -5}) == JacobianDecision{false, Rule::S1});
  CHECK(jacobian_exists({pp(9), 0, -9}) == JacobianDecision{false, Rule::S4});
  CHECK(jacobian_exists({pp(7), 0, 14}) == JacobianDecision{true, Rule::None});
  CHECK(jacobian_exists({pp(5), 1, 2}) == JacobianDecision{true, Rule::None});
  CHECK_THROWS_AS(jacobian_exists({pp(4), 17, 0}), std::invalid_argument);
}

TEST_CASE("individual table rows fire") {
  // Split classes are given by their traces: a = -(s + t), b = s t + 2q.
  CHECK(jacobian_exists({pp(5), -1, 10}).rule == Rule::R0);    // s, t = 1, 0
  CHECK(jacobian_exists({pp(2), -2, 5}).rule == Rule::R1);     // s = t = 1
  CHECK(jacobian_exists({pp(4), -5, 12}).rule == Rule::R3);    // s, t = 4, 1
  CHECK(jacobian_exists({pp(25), -15, 100}).rule == Rule::R4); // s, t = 10, 5
  CHECK(jacobian_exists({pp(3), 0, -3}).rule == Rule::R5);     // s, t = 3, -3
  CHECK(jacobian_exists({pp(9), -6, 18}).rule == Rule::R6);    // s, t = 6, 0
  CHECK(jacobian_exists({pp(4), -2, 8}).rule == Rule::R7);     // s, t = 2, 0
  CHECK(jacobian_exists({pp(2), 0, 4}).rule == Rule::R8);      // s = t = 0
  CHECK(jacobian_exists({pp(4), 0, -8}).rule == Rule::R9);     // s, t = 4, -4
  CHECK(jacobian_exists({pp(8), -4, 16}) == JacobianDecision{true, Rule::None});

  CHECK(jacobian_exists({pp(5), 0, -8}).rule == Rule::S2);
  CHECK(jacobian_exists({pp(121), 0, -121}).rule == Rule::S3);
  CHECK(jacobian_exists({pp(8), 0, -8}).rule == Rule::S5);
  CHECK(jacobian_exists({pp(3), 0, -6}).rule == Rule::S6);
}

TEST_CASE("classify assembles the record") {
  auto c = classify({pp(2), 0, 3});
  CHECK(c.shape_ok);
  CHECK(c.surface.kind == SurfaceKind::Ordinary);
  CHECK(c.p_rank == 2);
  CHECK(c.split == SplitPair{1, -1});
  CHECK(c.principally_polarizable == true);
  CHECK(c.jacobian == JacobianDecision{false, Rule::R2});

  c = classify({pp(4), 17, 0});
  CHECK_FALSE(c.shape_ok);
  CHECK(c.surface.reason == NotWeilReason::Shape);
  CHECK_FALSE(c.p_rank);
  CHECK_FALSE(c.jacobian);
  CHECK_FALSE(c.principally_polarizable);

  c = classify({pp(7), 0, -7});
  CHECK(c.surface.kind == SurfaceKind::Supersingular);
  CHECK(c.simple == true);
  CHECK(c.p_rank == 0);
  CHECK(c.principally_polarizable == false);
  CHECK(c.jacobian == JacobianDecision{false, Rule::S0});
}

TEST_CASE("classification invariants for every prime power q <= 169") {
  for (const auto& f : prime_powers_up_to(169)) {
    for (const auto& cand : enumerate_candidates(f)) {
      INFO("q=" << f.q << " a=" << cand.a << " b=" << cand.b);
      Classification c;
      REQUIRE_NOTHROW(c = classify(cand));  // split/simple supersingular exclusivity
      const Classification mirror = classify({f, -cand.a, cand.b});
      REQUIRE(c.surface.kind == mirror.surface.kind);
      REQUIRE(c.surface.reason == mirror.surface.reason);
      REQUIRE(c.p_rank == mirror.p_rank);
      REQUIRE(c.simple == mirror.simple);
      REQUIRE(c.principally_polarizable == mirror.principally_polarizable);
      REQUIRE(c.jacobian == mirror.jacobian);
      if (c.surface.kind == SurfaceKind::Supersingular)
        REQUIRE_FALSE((split_supersingular_valid(cand) && simple_supersingular_valid(cand)));
      if (!c.surface.valid()) continue;
      REQUIRE(c.split.has_value() == !*c.simple);
      if (c.jacobian->exists) REQUIRE(*c.principally_polarizable);
      if (c.split) REQUIRE(*c.principally_polarizable);
      REQUIRE((c.jacobian->rule == Rule::S0) == !*c.principally_polarizable);
      REQUIRE(obstruction_holds(cand) == !*c.principally_polarizable);
    }
  }
}
