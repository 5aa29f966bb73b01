#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "weilsurf/gf.hpp"

using namespace weilsurf::gf;

namespace {

// Schoolbook product of coefficient vectors reduced by the field modulus,
// using only the base field's operations. Independent of the log tables.
Elem reference_mul(const Field& f, Elem x, Elem y) {
  const Field& b = *f.base();
  const auto xs = f.coefficients(x);
  const auto ys = f.coefficients(y);
  const int d = f.degree();
  std::vector<Elem> prod(2 * d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = b.add(prod[i + j], b.mul(xs[i], ys[j]));
  for (int i = 2 * d - 1; i >= d; --i)
    for (int j = 0; j < d; ++j)
      prod[i - d + j] = b.sub(prod[i - d + j], b.mul(prod[i], f.modulus()[j]));
  prod.resize(d);
  return f.from_coefficients(prod);
}

std::vector<FieldPtr> sample_fields() {
  std::vector<FieldPtr> fields;
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}, {13, 1}})
    fields.push_back(Field::make(p, m));
  fields.push_back(Field::extend(Field::make(3, 2), 3));
  fields.push_back(Field::extend(Field::make(2, 2), 3));
  fields.push_back(Field::extend(Field::make(5, 1), 8));  // 390625 elements: no tables
  return fields;
}

}  // namespace

TEST_CASE("make_field picks the lowest-lexicographic modulus") {
  CHECK(Field::make(2, 1)->size() == 2);
  const auto gf9 = Field::make(3, 2);
  CHECK(gf9->modulus() == std::vector<Elem>{1, 0, 1});  // x^2 + 1
  const auto gf4 = Field::make(2, 2);
  CHECK(gf4->modulus() == std::vector<Elem>{1, 1, 1});  // x^2 + x + 1

  // Root-search oracle: first monic quadratic over GF(3) with no root,
  // scanning constant term fastest.
  std::vector<int> expected;
  for (int c1 = 0; c1 < 3 && expected.empty(); ++c1)
    for (int c0 = 0; c0 < 3 && expected.empty(); ++c0) {
      bool root = false;
      for (int x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
      if (!root) expected = {c0, c1, 1};
    }
  CHECK(expected == std::vector<int>{1, 0, 1});

  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 24), std::invalid_argument);
  CHECK_THROWS_AS(Field::extend(Field::make(13, 1), 7), std::invalid_argument);
}

TEST_CASE("basic arithmetic") {
  const auto gf7 = Field::make(7, 1);
  CHECK(gf7->add(3, 5) == 1);
  const auto gf9 = Field::make(3, 2);
  const Elem t = 3;  // the class of x
  CHECK(gf9->mul(t, t) == gf9->neg(1));
  CHECK(gf9->mul(t, t) == 2);
  const auto gf4 = Field::make(2, 2);
  for (Elem x = 1; x < 4; ++x) CHECK(gf4->pow(x, 3) == 1);
  CHECK_THROWS_AS(gf7->inv(0), std::domain_error);

  GFElement a(gf7, 3), b(gf7, 5);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK_THROWS_AS(a + GFElement(gf9, 1), std::invalid_argument);
}

TEST_CASE("table multiplication matches schoolbook multiplication") {
  std::mt19937 rng(11);
  for (const auto& f : sample_fields()) {
    if (!f->base()) continue;
    std::uniform_int_distribution<Elem> dist(0, f->size() - 1);
    for (int i = 0; i < 300; ++i) {
      const Elem x = dist(rng), y = dist(rng);
      REQUIRE(f->mul(x, y) == reference_mul(*f, x, y));
    }
  }
}

TEST_CASE("field properties") {
  std::mt19937 rng(5);
  for (const auto& f : sample_fields()) {
    INFO(f->describe());
    std::uniform_int_distribution<Elem> dist(1, f->size() - 1);
    for (int i = 0; i < 200; ++i) {
      const Elem x = dist(rng), y = dist(rng);
      REQUIRE(f->pow(x, f->size() - 1) == 1);
      REQUIRE(f->mul(x, f->inv(x)) == 1);
      REQUIRE(f->frobenius(f->add(x, y)) == f->add(f->frobenius(x), f->frobenius(y)));
      REQUIRE(f->frobenius(f->mul(x, y)) == f->mul(f->frobenius(x), f->frobenius(y)));
      REQUIRE(f->add(f->sub(x, y), y) == x);
    }
    if (f->characteristic() != 2 && f->size() <= 100'000) {
      std::uint32_t squares = 0;
      for (Elem x = 1; x < f->size(); ++x) squares += f->is_square(x) ? 1 : 0;
      CHECK(squares == (f->size() - 1) / 2);
    }
  }
}

TEST_CASE("extension embeds the base and Frobenius^m fixes exactly it") {
  const auto gf5 = Field::make(5, 1);
  const auto gf25 = Field::extend(gf5, 2);
  CHECK(gf25->size() == 25);
  const Elem three = gf25->embed(3);
  CHECK(gf25->pow(gf25->pow(three, 5), 5) == 3);

  const auto gf4 = Field::make(2, 2);
  const auto gf64 = Field::extend(gf4, 3);
  CHECK(gf64->size() == 64);
  for (Elem c = 0; c < 4; ++c) CHECK(gf64->pow(gf64->embed(c), 4) == c);

  for (const auto& [base, k] : {std::pair{gf4, 3}, {Field::make(3, 2), 2}, {gf5, 3}}) {
    const auto ext = Field::extend(base, k);
    std::set<Elem> fixed;
    for (Elem x = 0; x < ext->size(); ++x)
      if (ext->pow(x, base->size()) == x) fixed.insert(x);
    CHECK(fixed.size() == base->size());
    for (Elem x : fixed) CHECK(ext->in_base(x));
    // Embedded arithmetic agrees with the base field.
    for (Elem x = 0; x < base->size(); ++x)
      for (Elem y = 0; y < base->size(); ++y) {
        CHECK(ext->mul(x, y) == base->mul(x, y));
        CHECK(ext->add(x, y) == base->add(x, y));
      }
  }
}

TEST_CASE("is_square") {
  const auto gf5 = Field::make(5, 1);
  CHECK(gf5->is_square(4));
  CHECK_FALSE(gf5->is_square(2));
  CHECK(gf5->is_square(0));
  const auto gf3 = Field::make(3, 1);
  const auto gf9 = Field::extend(gf3, 2);
  for (Elem x = 1; x < 3; ++x)
    if (!gf3->is_square(x)) CHECK(gf9->is_square(gf9->embed(x)));
  CHECK_THROWS_AS(Field::make(2, 3)->is_square(1), std::logic_error);
}

TEST_CASE("absolute_trace") {
  const auto gf2 = Field::make(2, 1);
  CHECK(gf2->absolute_trace(0) == 0);
  CHECK(gf2->absolute_trace(1) == 1);
  const auto gf4 = Field::make(2, 2);
  const Elem omega = 2;  // x, with x^2 + x + 1 = 0
  CHECK(gf4->add(gf4->mul(omega, omega), gf4->add(omega, 1)) == 0);
  CHECK(gf4->absolute_trace(omega) == 1);
  const auto gf8 = Field::make(2, 3);
  int zeros = 0;
  for (Elem x = 0; x < 8; ++x) zeros += gf8->absolute_trace(x) == 0;
  CHECK(zeros == 4);
  // Trace through a tower equals the trace computed over GF(p) directly.
  const auto gf16 = Field::extend(gf4, 2);
  const auto gf16_direct = Field::make(2, 4);
  int tower_zeros = 0;
  for (Elem x = 0; x < 16; ++x) tower_zeros += gf16->absolute_trace(x) == 0;
  CHECK(tower_zeros == 8);
  CHECK(gf16_direct->absolute_trace(1) == 0);
}

TEST_CASE("polynomial squarefree tests") {
  const auto gf5 = Field::make(5, 1);
  const Polynomial x5p1(gf5, {1, 0, 0, 0, 0, 1});
  CHECK(x5p1.derivative().is_zero());
  CHECK_FALSE(is_squarefree(x5p1));
  // (x + 1)^5 expands to x^5 + 1 modulo 5.
  Polynomial power(gf5, {1});
  for (int i = 0; i < 5; ++i) power = power * Polynomial(gf5, {1, 1});
  CHECK(power == x5p1);

  const Polynomial artin(gf5, {1, 4, 0, 0, 0, 1});  // x^5 - x + 1
  CHECK(artin.derivative() == Polynomial(gf5, {4}));
  CHECK(is_squarefree(artin));

  const auto gf3 = Field::make(3, 1);
  CHECK_FALSE(is_squarefree(Polynomial(gf3, {0, 0, 1, 1})));  // x^2 (x + 1)
  CHECK(is_squarefree(Polynomial(gf3, {2})));
  CHECK_THROWS_AS(is_squarefree(Polynomial(gf3)), std::invalid_argument);
  CHECK_THROWS_AS(gcd(Polynomial(gf3), Polynomial(gf3)), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  const auto gf7 = Field::make(7, 1);
  const Polynomial a(gf7, {1, 2, 3});
  const Polynomial b(gf7, {5, 1});
  const auto [quot, rem] = (a * b + Polynomial(gf7, {4})).divmod(b);
  CHECK(quot == a);
  CHECK(rem == Polynomial(gf7, {4}));
  CHECK(a.eval(2) == (1 + 2 * 2 + 3 * 4) % 7);
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(is_irreducible(Polynomial(gf7, {1, 0, 1})));  // -1 is not a square mod 7
  CHECK_FALSE(is_irreducible(Polynomial(gf7, {6, 0, 1})));
  const auto gf49 = Field::extend(gf7, 2);
  const Polynomial x2p1(gf7, {1, 0, 1});
  int roots = 0;
  for (Elem x = 0; x < gf49->size(); ++x) roots += x2p1.eval_in(*gf49, x) == 0;
  CHECK(roots == 2);
}
