#pragma once

// Small finite fields GF(p^m) and extension towers GF(q^k) over them.
//
// An element is stored as an index: the coefficient vector over the base
// field read as base-|base| digits, lowest coefficient first. Because every
// layer is a vector space over the layer below, the index is also the
// base-p digit string of the element over the prime field, so addition is
// digitwise mod p at every level and a base-field constant embeds with the
// same index.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace weilsurf::gf {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::int64_t kMaxSize = 10'000'000;
  static constexpr std::int64_t kTableLimit = std::int64_t{1} << 16;

  /// GF(p^m) over GF(p) with the lowest-lexicographic monic irreducible
  /// modulus. Throws std::invalid_argument on a non-prime p or a size above
  /// kMaxSize.
  static FieldPtr make(std::int64_t p, int m);

  /// Degree-k extension of `base`; k == 1 returns `base` itself.
  static FieldPtr extend(const FieldPtr& base, int k);

  std::int64_t characteristic() const { return p_; }
  /// Degree over the immediate base field (1 for a prime field).
  int degree() const { return degree_; }
  /// Degree over the prime field.
  int absolute_degree() const { return absolute_degree_; }
  std::uint32_t size() const { return size_; }
  /// Immediate base field; null for a prime field.
  const FieldPtr& base() const { return base_; }
  std::uint32_t base_size() const { return base_ ? base_->size() : 1; }
  /// Monic modulus over the base, lowest coefficient first (x for GF(p)).
  const std::vector<Elem>& modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The image of n under Z -> GF(p) -> this field.
  Elem from_int(std::int64_t n) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::uint64_t e) const;
  /// x -> x^p.
  Elem frobenius(Elem x) const { return pow(x, static_cast<std::uint64_t>(p_)); }

  /// Odd characteristic only (throws std::logic_error otherwise).
  bool is_square(Elem x) const;
  /// Trace down to GF(p), returned as an integer in [0, p).
  Elem absolute_trace(Elem x) const;

  /// Embeds an element of the immediate base field.
  Elem embed(Elem base_elem) const { return base_elem; }
  /// True when x lies in the immediate base field.
  bool in_base(Elem x) const { return x < base_size(); }

  std::vector<Elem> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const Elem> coeffs) const;

  /// Discrete log base primitive_element(); only when has_tables() and x != 0.
  std::uint32_t log(Elem x) const { return log_[x]; }
  /// primitive_element()^e for 0 <= e < 2(size - 1); only when has_tables().
  Elem exp(std::uint32_t e) const { return exp_[e]; }
  Elem primitive_element() const { return primitive_; }

  std::string describe() const;

 private:
  struct Token {};

 public:
  Field(Token, std::int64_t p, FieldPtr base, std::vector<Elem> modulus);

 private:
  Elem mul_generic(Elem x, Elem y) const;
  void build_tables();

  std::int64_t p_;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  int degree_;
  int absolute_degree_;
  std::uint32_t size_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  Elem primitive_ = 0;
};

/// Value-semantics element bound to its field.
class GFElement {
 public:
  GFElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<Elem> coefficients() const { return field_->coefficients(value_); }

  GFElement operator+(const GFElement& o) const;
  GFElement operator-(const GFElement& o) const;
  GFElement operator-() const { return {field_, field_->neg(value_)}; }
  GFElement operator*(const GFElement& o) const;
  GFElement operator/(const GFElement& o) const;
  GFElement inv() const { return {field_, field_->inv(value_)}; }
  GFElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
  bool is_zero() const { return value_ == 0; }
  bool is_square() const { return field_->is_square(value_); }
  Elem absolute_trace() const { return field_->absolute_trace(value_); }

  bool operator==(const GFElement& o) const;

 private:
  const Field& same_field(const GFElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// Dense polynomial over a field, lowest coefficient first, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  static Polynomial monomial(FieldPtr field, Elem c, int degree);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const;
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }

  Elem eval(Elem x) const;
  /// Evaluates at x in an extension `ext` whose tower contains this
  /// polynomial's field as the immediate base.
  Elem eval_in(const Field& ext, Elem x) const;

  Polynomial derivative() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Elem c) const;
  Polynomial monic() const;
  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic gcd; throws std::invalid_argument when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// gcd(F, F') is a nonzero constant. A nonconstant F with F' == 0 is a p-th
/// power and therefore not squarefree. Throws on the zero polynomial.
bool is_squarefree(const Polynomial& f);

/// base^e mod m over the polynomial ring.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

/// Irreducibility over the coefficient field: no roots and no common factor
/// with x^(Q^j) - x for 1 <= j <= deg/2, Q the field size.
bool is_irreducible(const Polynomial& f);

}  // namespace weilsurf::gf
