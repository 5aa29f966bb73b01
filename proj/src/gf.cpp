#include "weilsurf/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "weilsurf/numth.hpp"

namespace weilsurf::gf {

namespace {

std::int64_t checked_power(std::int64_t base, int k) {
  std::int64_t size = 1;
  for (int i = 0; i < k; ++i) {
    if (size > Field::kMaxSize / base) throw std::invalid_argument("field size exceeds cap");
    size *= base;
  }
  return size;
}

}  // namespace

Field::Field(Token, std::int64_t p, FieldPtr base, std::vector<Elem> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
  degree_ = static_cast<int>(modulus_.size()) - 1;
  absolute_degree_ = degree_ * (base_ ? base_->absolute_degree() : 1);
  size_ = static_cast<std::uint32_t>(base_ ? checked_power(base_->size(), degree_) : p_);
}

FieldPtr Field::make(std::int64_t p, int m) {
  if (!numth::is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("degree must be positive");
  checked_power(p, m);
  auto prime = std::make_shared<Field>(Token{}, p, nullptr, std::vector<Elem>{0, 1});
  if (prime->size() <= kTableLimit) prime->build_tables();
  if (m == 1) return prime;
  return extend(prime, m);
}

FieldPtr Field::extend(const FieldPtr& base, int k) {
  if (!base) throw std::invalid_argument("extend: null base");
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  if (k == 1) return base;
  checked_power(base->size(), k);
  const std::uint32_t q = base->size();
  std::int64_t candidates = 1;
  for (int i = 0; i < k; ++i) candidates *= q;
  for (std::int64_t idx = 0; idx < candidates; ++idx) {
    std::vector<Elem> coeffs(k + 1);
    std::int64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    coeffs[k] = 1;
    if (coeffs[0] == 0) continue;
    if (!is_irreducible(Polynomial(base, coeffs))) continue;
    auto field = std::make_shared<Field>(Token{}, base->characteristic(), base, std::move(coeffs));
    if (field->size() <= kTableLimit) field->build_tables();
    return field;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Elem Field::from_int(std::int64_t n) const {
  return static_cast<Elem>(numth::mod(n, p_));
}

Elem Field::add(Elem x, Elem y) const {
  if (p_ == 2) return x ^ y;
  if (!base_) {
    const Elem s = x + y;
    return s >= p_ ? s - static_cast<Elem>(p_) : s;
  }
  const auto p = static_cast<Elem>(p_);
  Elem result = 0;
  Elem place = 1;
  while (x != 0 || y != 0) {
    Elem d = x % p + y % p;
    if (d >= p) d -= p;
    result += d * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return result;
}

Elem Field::neg(Elem x) const {
  if (p_ == 2) return x;
  const auto p = static_cast<Elem>(p_);
  Elem result = 0;
  Elem place = 1;
  while (x != 0) {
    const Elem d = x % p;
    result += (d == 0 ? 0 : p - d) * place;
    place *= p;
    x /= p;
  }
  return result;
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (!log_.empty()) return exp_[log_[x] + log_[y]];
  return mul_generic(x, y);
}

Elem Field::mul_generic(Elem x, Elem y) const {
  if (!base_) {
    return static_cast<Elem>((static_cast<std::uint64_t>(x) * y) % static_cast<std::uint64_t>(p_));
  }
  const Field& b = *base_;
  const auto xs = coefficients(x);
  const auto ys = coefficients(y);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (xs[i] == 0) continue;
    for (int j = 0; j < degree_; ++j)
      prod[i + j] = b.add(prod[i + j], b.mul(xs[i], ys[j]));
  }
  for (int i = 2 * degree_ - 2; i >= degree_; --i) {
    const Elem c = prod[i];
    if (c == 0) continue;
    // x^degree = -(modulus without its leading term)
    for (int j = 0; j < degree_; ++j)
      prod[i - degree_ + j] = b.sub(prod[i - degree_ + j], b.mul(c, modulus_[j]));
    prod[i] = 0;
  }
  prod.resize(degree_);
  return from_coefficients(prod);
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  if (!log_.empty()) return exp_[(size_ - 1 - log_[x]) % (size_ - 1)];
  return pow(x, size_ - 2);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t order = size_ - 1;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[x]) * (e % order)) % order)];
  }
  Elem result = 1;
  Elem b = x;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

bool Field::is_square(Elem x) const {
  if (p_ == 2) throw std::logic_error("is_square needs odd characteristic");
  if (x == 0) return true;
  if (!log_.empty()) return log_[x] % 2 == 0;
  return pow(x, (size_ - 1) / 2) == 1;
}

Elem Field::absolute_trace(Elem x) const {
  Elem sum = x;
  Elem t = x;
  for (int i = 1; i < absolute_degree_; ++i) {
    t = frobenius(t);
    sum = add(sum, t);
  }
  if (sum >= p_) throw std::logic_error("trace escaped the prime field");
  return sum;
}

std::vector<Elem> Field::coefficients(Elem x) const {
  const std::uint32_t q = base_size();
  if (!base_) return {x};
  std::vector<Elem> out(degree_);
  for (int i = 0; i < degree_; ++i) {
    out[i] = x % q;
    x /= q;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const Elem> coeffs) const {
  if (!base_) return coeffs.empty() ? 0 : coeffs[0];
  const std::uint32_t q = base_size();
  Elem result = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) result = result * q + coeffs[i];
  return result;
}

void Field::build_tables() {
  const std::uint32_t order = size_ - 1;
  if (order == 0) return;
  std::vector<std::uint32_t> log(size_, 0);
  std::vector<Elem> exp(2 * static_cast<std::size_t>(order));
  for (Elem g = 1; g < size_; ++g) {
    Elem x = 1;
    std::uint32_t e = 0;
    bool primitive = true;
    do {
      exp[e] = x;
      log[x] = e;
      x = mul_generic(x, g);
      ++e;
      if (x == 1 && e < order) {
        primitive = false;
        break;
      }
    } while (e < order);
    if (!primitive || x != 1) continue;
    for (std::uint32_t i = order; i < 2 * order; ++i) exp[i] = exp[i - order];
    log_ = std::move(log);
    exp_ = std::move(exp);
    primitive_ = g;
    return;
  }
  throw std::logic_error("no primitive element");
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "GF(" << size_ << ")";
  if (base_) {
    out << " = GF(" << base_->size() << ")[x]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) out << modulus_[i];
      if (i > 0) out << (modulus_[i] != 1 ? "*" : "") << "x";
      if (i > 1) out << "^" << i;
    }
    out << ")";
  }
  return out.str();
}

// GFElement -----------------------------------------------------------------

GFElement::GFElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("element without a field");
  if (value_ >= field_->size()) throw std::invalid_argument("element out of range");
}

const Field& GFElement::same_field(const GFElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("elements of different fields");
  return *field_;
}

GFElement GFElement::operator+(const GFElement& o) const {
  return {field_, same_field(o).add(value_, o.value_)};
}
GFElement GFElement::operator-(const GFElement& o) const {
  return {field_, same_field(o).sub(value_, o.value_)};
}
GFElement GFElement::operator*(const GFElement& o) const {
  return {field_, same_field(o).mul(value_, o.value_)};
}
GFElement GFElement::operator/(const GFElement& o) const {
  const Field& f = same_field(o);
  return {field_, f.mul(value_, f.inv(o.value_))};
}
bool GFElement::operator==(const GFElement& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

// Polynomial ----------------------------------------------------------------

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(FieldPtr field, Elem c, int degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Polynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
}

Elem Polynomial::eval(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
  return acc;
}

Elem Polynomial::eval_in(const Field& ext, Elem x) const {
  if (&ext != field_.get() && ext.base().get() != field_.get())
    throw std::invalid_argument("eval_in: field is not an extension of the coefficient field");
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), ext.embed(c_[i]));
  return acc;
}

Polynomial Polynomial::derivative() const {
  const Field& f = *field_;
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    Elem term = 0;
    const Elem n = f.from_int(static_cast<std::int64_t>(i));
    term = f.mul(n, c_[i]);
    d.push_back(term);
  }
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const Field& f = *field_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  const Field& f = *field_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  const Field& f = *field_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(Elem c) const {
  const Field& f = *field_;
  std::vector<Elem> r(c_);
  for (auto& x : r) x = f.mul(x, c);
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = *field_;
  std::vector<Elem> rem(c_);
  const int dd = d.degree();
  if (degree() < dd) return {Polynomial(field_), *this};
  std::vector<Elem> quot(degree() - dd + 1, 0);
  const Elem lead_inv = f.inv(d.leading());
  for (int i = degree(); i >= dd; --i) {
    const Elem c = rem[i];
    if (c == 0) continue;
    const Elem factor = f.mul(c, lead_inv);
    quot[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, d.c_[j]));
  }
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree of the zero polynomial");
  if (f.degree() == 0) return true;
  const Polynomial d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial result(base.field(), {1});
  result = result % m;
  Polynomial b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Field& field = *f.field();
  for (Elem x = 0; x < field.size(); ++x)
    if (f.eval(x) == 0) return false;
  const Polynomial x = Polynomial::monomial(f.field(), 1, 1);
  Polynomial frob = x;
  for (int j = 1; j <= n / 2; ++j) {
    frob = powmod(frob, field.size(), f);
    if (gcd(f, frob - x).degree() > 0) return false;
  }
  return true;
}

}  // namespace weilsurf::gf
