#include "weilsurf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weilsurf/cache.hpp"

namespace weilsurf::oracle {

namespace {

using gf::Elem;
using gf::Field;
using gf::FieldPtr;
using gf::Polynomial;

constexpr int kMaxK = 4;

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_supported(const Field& field) {
  if (field.base() && field.base()->base())
    throw std::invalid_argument("oracle fields must be built directly over the prime field");
  if (!is_supported(field.size(), true))
    throw std::invalid_argument("unsupported field size " + std::to_string(field.size()));
}

// Frobenius orbits x -> x^q of GF(q^k), one representative each, weighted by
// the orbit length.
struct OrbitRep {
  Elem x;
  int weight;
};

std::vector<OrbitRep> frobenius_orbits(const Field& ext, std::uint32_t q) {
  std::vector<OrbitRep> reps;
  std::vector<bool> seen(ext.size(), false);
  for (Elem x = 0; x < ext.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    Elem y = x;
    do {
      seen[y] = true;
      ++len;
      y = ext.pow(y, q);
    } while (y != x);
    reps.push_back({x, len});
  }
  return reps;
}

// Run `task(i)` for i in [0, n) on `jobs` workers with a fixed stride.
template <typename Task>
void run_strided(unsigned jobs, std::size_t n, Task&& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) task(0u, i);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += jobs) task(w, i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string describe_failure(std::int64_t q, const PointCounts& n, const std::string& model) {
  std::ostringstream out;
  out << "point counts of " << model << " over GF(" << q << ") are inconsistent: N = (" << n.N[0]
      << ", " << n.N[1] << ", " << n.N[2] << ", " << n.N[3] << ")";
  return out.str();
}

void bucket(RealizedMap& out, std::int64_t q, const PointCounts& n, std::int64_t multiplicity,
            const std::function<std::string()>& model) {
  const auto ab = weil_from_counts(n.N[0], n.N[1], q);
  if (!ab || !verify_counts(ab->first, ab->second, q, n))
    throw std::runtime_error(describe_failure(q, n, model()));
  out.counts[*ab] += multiplicity;
  out.models += multiplicity;
}

// Squarefree test for a monic polynomial given as a fixed coefficient array.
bool squarefree_small(const Field& f, const Elem* coeffs, int degree) {
  std::array<Elem, 8> a{};
  std::array<Elem, 8> b{};
  std::copy(coeffs, coeffs + degree + 1, a.begin());
  int da = degree;
  int db = -1;
  for (int i = 1; i <= degree; ++i) {
    b[i - 1] = f.mul(f.from_int(i), a[i]);
    if (b[i - 1] != 0) db = i - 1;
  }
  if (db < 0) return degree == 0;
  while (db >= 0) {
    // a <- a mod b
    const Elem lead_inv = f.inv(b[db]);
    for (int i = da; i >= db; --i) {
      const Elem c = a[i];
      if (c == 0) continue;
      const Elem factor = f.mul(c, lead_inv);
      for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(factor, b[j]));
    }
    da = db - 1;
    while (da >= 0 && a[da] == 0) --da;
    std::swap(a, b);
    std::swap(da, db);
  }
  return da == 0;
}

// Odd characteristic ----------------------------------------------------------

struct OddTables {
  FieldPtr ext;
  std::vector<OrbitRep> orbits;
  std::vector<std::int8_t> chi;
};

// Character sums S_k(F) = sum over x in GF(q^k) of chi(F(x)) for every monic
// F of the given degree, indexed by sum c_i q^i over the non-leading
// coefficients.
std::array<std::vector<std::int32_t>, kMaxK> character_sums(const FieldPtr& base, int degree,
                                                           const std::vector<OddTables>& tables,
                                                           unsigned jobs) {
  const auto q = base->size();
  const std::size_t polys = static_cast<std::size_t>(ipow(q, degree));
  const std::size_t leaves_per_task = polys / (static_cast<std::size_t>(q) * q);
  std::array<std::vector<std::int32_t>, kMaxK> sums;
  for (auto& s : sums) s.assign(polys, 0);

  // addq[d][c]: constant-digit addition within GF(q).
  std::vector<Elem> addq(static_cast<std::size_t>(q) * q);
  for (Elem d = 0; d < q; ++d)
    for (Elem c = 0; c < q; ++c) addq[d * q + c] = base->add(d, c);

  // A task fixes the two top coefficients; its leaves are contiguous.
  run_strided(jobs, static_cast<std::size_t>(q) * q, [&](unsigned, std::size_t task) {
    const Elem top = static_cast<Elem>(task / q);
    const Elem second = static_cast<Elem>(task % q);
    std::vector<Elem> cur;
    std::vector<Elem> next;
    for (int k = 0; k < kMaxK; ++k) {
      const Field& ext = *tables[k].ext;
      const auto& chi = tables[k].chi;
      std::int32_t* out = sums[k].data() + task * leaves_per_task;
      auto add_const = [&](Elem v, Elem c) {
        const Elem low = v % q;
        return v - low + addq[low * q + c];
      };
      for (const OrbitRep& rep : tables[k].orbits) {
        const Elem x = rep.x;
        auto times_x = [&](Elem v) { return ext.mul(v, x); };
        cur.assign(1, add_const(times_x(add_const(x, top)), second));
        for (int level = degree - 3; level >= 1; --level) {
          next.resize(cur.size() * q);
          for (std::size_t j = 0; j < cur.size(); ++j) {
            const Elem base_v = times_x(cur[j]);
            for (Elem c = 0; c < q; ++c) next[j * q + c] = add_const(base_v, c);
          }
          std::swap(cur, next);
        }
        for (std::size_t j = 0; j < cur.size(); ++j) {
          const Elem base_v = times_x(cur[j]);
          const Elem low = base_v % q;
          const Elem high = base_v - low;
          std::int32_t* leaf = out + j * q;
          const Elem* row = &addq[low * q];
          for (Elem c = 0; c < q; ++c) leaf[c] += rep.weight * chi[high + row[c]];
        }
      }
    }
  });
  return sums;
}

RealizedMap realized_odd(const FieldPtr& base, unsigned jobs) {
  const std::int64_t q = base->size();
  std::vector<OddTables> tables;
  for (int k = 1; k <= kMaxK; ++k) {
    OddTables t;
    t.ext = Field::extend(base, k);
    t.orbits = frobenius_orbits(*t.ext, base->size());
    t.chi.resize(t.ext->size());
    for (Elem z = 0; z < t.ext->size(); ++z) t.chi[z] = z == 0 ? 0 : (t.ext->is_square(z) ? 1 : -1);
    tables.push_back(std::move(t));
  }

  RealizedMap out;
  for (int degree = 5; degree <= 6; ++degree) {
    const auto sums = character_sums(base, degree, tables, jobs);
    const std::size_t polys = sums[0].size();
    std::vector<std::uint8_t> squarefree(polys, 0);
    run_strided(jobs, static_cast<std::size_t>(q), [&](unsigned, std::size_t chunk) {
      const std::size_t per = polys / q;
      std::array<Elem, 8> c{};
      for (std::size_t idx = chunk * per; idx < (chunk + 1) * per; ++idx) {
        std::size_t rest = idx;
        for (int i = 0; i < degree; ++i) {
          c[i] = static_cast<Elem>(rest % q);
          rest /= q;
        }
        c[degree] = 1;
        squarefree[idx] = squarefree_small(*base, c.data(), degree) ? 1 : 0;
      }
    });

    const int twists = degree == 6 ? 2 : 1;
    for (std::size_t idx = 0; idx < polys; ++idx) {
      if (!squarefree[idx]) continue;
      for (int twist = 0; twist < twists; ++twist) {
        PointCounts n;
        std::int64_t qk = 1;
        for (int k = 1; k <= kMaxK; ++k) {
          qk *= q;
          const int sign = (twist == 1 && k % 2 == 1) ? -1 : 1;
          const std::int64_t infinity = degree == 5 ? 1 : 1 + sign;
          n.N[k - 1] = qk + sign * sums[k - 1][idx] + infinity;
        }
        bucket(out, q, n, 1, [&] {
          return "degree-" + std::to_string(degree) + " model #" + std::to_string(idx) +
                 (twist ? " (nonsquare twist)" : "");
        });
      }
    }
  }
  return out;
}

// Characteristic 2 -------------------------------------------------------------

std::uint64_t poly_bits(const Polynomial& f, int m) {
  std::uint64_t bits = 0;
  for (int i = 0; i <= f.degree(); ++i) bits |= static_cast<std::uint64_t>(f.coeff(i)) << (m * i);
  return bits;
}

Polynomial bits_poly(const FieldPtr& field, std::uint64_t bits, int m, int terms) {
  std::vector<Elem> c(terms);
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  for (int i = 0; i < terms; ++i) c[i] = static_cast<Elem>((bits >> (m * i)) & mask);
  return Polynomial(field, std::move(c));
}

// GF(2)-linear span kept in echelon form keyed by the highest set bit.
class Gf2Span {
 public:
  explicit Gf2Span(int bits) : rows_(bits, 0) {}

  std::uint64_t reduce(std::uint64_t v) const {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (rows_[top] == 0) break;
      v ^= rows_[top];
    }
    return v;
  }

  // Fully reduced remainder: no bit at any pivot position.
  std::uint64_t normal_form(std::uint64_t v) const {
    for (int b = static_cast<int>(rows_.size()) - 1; b >= 0; --b)
      if (rows_[b] != 0 && ((v >> b) & 1)) v ^= rows_[b];
    return v;
  }

  void insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return;
    rows_[63 - std::countl_zero(v)] = v;
    ++rank_;
  }

  int rank() const { return rank_; }
  bool is_pivot(int b) const { return rows_[b] != 0; }

 private:
  std::vector<std::uint64_t> rows_;
  int rank_ = 0;
};

// Span of {u^2 + h u : deg u <= 3} over the field of h, or over `ext`
// (a quadratic extension) when given, as bit vectors of the coefficients.
Gf2Span artin_schreier_image(const Polynomial& h, const FieldPtr& over) {
  const Field& f = *over;
  const int m = f.absolute_degree();
  Gf2Span span(7 * m);
  const Polynomial h_over(over, h.coeffs());
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j < m; ++j) {
      const Polynomial u = Polynomial::monomial(over, Elem{1} << j, i);
      span.insert(poly_bits(u * u + h_over * u, m));
    }
  }
  return span;
}

RealizedMap realized_char2(const FieldPtr& base, unsigned jobs) {
  const std::int64_t q = base->size();
  const int m = base->absolute_degree();

  struct Char2Tables {
    FieldPtr ext;
    std::vector<OrbitRep> orbits;
    Elem trace_mask = 0;  // Tr(z) = parity(z & trace_mask)
  };
  std::vector<Char2Tables> tables;
  for (int k = 1; k <= kMaxK; ++k) {
    Char2Tables t;
    t.ext = Field::extend(base, k);
    t.orbits = frobenius_orbits(*t.ext, base->size());
    for (int bit = 0; bit < t.ext->absolute_degree(); ++bit)
      if (t.ext->absolute_trace(Elem{1} << bit)) t.trace_mask |= Elem{1} << bit;
    tables.push_back(std::move(t));
  }
  auto trace_base = [&](Elem z) { return std::popcount(z & tables[0].trace_mask) & 1; };
  const FieldPtr quadratic = tables[1].ext;
  const std::uint32_t h_count = static_cast<std::uint32_t>(ipow(q, 4));

  std::vector<RealizedMap> partial(std::max(1u, jobs));
  run_strided(jobs, h_count - 1, [&](unsigned worker, std::size_t task) {
    const std::uint64_t h_bits = task + 1;
    const Polynomial h = bits_poly(base, h_bits, m, 4);
    const Gf2Span geometric = artin_schreier_image(h, quadratic);

    std::vector<std::uint64_t> models;
    for (const Polynomial& f : char2_coset_representatives(h)) {
      if (!char2_smooth(h, f)) continue;
      // Over the quadratic extension a coefficient c of GF(q) sits at the
      // same index, i.e. at bits [2m i, 2m i + m) of the wider layout.
      std::uint64_t wide = 0;
      for (int i = 0; i <= 6; ++i) wide |= static_cast<std::uint64_t>(f.coeff(i)) << (2 * m * i);
      if (geometric.reduce(wide) == 0) continue;
      models.push_back(poly_bits(f, m));
    }
    if (models.empty()) return;

    std::vector<PointCounts> counts(models.size());
    const Elem h3 = h.coeff(3);
    for (int k = 1; k <= kMaxK; ++k) {
      const Char2Tables& t = tables[k - 1];
      const Field& ext = *t.ext;
      auto trace = [&](Elem z) { return std::popcount(z & t.trace_mask) & 1; };
      std::vector<std::int64_t> affine(models.size(), 0);
      for (const OrbitRep& rep : t.orbits) {
        const Elem hx = h.eval_in(ext, rep.x);
        if (hx == 0) {
          for (auto& n : affine) n += rep.weight;
          continue;
        }
        // Tr(f(x)/h(x)^2) is GF(2)-linear in the bits of f.
        const Elem g = ext.inv(ext.mul(hx, hx));
        std::uint64_t mask = 0;
        Elem power = g;
        for (int i = 0; i <= 6; ++i) {
          for (int j = 0; j < m; ++j)
            if (trace(ext.mul(Elem{1} << j, power))) mask |= std::uint64_t{1} << (m * i + j);
          power = ext.mul(power, rep.x);
        }
        for (std::size_t r = 0; r < models.size(); ++r)
          if ((std::popcount(models[r] & mask) & 1) == 0) affine[r] += 2 * rep.weight;
      }
      for (std::size_t r = 0; r < models.size(); ++r) {
        std::int64_t infinity = 1;
        if (h3 != 0) {
          const Elem f6 = static_cast<Elem>(models[r] >> (6 * m)) & static_cast<Elem>(q - 1);
          const Elem z = base->mul(f6, base->inv(base->mul(h3, h3)));
          infinity = ((k * trace_base(z)) % 2 == 0) ? 2 : 0;
        }
        counts[r].N[k - 1] = affine[r] + infinity;
      }
    }
    for (std::size_t r = 0; r < models.size(); ++r) {
      bucket(partial[worker], q, counts[r], 1, [&] {
        return "h=" + std::to_string(h_bits) + " f=" + std::to_string(models[r]);
      });
    }
  });

  RealizedMap out;
  for (const RealizedMap& p : partial) {
    for (const auto& [ab, n] : p.counts) out.counts[ab] += n;
    out.models += p.models;
  }
  return out;
}

}  // namespace

gf::Elem CurveOdd::multiplier() const {
  return nonsquare_twist ? fixed_nonsquare(*field) : field->one();
}

const std::vector<std::int64_t>& required_sizes() {
  static const std::vector<std::int64_t> sizes{2, 3, 4, 5, 7, 9};
  return sizes;
}

const std::vector<std::int64_t>& stretch_sizes() {
  static const std::vector<std::int64_t> sizes{8, 11, 13};
  return sizes;
}

bool is_supported(std::int64_t q, bool allow_stretch) {
  const auto& req = required_sizes();
  if (std::find(req.begin(), req.end(), q) != req.end()) return true;
  const auto& str = stretch_sizes();
  return allow_stretch && std::find(str.begin(), str.end(), q) != str.end();
}

gf::Elem fixed_nonsquare(const gf::Field& field) {
  for (Elem x = 1; x < field.size(); ++x)
    if (!field.is_square(x)) return x;
  throw std::logic_error("field has no nonsquare");
}

bool char2_smooth(const Polynomial& h, const Polynomial& f) {
  const Field& field = *h.field();
  if (field.characteristic() != 2) throw std::invalid_argument("char2_smooth needs characteristic 2");
  if (h.is_zero()) return false;
  // Affine singular points sit over roots of h where h'^2 f = f'^2.
  const Polynomial dh = h.derivative();
  const Polynomial df = f.derivative();
  const Polynomial test = dh * dh * f + df * df;
  if (test.is_zero() ? h.degree() > 0 : gcd(h, test).degree() > 0) return false;
  // Chart at infinity: v^2 + u^3 h(1/u) v = u^6 f(1/u), at u = 0.
  const Elem h3 = h.coeff(3);
  const Elem h2 = h.coeff(2);
  const Elem f6 = f.coeff(6);
  const Elem f5 = f.coeff(5);
  if (h3 == 0 && field.mul(field.mul(h2, h2), f6) == field.mul(f5, f5)) return false;
  return true;
}

bool char2_geometrically_irreducible(const Polynomial& h, const Polynomial& f) {
  const FieldPtr& base = h.field();
  if (base->characteristic() != 2) throw std::invalid_argument("characteristic 2 only");
  const FieldPtr quadratic = Field::extend(base, 2);
  const Gf2Span image = artin_schreier_image(h, quadratic);
  const int m = base->absolute_degree();
  std::uint64_t wide = 0;
  for (int i = 0; i <= std::min(f.degree(), 6); ++i)
    wide |= static_cast<std::uint64_t>(f.coeff(i)) << (2 * m * i);
  if (f.degree() > 6) return true;
  return image.reduce(wide) != 0;
}

std::vector<Polynomial> char2_coset_representatives(const Polynomial& h) {
  const FieldPtr& base = h.field();
  if (base->characteristic() != 2) throw std::invalid_argument("characteristic 2 only");
  if (h.is_zero() || h.degree() > 3) throw std::invalid_argument("need 0 != h with deg h <= 3");
  const int m = base->absolute_degree();
  const Gf2Span image = artin_schreier_image(h, base);
  std::vector<int> free_bits;
  for (int b = 0; b < 7 * m; ++b)
    if (!image.is_pivot(b)) free_bits.push_back(b);
  std::vector<Polynomial> reps;
  reps.reserve(std::size_t{1} << free_bits.size());
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << free_bits.size()); ++r) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < free_bits.size(); ++i)
      if ((r >> i) & 1) bits |= std::uint64_t{1} << free_bits[i];
    reps.push_back(bits_poly(base, bits, m, 7));
  }
  return reps;
}

void enumerate_curves(const FieldPtr& field, const std::function<void(const Curve&)>& visit) {
  require_supported(*field);
  const std::uint32_t q = field->size();
  if (field->characteristic() != 2) {
    for (int degree = 5; degree <= 6; ++degree) {
      const std::int64_t polys = ipow(q, degree);
      for (std::int64_t idx = 0; idx < polys; ++idx) {
        std::vector<Elem> c(degree + 1);
        std::int64_t rest = idx;
        for (int i = 0; i < degree; ++i) {
          c[i] = static_cast<Elem>(rest % q);
          rest /= q;
        }
        c[degree] = 1;
        Polynomial F(field, std::move(c));
        if (!gf::is_squarefree(F)) continue;
        visit(Curve{CurveOdd{field, false, F}});
        if (degree == 6) visit(Curve{CurveOdd{field, true, F}});
      }
    }
    return;
  }
  const int m = field->absolute_degree();
  for (std::uint64_t h_bits = 1; h_bits < static_cast<std::uint64_t>(ipow(q, 4)); ++h_bits) {
    const Polynomial h = bits_poly(field, h_bits, m, 4);
    for (const Polynomial& f : char2_coset_representatives(h)) {
      if (!char2_smooth(h, f) || !char2_geometrically_irreducible(h, f)) continue;
      visit(Curve{CurveChar2{field, h, f}});
    }
  }
}

std::int64_t count_points(const Curve& curve, int k) {
  if (k < 1 || k > kMaxK) throw std::invalid_argument("extension degree must be in 1..4");
  if (const auto* odd = std::get_if<CurveOdd>(&curve)) {
    const FieldPtr ext = Field::extend(odd->field, k);
    const Elem c = ext->embed(odd->multiplier());
    std::int64_t n = 0;
    for (Elem x = 0; x < ext->size(); ++x) {
      const Elem v = ext->mul(c, odd->F.eval_in(*ext, x));
      n += v == 0 ? 1 : (ext->is_square(v) ? 2 : 0);
    }
    if (odd->F.degree() == 5) return n + 1;
    return n + (ext->is_square(c) ? 2 : 0);
  }
  const auto& c2 = std::get<CurveChar2>(curve);
  const FieldPtr ext = Field::extend(c2.field, k);
  std::int64_t n = 0;
  for (Elem x = 0; x < ext->size(); ++x) {
    const Elem hx = c2.h.eval_in(*ext, x);
    if (hx == 0) {
      n += 1;
      continue;
    }
    const Elem z = ext->mul(c2.f.eval_in(*ext, x), ext->inv(ext->mul(hx, hx)));
    if (ext->absolute_trace(z) == 0) n += 2;
  }
  const Elem h3 = c2.h.coeff(3);
  if (h3 == 0) return n + 1;
  const Elem z = ext->mul(c2.f.coeff(6), ext->inv(ext->mul(h3, h3)));
  return n + (ext->absolute_trace(z) == 0 ? 2 : 0);
}

PointCounts count_points(const Curve& curve) {
  PointCounts n;
  for (int k = 1; k <= kMaxK; ++k) n.N[k - 1] = count_points(curve, k);
  return n;
}

std::optional<ABPair> weil_from_counts(std::int64_t N1, std::int64_t N2, std::int64_t q) {
  const std::int64_t a = N1 - q - 1;
  const std::int64_t twice_b = a * a + N2 - q * q - 1;
  if (twice_b % 2 != 0) return std::nullopt;
  return ABPair{a, twice_b / 2};
}

bool verify_counts(std::int64_t a, std::int64_t b, std::int64_t q, const PointCounts& counts) {
  const Int e1 = -Int(a);
  const Int e2 = b;
  const Int e3 = -Int(a) * q;
  const Int e4 = Int(q) * q;
  std::array<Int, 4> p{};
  p[0] = e1;
  p[1] = e1 * p[0] - 2 * e2;
  p[2] = e1 * p[1] - e2 * p[0] + 3 * e3;
  p[3] = e1 * p[2] - e2 * p[1] + e3 * p[0] - 4 * e4;
  Int qk = 1;
  for (int k = 0; k < 4; ++k) {
    qk *= q;
    if (Int(counts.N[k]) != qk + 1 - p[k]) return false;
  }
  return true;
}

RealizedMap compute_realized(const FieldPtr& field, unsigned jobs) {
  require_supported(*field);
  if (field->characteristic() == 2) return realized_char2(field, jobs);
  return realized_odd(field, jobs);
}

RealizedMap compute_realized_slow(const FieldPtr& field) {
  RealizedMap out;
  const std::int64_t q = field->size();
  enumerate_curves(field, [&](const Curve& curve) {
    bucket(out, q, count_points(curve), 1, [] { return std::string("enumerated model"); });
  });
  return out;
}

OracleReport realized_map(const FieldPtr& field, const OracleOptions& options) {
  require_supported(*field);
  if (!is_supported(field->size(), options.allow_stretch))
    throw std::invalid_argument("field size " + std::to_string(field->size()) + " needs the stretch flag");
  OracleReport report;
  report.field = field;
  std::optional<std::filesystem::path> path;
  if (options.cache_dir) {
    path = cache::default_path(*options.cache_dir, *field);
    if (auto cached = cache::load(*path, *field)) {
      report.realized = std::move(*cached);
      for (const auto& [ab, n] : report.realized) report.models += n;
      report.from_cache = true;
      return report;
    }
  }
  RealizedMap fresh = compute_realized(field, options.jobs);
  report.realized = std::move(fresh.counts);
  report.models = fresh.models;
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    cache::store(*path, *field, report.realized);
  }
  return report;
}

OracleReport crosscheck(const FieldPtr& field, const OracleOptions& options) {
  OracleReport report = realized_map(field, options);
  const auto prime_power = numth::PrimePower::make(field->characteristic(), field->absolute_degree());
  const auto candidates = enumerate_candidates(prime_power);
  report.candidates = static_cast<std::int64_t>(candidates.size());

  std::map<ABPair, bool> seen;
  for (const WeilCandidate& c : candidates) {
    const Classification cls = classify(c);
    const bool positive = cls.jacobian && cls.jacobian->exists;
    if (positive) ++report.classifier_positive;
    const auto it = report.realized.find({c.a, c.b});
    const bool realized = it != report.realized.end();
    seen[{c.a, c.b}] = true;
    if (positive == realized) continue;
    std::string verdict(to_string(cls.surface.kind));
    if (cls.surface.reason) verdict += std::string(":") + std::string(to_string(*cls.surface.reason));
    if (cls.jacobian) verdict += std::string(" rule=") + std::string(to_string(cls.jacobian->rule));
    report.anomalies.push_back({c, positive, verdict, realized, realized ? it->second : 0});
  }
  for (const auto& [ab, n] : report.realized) {
    if (seen.count(ab)) continue;
    report.anomalies.push_back({WeilCandidate{prime_power, ab.first, ab.second}, false, "not_weil:SHAPE", true, n});
  }
  return report;
}

}  // namespace weilsurf::oracle
