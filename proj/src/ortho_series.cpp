#include "singmod/ortho_series.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "layer_poly.hpp"

namespace singmod {

namespace {

std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

ParityClass parity_of(IndexKey k) { return {k.N & 1, k.R & 1, k.M & 1}; }

void check_parity(const OrthoSeries::Terms& terms) {
  if (terms.empty()) return;
  const ParityClass first = parity_of(terms.begin()->first);
  for (const auto& [k, c] : terms)
    if (parity_of(k) != first) throw SeriesError("series mixes parity classes");
}

int clamp_prec(std::int64_t p) {
  constexpr std::int64_t lim = 1 << 28;
  return static_cast<int>(std::clamp<std::int64_t>(p, -lim, lim));
}

}  // namespace

OrthoSeries::OrthoSeries(Terms terms, int prec) : prec_(prec) {
  const std::int64_t bound = order_bound();
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0 || it->first.order() > bound)
      it = terms.erase(it);
    else
      ++it;
  }
  check_parity(terms);
  terms_ = std::move(terms);
}

OrthoSeries OrthoSeries::constant(const Rational& c, int prec) {
  return monomial(IndexKey{0, 0, 0}, c, prec);
}

OrthoSeries OrthoSeries::monomial(IndexKey key, const Rational& c, int prec) {
  Terms t;
  t.emplace(key, c);
  return OrthoSeries(std::move(t), prec);
}

std::int64_t OrthoSeries::min_order() const {
  if (terms_.empty()) return order_bound() + 1;
  return terms_.begin()->first.order();
}

Rational OrthoSeries::coeff(IndexKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<ParityClass> OrthoSeries::parity() const {
  if (terms_.empty()) return std::nullopt;
  return parity_of(terms_.begin()->first);
}

OrthoSeries OrthoSeries::truncated(int prec) const {
  OrthoSeries out(std::min(prec, prec_));
  const std::int64_t bound = out.order_bound();
  for (const auto& [k, c] : terms_) {
    if (k.order() > bound) break;
    out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

bool OrthoSeries::agrees_with(const OrthoSeries& other, int prec) const {
  if (prec > prec_ || prec > other.prec_) return false;
  return truncated(prec).terms_ == other.truncated(prec).terms_;
}

OrthoSeries OrthoSeries::operator-() const {
  OrthoSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

OrthoSeries& OrthoSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

OrthoSeries operator+(const OrthoSeries& a, const OrthoSeries& b) {
  const int prec = std::min(a.prec_, b.prec_);
  OrthoSeries out = a.truncated(prec);
  const std::int64_t bound = out.order_bound();
  for (const auto& [k, c] : b.terms_) {
    if (k.order() > bound) break;
    auto [it, inserted] = out.terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  check_parity(out.terms_);
  return out;
}

OrthoSeries operator-(const OrthoSeries& a, const OrthoSeries& b) { return a + (-b); }

OrthoSeries OrthoSeries::scaled_by(const std::function<Rational(IndexKey)>& f) const {
  Terms out;
  for (const auto& [k, c] : terms_) {
    Rational v = c * f(k);
    if (v != 0) out.emplace_hint(out.end(), k, std::move(v));
  }
  return OrthoSeries(std::move(out), prec_);
}

namespace {

// Integer numerators over a common denominator; keeps the convolution in mpz.
struct IntegralView {
  std::vector<std::pair<IndexKey, Integer>> terms;
  Integer denominator = 1;
};

IntegralView integral_view(const OrthoSeries& f) {
  IntegralView v;
  for (const auto& [k, c] : f.terms()) mpz_lcm(v.denominator.get_mpz_t(), v.denominator.get_mpz_t(), c.get_den_mpz_t());
  v.terms.reserve(f.size());
  for (const auto& [k, c] : f.terms()) {
    Integer scaled = c.get_num() * (v.denominator / c.get_den());
    v.terms.emplace_back(k, std::move(scaled));
  }
  return v;
}

}  // namespace

OrthoSeries multiply(const OrthoSeries& f, const OrthoSeries& g) {
  const std::int64_t p1 = f.prec() + floor_half(g.min_order());
  const std::int64_t p2 = g.prec() + floor_half(f.min_order());
  const int prec = clamp_prec(std::min(p1, p2));
  OrthoSeries out(prec);
  if (f.is_zero() || g.is_zero()) return out;

  const std::int64_t bound = out.order_bound();
  const IntegralView a = integral_view(f);
  const IntegralView b = integral_view(g);
  const std::int64_t g_min = g.min_order();

  std::unordered_map<IndexKey, Integer, IndexKeyHash> acc;
  acc.reserve(f.size() + g.size());
  for (const auto& [ka, ca] : a.terms) {
    if (ka.order() + g_min > bound) break;
    for (const auto& [kb, cb] : b.terms) {
      if (ka.order() + kb.order() > bound) break;
      Integer& slot = acc[ka + kb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }

  const Integer den = a.denominator * b.denominator;
  OrthoSeries::Terms terms;
  for (auto& [k, v] : acc) {
    if (v == 0) continue;
    terms.emplace(k, make_rational(v, den));
  }
  return OrthoSeries(std::move(terms), prec);
}

OrthoSeries sqrt(const OrthoSeries& f) {
  using namespace detail;
  if (f.is_zero()) throw SeriesError("square root of a series that vanishes within precision");
  const std::int64_t base = f.min_order();
  if (base % 2 != 0) throw SeriesError("leading layer is not a perfect square");
  const std::int64_t root_base = base / 2;
  // S_j at order root_base + j needs F up to order base + j.
  const std::int64_t root_bound = f.order_bound() - root_base;
  const int prec = clamp_prec(floor_half(root_bound));
  const std::int64_t last = 2 * std::int64_t{prec} - root_base;

  const Layers layers = split_layers(f);
  std::vector<Layer> root(static_cast<std::size_t>(std::max<std::int64_t>(last + 1, 1)));
  root[0] = layer_sqrt(layers.at(base));
  const Layer two_s0 = [&] {
    Layer t = root[0];
    for (auto& [e, c] : t) c *= 2;
    return t;
  }();

  for (std::int64_t j = 1; j <= last; ++j) {
    Layer rhs;
    if (auto it = layers.find(base + j); it != layers.end()) rhs = it->second;
    for (std::int64_t a = 1; a < j; ++a) {
      if (root[a].empty() || root[j - a].empty()) continue;
      layer_axpy(rhs, Rational(-1), layer_mul(root[a], root[j - a]));
    }
    root[j] = layer_divide_exact(rhs, two_s0);
  }

  OrthoSeries::Terms terms;
  for (std::int64_t j = 0; j <= last; ++j) insert_layer(terms, root_base + j, root[j]);
  return OrthoSeries(std::move(terms), prec);
}

OrthoSeries divide_exact(const OrthoSeries& f, const OrthoSeries& g) {
  using namespace detail;
  if (g.is_zero()) throw SeriesError("division by a series that vanishes within precision");
  const std::int64_t g_base = g.min_order();
  if (f.is_zero()) {
    const std::int64_t bound = f.order_bound() - g_base;
    return OrthoSeries(clamp_prec(floor_half(bound)));
  }
  const std::int64_t f_base = f.min_order();
  const std::int64_t q_base = f_base - g_base;
  // Q_j needs F up to order f_base + j and G up to order g_base + j.
  const std::int64_t q_bound = std::min(f.order_bound() - g_base, g.order_bound() + f_base - 2 * g_base);
  const int prec = clamp_prec(floor_half(q_bound));
  const std::int64_t last = 2 * std::int64_t{prec} - q_base;

  const Layers fl = split_layers(f);
  const Layers gl = split_layers(g);
  const Layer& g0 = gl.at(g_base);
  std::vector<Layer> q(static_cast<std::size_t>(std::max<std::int64_t>(last + 1, 0)));
  for (std::int64_t j = 0; j <= last; ++j) {
    Layer rhs;
    if (auto it = fl.find(f_base + j); it != fl.end()) rhs = it->second;
    for (std::int64_t i = 0; i < j; ++i) {
      if (q[i].empty()) continue;
      auto it = gl.find(g_base + j - i);
      if (it == gl.end()) continue;
      layer_axpy(rhs, Rational(-1), layer_mul(q[i], it->second));
    }
    q[j] = layer_divide_exact(rhs, g0);
  }

  OrthoSeries::Terms terms;
  for (std::int64_t j = 0; j <= last; ++j) insert_layer(terms, q_base + j, q[j]);
  return OrthoSeries(std::move(terms), prec);
}

OrthoSeries derivative(const OrthoSeries& f, Axis axis) {
  return f.scaled_by([axis](IndexKey k) {
    const std::int32_t e = axis == Axis::tau ? k.N : axis == Axis::z ? k.R : k.M;
    return make_rational(e, 2);
  });
}

std::map<std::pair<std::int32_t, std::int32_t>, Rational> restrict_diagonal(const OrthoSeries& f) {
  std::map<std::pair<std::int32_t, std::int32_t>, Rational> out;
  for (const auto& [k, c] : f.terms()) out[{k.N, k.M}] += c;
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

OrthoSeries swap(const OrthoSeries& f) {
  OrthoSeries::Terms t;
  for (const auto& [k, c] : f.terms()) t.emplace(IndexKey{k.M, k.R, k.N}, c);
  return OrthoSeries(std::move(t), f.prec());
}

OrthoSeries negate_r(const OrthoSeries& f) {
  OrthoSeries::Terms t;
  for (const auto& [k, c] : f.terms()) t.emplace(IndexKey{k.N, -k.R, k.M}, c);
  return OrthoSeries(std::move(t), f.prec());
}

std::pair<OrthoSeries, Rational> content_normalize(const OrthoSeries& f) {
  if (f.is_zero()) throw SeriesError("content of a series that vanishes within precision");
  Integer g = 0;
  Integer l = 1;
  for (const auto& [k, c] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content = make_rational(g, l);
  if (f.terms().begin()->second < 0) content = -content;
  OrthoSeries out = f;
  out *= Rational(1) / content;
  return {std::move(out), content};
}

bool has_integer_coefficients(const OrthoSeries& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

}  // namespace singmod
