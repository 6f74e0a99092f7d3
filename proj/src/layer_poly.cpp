#include "layer_poly.hpp"

#include <algorithm>
#include <limits>

namespace singmod::detail {

namespace {

struct Box {
  std::int32_t n_lo = std::numeric_limits<std::int32_t>::max();
  std::int32_t n_hi = std::numeric_limits<std::int32_t>::min();
  std::int32_t r_lo = std::numeric_limits<std::int32_t>::max();
  std::int32_t r_hi = std::numeric_limits<std::int32_t>::min();

  bool contains(Exponent e) const {
    return e.first >= n_lo && e.first <= n_hi && e.second >= r_lo && e.second <= r_hi;
  }
};

Box bounding_box(const Layer& a) {
  Box b;
  for (const auto& [e, c] : a) {
    b.n_lo = std::min(b.n_lo, e.first);
    b.n_hi = std::max(b.n_hi, e.first);
    b.r_lo = std::min(b.r_lo, e.second);
    b.r_hi = std::max(b.r_hi, e.second);
  }
  return b;
}

void add_term(Layer& acc, Exponent e, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

bool rational_sqrt(const Rational& x, Rational& out) {
  if (x <= 0) return false;
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = make_rational(sn, sd);
  return true;
}

Exponent sub(Exponent a, Exponent b) { return {a.first - b.first, a.second - b.second}; }
Exponent add(Exponent a, Exponent b) { return {a.first + b.first, a.second + b.second}; }

}  // namespace

Layers split_layers(const OrthoSeries& f) {
  Layers out;
  for (const auto& [k, c] : f.terms()) out[k.order()].emplace(Exponent{k.N, k.R}, c);
  return out;
}

void insert_layer(OrthoSeries::Terms& terms, std::int64_t order, const Layer& layer) {
  for (const auto& [e, c] : layer) {
    IndexKey key{e.first, e.second, static_cast<std::int32_t>(order - e.first)};
    terms.emplace(key, c);
  }
}

Layer layer_mul(const Layer& a, const Layer& b) {
  Layer out;
  Rational t;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      add_term(out, add(ea, eb), t);
    }
  }
  return out;
}

void layer_axpy(Layer& acc, const Rational& c, const Layer& x) {
  for (const auto& [e, v] : x) add_term(acc, e, c * v);
}

// Every term of an exact quotient lies in the box spanned by the per-coordinate
// degree differences, which bounds the loop for inexact inputs.
Layer layer_divide_exact(const Layer& num, const Layer& den) {
  if (den.empty()) throw SeriesError("layer division by zero");
  Layer quotient;
  if (num.empty()) return quotient;
  const Box bn = bounding_box(num);
  const Box bd = bounding_box(den);
  Box bq{bn.n_lo - bd.n_lo, bn.n_hi - bd.n_hi, bn.r_lo - bd.r_lo, bn.r_hi - bd.r_hi};
  const auto& [lead_e, lead_c] = *den.rbegin();
  Layer rem = num;
  while (!rem.empty()) {
    const auto [re, rc] = *rem.rbegin();
    const Exponent qe = sub(re, lead_e);
    if (!bq.contains(qe)) throw SeriesError("inexact layer division");
    const Rational qc = rc / lead_c;
    quotient.emplace(qe, qc);
    for (const auto& [de, dc] : den) add_term(rem, add(qe, de), -qc * dc);
  }
  return quotient;
}

Layer layer_sqrt(const Layer& a) {
  if (a.empty()) throw SeriesError("square root of an empty layer");
  const Box ba = bounding_box(a);
  if ((ba.n_lo | ba.n_hi | ba.r_lo | ba.r_hi) & 1) throw SeriesError("leading layer is not a perfect square");
  const Box bs{ba.n_lo / 2, ba.n_hi / 2, ba.r_lo / 2, ba.r_hi / 2};

  const auto& [lead_e, lead_c] = *a.rbegin();
  Rational s0;
  if (!rational_sqrt(lead_c, s0)) throw SeriesError("leading layer is not a perfect square");
  const Exponent s0e{lead_e.first / 2, lead_e.second / 2};

  Layer root{{s0e, s0}};
  Layer rem = a;
  add_term(rem, lead_e, -lead_c);
  const Rational two_s0 = 2 * s0;
  while (!rem.empty()) {
    const auto [re, rc] = *rem.rbegin();
    const Exponent qe = sub(re, s0e);
    if (!bs.contains(qe) || !(qe < s0e)) throw SeriesError("leading layer is not a perfect square");
    const Rational qc = rc / two_s0;
    // rem -= 2 q * root + q^2
    for (const auto& [e, c] : root) add_term(rem, add(qe, e), -2 * qc * c);
    add_term(rem, add(qe, qe), -qc * qc);
    root.emplace(qe, qc);
  }
  return root;
}

}  // namespace singmod::detail
