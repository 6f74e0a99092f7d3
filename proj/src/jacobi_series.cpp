#include "singmod/jacobi_series.hpp"

#include <algorithm>
#include <numeric>

namespace singmod {

JacobiSeries::JacobiSeries(int qscale, int zscale, Terms terms, std::int64_t prec)
    : qscale_(qscale), zscale_(zscale), prec_(prec) {
  if (qscale < 1 || 24 % qscale != 0) throw SeriesError("q-scale must divide 24");
  if (zscale != 1 && zscale != 2) throw SeriesError("zeta-scale must be 1 or 2");
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0 || it->first.first > prec)
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

JacobiSeries JacobiSeries::from_q(const QSeries& q, int zscale) {
  Terms t;
  for (const auto& [e, c] : q.terms()) t.emplace(Exponent{e, 0}, c);
  return JacobiSeries(q.scale(), zscale, std::move(t), q.prec());
}

std::int64_t JacobiSeries::min_q_exponent() const {
  return terms_.empty() ? prec_ + 1 : terms_.begin()->first.first;
}

Rational JacobiSeries::coeff(std::int64_t qe, std::int64_t ze) const {
  auto it = terms_.find({qe, ze});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational JacobiSeries::coeff_at(std::int64_t n, std::int64_t r) const {
  return coeff(n * qscale_, r * zscale_);
}

JacobiSeries JacobiSeries::rescaled(int qscale, int zscale) const {
  if (qscale % qscale_ != 0 || zscale % zscale_ != 0)
    throw SeriesError("rescale must refine the exponent units");
  const std::int64_t fq = qscale / qscale_;
  const std::int64_t fz = zscale / zscale_;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e.first * fq, e.second * fz}, c);
  return JacobiSeries(qscale, zscale, std::move(t), prec_ * fq);
}

JacobiSeries JacobiSeries::reduced() const {
  std::int64_t gq = qscale_;
  std::int64_t gz = zscale_;
  for (const auto& [e, c] : terms_) {
    gq = std::gcd(gq, e.first);
    gz = std::gcd(gz, e.second);
  }
  if (gq == 1 && gz == 1) return *this;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e.first / gq, e.second / gz}, c);
  // Floor keeps the precision claim sound when prec is not a multiple of gq.
  const std::int64_t p = prec_ >= 0 ? prec_ / gq : -((-prec_ + gq - 1) / gq);
  return JacobiSeries(static_cast<int>(qscale_ / gq), static_cast<int>(zscale_ / gz), std::move(t), p);
}

JacobiSeries JacobiSeries::truncated(std::int64_t prec) const {
  return JacobiSeries(qscale_, zscale_, terms_, std::min(prec, prec_));
}

QSeries JacobiSeries::at_zeta_one() const {
  QSeries::Terms t;
  for (const auto& [e, c] : terms_) t[e.first] += c;
  return QSeries(qscale_, std::move(t), prec_);
}

std::map<std::int64_t, Rational> JacobiSeries::layer(std::int64_t qe) const {
  std::map<std::int64_t, Rational> out;
  for (auto it = terms_.lower_bound({qe, INT64_MIN}); it != terms_.end() && it->first.first == qe; ++it)
    out.emplace(it->first.second, it->second);
  return out;
}

JacobiSeries JacobiSeries::operator-() const {
  JacobiSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

JacobiSeries& JacobiSeries::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

namespace {

std::pair<JacobiSeries, JacobiSeries> unify(const JacobiSeries& a, const JacobiSeries& b) {
  const int qs = std::lcm(a.qscale(), b.qscale());
  const int zs = std::lcm(a.zscale(), b.zscale());
  return {a.rescaled(qs, zs), b.rescaled(qs, zs)};
}

}  // namespace

JacobiSeries operator+(const JacobiSeries& a0, const JacobiSeries& b0) {
  auto [a, b] = unify(a0, b0);
  JacobiSeries::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return JacobiSeries(a.qscale_, a.zscale_, std::move(t), std::min(a.prec_, b.prec_));
}

JacobiSeries multiply(const JacobiSeries& a0, const JacobiSeries& b0) {
  auto [a, b] = unify(a0, b0);
  const std::int64_t prec = std::min(a.prec() + b.min_q_exponent(), b.prec() + a.min_q_exponent());
  JacobiSeries::Terms t;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.first + b.min_q_exponent() > prec) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.first + eb.first > prec) break;
      t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
  }
  return JacobiSeries(a.qscale(), a.zscale(), std::move(t), prec);
}

JacobiSeries multiply(const JacobiSeries& a, const QSeries& b) {
  return multiply(a, JacobiSeries::from_q(b, a.zscale()));
}

JacobiSeries divide_exact(const JacobiSeries& a, const QSeries& b) { return multiply(a, inverse(b)); }

JacobiSeries power(const JacobiSeries& a, unsigned exponent) {
  if (exponent == 0) return JacobiSeries(a.qscale(), a.zscale(), {{{0, 0}, Rational(1)}}, a.prec());
  JacobiSeries result = a;
  for (unsigned i = 1; i < exponent; ++i) result = multiply(result, a);
  return result;
}

}  // namespace singmod
