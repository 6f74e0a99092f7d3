#include "singmod/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace singmod {

namespace {

void check_scale(int scale) {
  if (scale < 1 || 24 % scale != 0) throw SeriesError("q-scale must divide 24");
}

}  // namespace

int common_scale(int a, int b) { return std::lcm(a, b); }

QSeries::QSeries(int scale, Terms terms, std::int64_t prec) : scale_(scale), prec_(prec) {
  check_scale(scale);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0 || it->first > prec)
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

QSeries QSeries::one(int scale, std::int64_t prec) { return QSeries(scale, {{0, Rational(1)}}, prec); }

std::int64_t QSeries::min_exponent() const {
  return terms_.empty() ? prec_ + 1 : terms_.begin()->first;
}

Rational QSeries::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

QSeries QSeries::rescaled(int new_scale) const {
  if (new_scale % scale_ != 0) throw SeriesError("rescale must refine the exponent unit");
  const std::int64_t f = new_scale / scale_;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e * f, c);
  return QSeries(new_scale, std::move(t), prec_ * f);
}

QSeries QSeries::truncated(std::int64_t prec) const {
  return QSeries(scale_, terms_, std::min(prec, prec_));
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QSeries operator+(const QSeries& a0, const QSeries& b0) {
  const int s = common_scale(a0.scale_, b0.scale_);
  const QSeries a = a0.rescaled(s);
  const QSeries b = b0.rescaled(s);
  QSeries::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return QSeries(s, std::move(t), std::min(a.prec_, b.prec_));
}

QSeries multiply(const QSeries& a0, const QSeries& b0) {
  const int s = common_scale(a0.scale(), b0.scale());
  const QSeries a = a0.rescaled(s);
  const QSeries b = b0.rescaled(s);
  const std::int64_t prec = std::min(a.prec() + b.min_exponent(), b.prec() + a.min_exponent());
  QSeries::Terms t;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      if (ea + eb > prec) break;
      t[ea + eb] += ca * cb;
    }
  }
  return QSeries(s, std::move(t), prec);
}

QSeries inverse(const QSeries& a) {
  if (a.is_zero()) throw SeriesError("inverse of a series that vanishes within precision");
  const std::int64_t e0 = a.min_exponent();
  const Rational c0 = a.coeff(e0);
  const std::int64_t rel = a.prec() - e0;  // relative precision of the unit part
  std::vector<Rational> unit(static_cast<std::size_t>(rel + 1));
  for (const auto& [e, c] : a.terms()) unit[static_cast<std::size_t>(e - e0)] = c;

  std::vector<Rational> inv(unit.size());
  inv[0] = 1 / c0;
  for (std::int64_t n = 1; n <= rel; ++n) {
    Rational acc = 0;
    for (std::int64_t i = 1; i <= n; ++i)
      if (unit[i] != 0) acc += unit[i] * inv[n - i];
    inv[n] = -acc / c0;
  }
  QSeries::Terms t;
  for (std::int64_t n = 0; n <= rel; ++n)
    if (inv[n] != 0) t.emplace(n - e0, inv[n]);
  return QSeries(a.scale(), std::move(t), rel - e0);
}

QSeries divide_exact(const QSeries& a, const QSeries& b) { return multiply(a, inverse(b)); }

QSeries power(const QSeries& a, unsigned exponent) {
  QSeries result;
  QSeries base = a;
  bool first = true;
  while (exponent) {
    if (exponent & 1u) {
      result = first ? base : multiply(result, base);
      first = false;
    }
    exponent >>= 1;
    if (exponent) base = multiply(base, base);
  }
  if (first) return QSeries::one(a.scale(), a.prec());
  return result;
}

}  // namespace singmod
