#pragma once

// One-variable exact Laurent series in q^{1/scale}.

#include <cstdint>
#include <map>

#include "singmod/exact.hpp"
#include "singmod/ortho_series.hpp"

namespace singmod {

class QSeries {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  QSeries() = default;
  /// Exponents are in units 1/scale (scale | 24); coefficients are exact for
  /// every scaled exponent <= prec.
  QSeries(int scale, Terms terms, std::int64_t prec);
  static QSeries one(int scale, std::int64_t prec);

  int scale() const { return scale_; }
  std::int64_t prec() const { return prec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Smallest scaled exponent in the support, or prec + 1 when zero.
  std::int64_t min_exponent() const;
  Rational coeff(std::int64_t scaled_exponent) const;

  QSeries rescaled(int new_scale) const;
  QSeries truncated(std::int64_t prec) const;

  QSeries operator-() const;
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.scale_ == b.scale_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }

 private:
  int scale_ = 1;
  Terms terms_;
  std::int64_t prec_ = 0;
};

QSeries multiply(const QSeries& a, const QSeries& b);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }
/// Series inverse; the leading term must be a monomial with nonzero coefficient.
QSeries inverse(const QSeries& a);
QSeries divide_exact(const QSeries& a, const QSeries& b);
QSeries power(const QSeries& a, unsigned exponent);

int common_scale(int a, int b);

}  // namespace singmod
