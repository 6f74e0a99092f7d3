#pragma once

// Two-variable exact Laurent series in (q^{1/qscale}, zeta^{1/zscale}).

#include <cstdint>
#include <map>
#include <utility>

#include "singmod/qseries.hpp"

namespace singmod {

class JacobiSeries {
 public:
  using Exponent = std::pair<std::int64_t, std::int64_t>;  // scaled (q, zeta)
  using Terms = std::map<Exponent, Rational>;

  JacobiSeries() = default;
  /// prec bounds the scaled q-exponent; zscale must be 1 or 2.
  JacobiSeries(int qscale, int zscale, Terms terms, std::int64_t prec);
  static JacobiSeries from_q(const QSeries& q, int zscale = 1);

  int qscale() const { return qscale_; }
  int zscale() const { return zscale_; }
  std::int64_t prec() const { return prec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t min_q_exponent() const;
  Rational coeff(std::int64_t q_exponent, std::int64_t z_exponent) const;
  /// Coefficient of q^n zeta^r for integral n, r in full units.
  Rational coeff_at(std::int64_t n, std::int64_t r) const;

  JacobiSeries rescaled(int qscale, int zscale) const;
  /// Smallest scales representing the same support exactly.
  JacobiSeries reduced() const;
  JacobiSeries truncated(std::int64_t prec) const;
  /// zeta -> 1.
  QSeries at_zeta_one() const;
  /// Terms with scaled q-exponent e, as zeta-exponent -> coefficient.
  std::map<std::int64_t, Rational> layer(std::int64_t q_exponent) const;

  JacobiSeries operator-() const;
  JacobiSeries& operator*=(const Rational& c);
  friend JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b) { return a + (-b); }
  friend JacobiSeries operator*(const Rational& c, JacobiSeries a) { return a *= c; }
  friend bool operator==(const JacobiSeries& a, const JacobiSeries& b) {
    return a.qscale_ == b.qscale_ && a.zscale_ == b.zscale_ && a.prec_ == b.prec_ &&
           a.terms_ == b.terms_;
  }

 private:
  int qscale_ = 1;
  int zscale_ = 1;
  Terms terms_;
  std::int64_t prec_ = 0;
};

JacobiSeries multiply(const JacobiSeries& a, const JacobiSeries& b);
JacobiSeries multiply(const JacobiSeries& a, const QSeries& b);
inline JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b) { return multiply(a, b); }
inline JacobiSeries operator*(const JacobiSeries& a, const QSeries& b) { return multiply(a, b); }
inline JacobiSeries operator*(const QSeries& b, const JacobiSeries& a) { return multiply(a, b); }
JacobiSeries divide_exact(const JacobiSeries& a, const QSeries& b);
JacobiSeries power(const JacobiSeries& a, unsigned exponent);

}  // namespace singmod
