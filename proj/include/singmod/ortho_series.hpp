#pragma once

// Sparse exact Fourier series on the Siegel tube domain.
//
// A term q^n zeta^r xi^m is stored under the doubled key (N, R, M) =
// (2n, 2r, 2m), so both integral and half-integral supports are integer
// indexed and the disc invariant D = 4NM - R^2 = 16 det T is an integer.
//
// A series carries a precision P: it is a truth claim about every index with
// N + M <= 2P. Terms beyond that bound are never stored.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "singmod/exact.hpp"

namespace singmod {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IndexKey {
  std::int32_t N = 0;
  std::int32_t R = 0;
  std::int32_t M = 0;

  constexpr std::int64_t order() const { return std::int64_t{N} + M; }
  constexpr std::int64_t disc() const { return 4 * std::int64_t{N} * M - std::int64_t{R} * R; }

  friend constexpr bool operator==(IndexKey, IndexKey) = default;
  /// Canonical order: (N + M, N, R). This is also the file order.
  friend constexpr std::strong_ordering operator<=>(IndexKey a, IndexKey b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.N <=> b.N; c != 0) return c;
    return a.R <=> b.R;
  }
  friend constexpr IndexKey operator+(IndexKey a, IndexKey b) {
    return {a.N + b.N, a.R + b.R, a.M + b.M};
  }
};

struct IndexKeyHash {
  std::size_t operator()(IndexKey k) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(k.N);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(k.R);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(k.M);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// (N mod 2, R mod 2, M mod 2).
using ParityClass = std::array<int, 3>;

class OrthoSeries {
 public:
  using Terms = std::map<IndexKey, Rational>;

  OrthoSeries() = default;
  explicit OrthoSeries(int prec) : prec_(prec) {}
  /// Drops zero coefficients and anything beyond the precision bound.
  /// Throws SeriesError when the support mixes parity classes.
  OrthoSeries(Terms terms, int prec);

  static OrthoSeries constant(const Rational& c, int prec);
  static OrthoSeries monomial(IndexKey key, const Rational& c, int prec);

  int prec() const { return prec_; }
  std::int64_t order_bound() const { return 2 * std::int64_t{prec_}; }
  /// Smallest N + M in the support; for a series that vanishes within its
  /// precision this is the first order not covered, 2P + 1.
  std::int64_t min_order() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(IndexKey key) const;
  std::optional<ParityClass> parity() const;

  OrthoSeries truncated(int prec) const;
  /// Coefficient-exact agreement on every index with N + M <= 2*prec.
  bool agrees_with(const OrthoSeries& other, int prec) const;

  OrthoSeries operator-() const;
  OrthoSeries& operator*=(const Rational& c);
  friend OrthoSeries operator+(const OrthoSeries& a, const OrthoSeries& b);
  friend OrthoSeries operator-(const OrthoSeries& a, const OrthoSeries& b);
  friend OrthoSeries operator*(const Rational& c, OrthoSeries a) { return a *= c; }
  friend bool operator==(const OrthoSeries& a, const OrthoSeries& b) {
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }

  /// Returns a copy with every coefficient multiplied by f(key).
  OrthoSeries scaled_by(const std::function<Rational(IndexKey)>& f) const;

 private:
  Terms terms_;
  int prec_ = 0;
};

/// Exact convolution; result precision
/// min(P_F + floor(min_order_G / 2), P_G + floor(min_order_F / 2)).
OrthoSeries multiply(const OrthoSeries& f, const OrthoSeries& g);
inline OrthoSeries operator*(const OrthoSeries& f, const OrthoSeries& g) { return multiply(f, g); }

/// Square root by layer-graded Hensel recursion on N + M. The sign makes the
/// start term (the (N, R)-lexicographically greatest term of the lowest
/// layer) positive.
OrthoSeries sqrt(const OrthoSeries& f);

/// Q with Q * G = F. Throws SeriesError on any inexact layer division.
OrthoSeries divide_exact(const OrthoSeries& f, const OrthoSeries& g);

enum class Axis { tau, z, omega };
/// Formal (2 pi i)^{-1} d/d(axis): coefficient times N/2, R/2 or M/2.
OrthoSeries derivative(const OrthoSeries& f, Axis axis);

/// z = 0: entry (N, M) is the sum over R of the coefficients.
std::map<std::pair<std::int32_t, std::int32_t>, Rational> restrict_diagonal(const OrthoSeries& f);

/// (N, R, M) -> (M, R, N).
OrthoSeries swap(const OrthoSeries& f);
/// (N, R, M) -> (N, -R, M).
OrthoSeries negate_r(const OrthoSeries& f);

/// (F / c, c): c is gcd(numerators) / lcm(denominators), signed so that the
/// first term in canonical order of F / c is positive.
std::pair<OrthoSeries, Rational> content_normalize(const OrthoSeries& f);

/// True when every coefficient is an integer.
bool has_integer_coefficients(const OrthoSeries& f);

}  // namespace singmod
