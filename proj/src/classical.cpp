#include "singmod/classical.hpp"

#include <cstdlib>
#include <utility>

namespace singmod {

namespace {

// prod_{m >= 1} (1 - q^m) through q^prec by the pentagonal number theorem.
QSeries euler_product(std::int64_t prec) {
  QSeries::Terms t;
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t e1 = j * (3 * j - 1) / 2;
    const std::int64_t e2 = j * (3 * j + 1) / 2;
    if (e1 > prec) break;
    const int sign = j % 2 == 0 ? 1 : -1;
    t[e1] += sign;
    if (j > 0 && e2 <= prec) t[e2] += sign;
  }
  return QSeries(1, std::move(t), prec);
}

JacobiSeries half_theta(std::int64_t prec, bool alternating) {
  JacobiSeries::Terms t;
  for (std::int64_t j = 0; (2 * j + 1) * (2 * j + 1) <= 8 * prec; ++j) {
    for (const std::int64_t i : {j, -1 - j}) {
      const std::int64_t odd = 2 * i + 1;
      const int sign = alternating && i % 2 != 0 ? -1 : 1;
      t[{odd * odd, odd}] = sign;
    }
  }
  return JacobiSeries(8, 2, std::move(t), 8 * prec);
}

JacobiSeries integral_theta(std::int64_t prec, bool alternating) {
  JacobiSeries::Terms t;
  for (std::int64_t j = 0; j * j <= 2 * prec; ++j) {
    const int sign = alternating && j % 2 != 0 ? -1 : 1;
    t[{j * j, j}] = sign;
    if (j > 0) t[{j * j, -j}] = sign;
  }
  return JacobiSeries(2, 1, std::move(t), 2 * prec);
}

JacobiSeries squared_ratio(const JacobiSeries& theta) {
  const JacobiSeries sq = theta * theta;
  const QSeries at_one = theta.at_zeta_one();
  return divide_exact(sq, at_one * at_one);
}

// Cuts to whole powers q^{<= prec} and drops to the smallest exponent units.
JacobiSeries finish(const JacobiSeries& s, std::int64_t prec) {
  if (s.prec() < prec * s.qscale()) throw SeriesError("weak Jacobi generator lost precision");
  return s.truncated(prec * s.qscale()).reduced();
}

}  // namespace

QSeries eta_power(unsigned k, std::int64_t prec) {
  const QSeries p = power(euler_product(prec), k);
  QSeries::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(24 * e + k, c);
  return QSeries(24, std::move(t), 24 * prec + k);
}

QSeries eisenstein_q(int k, std::int64_t prec) {
  if (k != 4 && k != 6) throw SeriesError("eisenstein_q supports k = 4 and k = 6");
  const Rational factor = -2 * k / bernoulli(k);
  QSeries::Terms t;
  t[0] = 1;
  for (std::int64_t m = 1; m <= prec; ++m) t[m] = factor * divisor_power_sum(k - 1, m);
  return QSeries(1, std::move(t), prec);
}

JacobiSeries theta_odd(std::int64_t prec) { return half_theta(prec, true); }
JacobiSeries theta2(std::int64_t prec) { return half_theta(prec, false); }
JacobiSeries theta3(std::int64_t prec) { return integral_theta(prec, false); }
JacobiSeries theta4(std::int64_t prec) { return integral_theta(prec, true); }

WeakJacobiGenerators weak_jacobi_generators(std::int64_t prec) {
  if (prec < 0) throw SeriesError("weak_jacobi_generators: negative precision");
  const std::int64_t work = prec + 1;
  const JacobiSeries to = theta_odd(work);
  const JacobiSeries phi_m2 = divide_exact(to * to, eta_power(6, work));
  const JacobiSeries phi_0 =
      Rational(4) * (squared_ratio(theta2(work)) + squared_ratio(theta3(work)) + squared_ratio(theta4(work)));
  WeakJacobiGenerators g{finish(phi_m2, prec), finish(phi_0, prec)};
  for (const JacobiSeries* s : {&g.phi_m2, &g.phi_0}) {
    if (s->qscale() != 1 || s->zscale() != 1) throw SeriesError("weak Jacobi generator has fractional exponents");
    for (const auto& [e, c] : s->terms())
      if (!is_integral(c)) throw SeriesError("weak Jacobi generator has non-integral coefficients");
  }
  return g;
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  if (a.size() != n) throw ArithmeticError("solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ArithmeticError("solve_linear: singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

JacobiForm jacobi_index1(int weight, JacobiKind kind, std::int64_t prec) {
  const bool eis = kind == JacobiKind::eisenstein;
  if (!((eis && (weight == 4 || weight == 6)) || (!eis && (weight == 10 || weight == 12))))
    throw SeriesError("jacobi_index1: unsupported (weight, kind)");

  const auto gen = weak_jacobi_generators(prec);
  const QSeries e4 = eisenstein_q(4, prec);
  const QSeries e6 = eisenstein_q(6, prec);
  std::vector<JacobiSeries> basis;
  switch (weight) {
    case 4:
      basis = {gen.phi_0 * e4, gen.phi_m2 * e6};
      break;
    case 6:
      basis = {gen.phi_0 * e6, gen.phi_m2 * (e4 * e4)};
      break;
    case 10:
      basis = {gen.phi_0 * (e4 * e6), gen.phi_m2 * power(e4, 3), gen.phi_m2 * (e6 * e6)};
      break;
    default:
      basis = {gen.phi_0 * power(e4, 3), gen.phi_0 * (e6 * e6), gen.phi_m2 * (e4 * e4 * e6)};
      break;
  }

  // Rows: c(0,1) = 0, c(0,0) = 1 (Eisenstein) or c(0,1) = 0, c(0,0) = 0,
  // c(1,1) = 1 (cusp).
  std::vector<std::pair<std::int64_t, std::int64_t>> at = {{0, 1}, {0, 0}};
  std::vector<Rational> rhs = {0, eis ? 1 : 0};
  if (!eis) {
    at.emplace_back(1, 1);
    rhs.emplace_back(1);
  }
  std::vector<std::vector<Rational>> a(at.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = basis[j].coeff_at(at[i].first, at[i].second);
  const auto x = solve_linear(std::move(a), std::move(rhs));

  JacobiSeries combo = x[0] * basis[0];
  for (std::size_t j = 1; j < basis.size(); ++j) combo = combo + x[j] * basis[j];

  for (const auto& [e, c] : combo.terms()) {
    if (4 * e.first < e.second * e.second) throw SeriesError("jacobi_index1: result is not holomorphic");
    if (combo.coeff(e.first, -e.second) != c) throw SeriesError("jacobi_index1: result is not even in r");
  }
  return JacobiForm{weight, 1, kind, std::move(combo), prec};
}

}  // namespace singmod
