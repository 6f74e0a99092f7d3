#pragma once

// One-variable and Jacobi building blocks: eta, theta series, Eisenstein
// series, the weak Jacobi generators and index-one Jacobi forms.
//
// Precision arguments here count whole powers of q: a result built with
// `prec` is exact for every q-exponent <= prec.

#include <cstdint>
#include <vector>

#include "singmod/jacobi_series.hpp"
#include "singmod/qseries.hpp"

namespace singmod {

/// eta^k = q^{k/24} prod (1 - q^m)^k, exponent unit 1/24.
QSeries eta_power(unsigned k, std::int64_t prec);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(m) q^m for k in {4, 6}.
QSeries eisenstein_q(int k, std::int64_t prec);

/// Odd Jacobi theta: sum (-1)^j q^{(2j+1)^2/8} zeta^{(2j+1)/2}.
JacobiSeries theta_odd(std::int64_t prec);
/// sum q^{(2j+1)^2/8} zeta^{(2j+1)/2}.
JacobiSeries theta2(std::int64_t prec);
/// sum q^{j^2/2} zeta^j.
JacobiSeries theta3(std::int64_t prec);
/// sum (-1)^j q^{j^2/2} zeta^j.
JacobiSeries theta4(std::int64_t prec);

struct WeakJacobiGenerators {
  JacobiSeries phi_m2;  // weight -2, index 1
  JacobiSeries phi_0;   // weight 0, index 1
};

/// phi_{-2,1} = theta_odd^2 / eta^6 and
/// phi_{0,1} = 4 sum_i theta_i(z)^2 / theta_i(0)^2, both with integral
/// exponents after reduction.
WeakJacobiGenerators weak_jacobi_generators(std::int64_t prec);

enum class JacobiKind { eisenstein, cusp };

struct JacobiForm {
  int weight = 0;
  int index = 1;
  JacobiKind kind = JacobiKind::eisenstein;
  JacobiSeries series;  // qscale = zscale = 1
  std::int64_t prec = 0;

  Rational c(std::int64_t n, std::int64_t r) const { return series.coeff_at(n, r); }
};

/// The index-one form of the given weight, solved for inside
/// phi_{0,1} M_w + phi_{-2,1} M_{w+2}. Supported: (4, eisenstein),
/// (6, eisenstein), (10, cusp), (12, cusp).
JacobiForm jacobi_index1(int weight, JacobiKind kind, std::int64_t prec);

/// Solves the square system A x = b exactly. Throws ArithmeticError when A is
/// singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace singmod
