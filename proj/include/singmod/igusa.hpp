#pragma once

// Degree-two Siegel modular forms for the full modular group as OrthoSeries:
// Maass lifts of index-one Jacobi forms, the Igusa generators, the square
// root of chi10, the weight-35 cusp form and its quotient by that root.

#include <string>

#include "singmod/classical.hpp"
#include "singmod/ortho_series.hpp"

namespace singmod {

enum class FormParity { integral, half_integral };

struct SiegelForm {
  std::string name;  // e4, e6, chi10, chi12, psi5, phi35, phi30
  int weight = 0;
  OrthoSeries series;
  FormParity parity = FormParity::integral;
  /// Content divided out when the form was normalized (1 when none was).
  Rational content = 1;
};

/// Coefficient at (n, r, m) is sum_{d | gcd(n, r, m)} d^{k-1} c(nm/d^2, r/d);
/// the constant term is -B_k/(2k) c(0, 0). Needs phi.prec >= floor(prec^2/4).
OrthoSeries maass_lift(const JacobiForm& phi, int prec);

struct IgusaGenerators {
  SiegelForm e4;     // constant term 1
  SiegelForm e6;     // constant term 1
  SiegelForm chi10;  // a(1, 1, 1) = 1 in (n, r, m) units
  SiegelForm chi12;  // a(1, 1, 1) = 1
};

/// Requires prec >= 4.
IgusaGenerators igusa_generators(int prec);

/// Content-normalized Jacobian determinant of (E4, E6, chi10, chi12) with rows
/// (k F, D_tau F, D_z F, D_omega F).
SiegelForm jacobian_form(const IgusaGenerators& g);

struct IgusaTower {
  int prec = 0;
  IgusaGenerators generators;
  SiegelForm psi5;
  SiegelForm phi35;
  SiegelForm phi30;

  /// All seven forms in build order.
  std::vector<const SiegelForm*> forms() const;
  /// Looks a form up by id; throws std::out_of_range for unknown ids.
  const SiegelForm& form(const std::string& id) const;
};

/// Builds every form at prec >= 4. Internally works at max(prec, 6) plus
/// guard layers so that each output is exact through prec; results for a
/// smaller prec are prefixes of those for a larger one.
IgusaTower build_tower(int prec);

SiegelForm psi5(int prec);   // prec >= 4
SiegelForm phi35(int prec);  // prec >= 6
SiegelForm phi30(int prec);  // prec >= 6

}  // namespace singmod
