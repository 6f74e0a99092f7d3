#pragma once

// Holomorphic Laplace operator and the Rankin-Cohen type brackets built on it.

#include <utility>
#include <vector>

#include "singmod/exact.hpp"
#include "singmod/ortho_series.hpp"

namespace singmod {

/// Multiplies the coefficient at (N, R, M) by R^2 - 4NM, i.e. -D.
OrthoSeries laplace(const OrthoSeries& f);

struct BracketCoefficients {
  Rational n, k, l;
  Rational A;  // n/2 - 1 - k
  Rational B;  // n/2 - 1 - l
  Rational C;  // n/2 - 1 - k - l
};

BracketCoefficients bracket_coefficients(const Rational& n, const Rational& k, const Rational& l);

/// AB lap(FG) - BC lap(F) G - AC F lap(G).
OrthoSeries bracket(const OrthoSeries& f, const Rational& k, const OrthoSeries& g, const Rational& l,
                    const Rational& n);

/// prod_i a_i lap(prod_i F_i) - (n/2 - 1 - sum k_i) sum_j F_j prod_{i != j} a_i lap(prod_{i != j} F_i),
/// with a_i = n/2 - 1 - k_i. Needs at least two forms.
OrthoSeries nary_bracket(const std::vector<std::pair<OrthoSeries, Rational>>& forms, const Rational& n);

}  // namespace singmod
