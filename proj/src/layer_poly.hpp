#pragma once

// One graded layer (fixed N + M) of an OrthoSeries, viewed as a Laurent
// polynomial in two exponents (N, R). Used by sqrt and divide_exact.

#include <cstdint>
#include <map>
#include <utility>

#include "singmod/ortho_series.hpp"

namespace singmod::detail {

using Exponent = std::pair<std::int32_t, std::int32_t>;  // (N, R), lexicographic
using Layer = std::map<Exponent, Rational>;
using Layers = std::map<std::int64_t, Layer>;

Layers split_layers(const OrthoSeries& f);
/// Places layer at total order `order` (M = order - N).
void insert_layer(OrthoSeries::Terms& terms, std::int64_t order, const Layer& layer);

Layer layer_mul(const Layer& a, const Layer& b);
void layer_axpy(Layer& acc, const Rational& c, const Layer& x);  // acc += c * x

/// Exact quotient num / den; throws SeriesError if den does not divide num.
Layer layer_divide_exact(const Layer& num, const Layer& den);
/// Exact square root with positive leading (lex-greatest) coefficient.
Layer layer_sqrt(const Layer& a);

}  // namespace singmod::detail
