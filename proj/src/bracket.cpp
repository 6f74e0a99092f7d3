#include "singmod/bracket.hpp"

#include <cstdlib>
#include <stdexcept>

#include "singmod/kernels/scan.hpp"

namespace singmod {

OrthoSeries laplace(const OrthoSeries& f) {
  const std::size_t count = f.size();
  std::vector<std::int32_t> n, r, m;
  n.reserve(count);
  r.reserve(count);
  m.reserve(count);
  bool in_range = true;
  for (const auto& [k, c] : f.terms()) {
    in_range = in_range && std::abs(k.N) <= kernels::kMaxIndex && std::abs(k.R) <= kernels::kMaxIndex &&
               std::abs(k.M) <= kernels::kMaxIndex;
    n.push_back(k.N);
    r.push_back(k.R);
    m.push_back(k.M);
  }
  std::vector<std::int32_t> disc(count);
  if (in_range) kernels::disc_invariants(n, r, m, disc);

  OrthoSeries::Terms out;
  std::size_t i = 0;
  for (const auto& [k, c] : f.terms()) {
    const std::int64_t d = in_range ? disc[i] : k.disc();
    ++i;
    if (d != 0) out.emplace_hint(out.end(), k, c * Rational(Integer(static_cast<long>(-d))));
  }
  return OrthoSeries(std::move(out), f.prec());
}

BracketCoefficients bracket_coefficients(const Rational& n, const Rational& k, const Rational& l) {
  const Rational base = n / 2 - 1;
  return {n, k, l, base - k, base - l, base - k - l};
}

OrthoSeries bracket(const OrthoSeries& f, const Rational& k, const OrthoSeries& g, const Rational& l,
                    const Rational& n) {
  const auto bc = bracket_coefficients(n, k, l);
  const OrthoSeries t1 = laplace(f * g);
  const OrthoSeries t2 = laplace(f) * g;
  const OrthoSeries t3 = f * laplace(g);
  return Rational(bc.A * bc.B) * t1 - Rational(bc.B * bc.C) * t2 - Rational(bc.A * bc.C) * t3;
}

OrthoSeries nary_bracket(const std::vector<std::pair<OrthoSeries, Rational>>& forms, const Rational& n) {
  if (forms.size() < 2) throw std::invalid_argument("nary_bracket: needs at least two forms");
  const Rational base = n / 2 - 1;

  auto product_except = [&](std::size_t skip) {
    OrthoSeries p;
    bool first = true;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (i == skip) continue;
      p = first ? forms[i].first : p * forms[i].first;
      first = false;
    }
    return p;
  };
  auto scalar_except = [&](std::size_t skip) {
    Rational s = 1;
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (i != skip) s *= base - forms[i].second;
    return s;
  };

  Rational weight_sum = 0;
  for (const auto& f : forms) weight_sum += f.second;

  OrthoSeries out = scalar_except(forms.size()) * laplace(product_except(forms.size()));
  const Rational outer = base - weight_sum;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const OrthoSeries term = forms[j].first * laplace(product_except(j));
    out = out - Rational(outer * scalar_except(j)) * term;
  }
  return out;
}

}  // namespace singmod
