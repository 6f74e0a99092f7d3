#include <doctest.h>

#include "singmod/acceptance.hpp"
#include "singmod/bracket.hpp"
#include "singmod/igusa.hpp"

using namespace singmod;

namespace {

OrthoSeries mono(int N, int R, int M, long c, int prec) {
  return OrthoSeries::monomial(IndexKey{N, R, M}, Rational(c), prec);
}

const IgusaTower& tower() {
  static const IgusaTower t = build_tower(8);
  return t;
}

}  // namespace

TEST_CASE("laplace multiplier") {
  CHECK(laplace(mono(2, 2, 2, 1, 3)).coeff(IndexKey{2, 2, 2}) == -12);
  CHECK(laplace(mono(2, 4, 2, 1, 3)).is_zero());
  // A series supported on D = 0 is annihilated.
  const OrthoSeries singular = mono(0, 0, 0, 1, 4) + mono(2, 4, 2, 3, 4) + mono(2, 0, 0, 5, 4) + mono(4, 8, 4, 1, 4);
  CHECK(laplace(singular).is_zero());
  // Falls back to exact arithmetic beyond the kernel index range.
  const OrthoSeries big = mono(40000, 2, 2, 1, 30000);
  CHECK(laplace(big).coeff(IndexKey{40000, 2, 2}) == -(4 * 40000 * 2 - 4));
}

TEST_CASE("bracket coefficients") {
  const auto a = bracket_coefficients(3, 5, 30);
  CHECK(a.A == make_rational(-9, 2));
  CHECK(a.B == make_rational(-59, 2));
  CHECK(a.C == make_rational(-69, 2));
  const auto b = bracket_coefficients(13, 142, 1);
  CHECK(b.A == make_rational(-273, 2));
  CHECK(b.B == make_rational(9, 2));
  CHECK(b.C == make_rational(-275, 2));
  CHECK(b.A * b.B == make_rational(-273 * 9, 4));
  CHECK(-(b.B * b.C) == make_rational(275 * 9, 4));
  CHECK(b.A * b.C == make_rational(275 * 273, 4));
  const auto c = bracket_coefficients(8, 120, 4);
  CHECK(c.A == -117);
  CHECK(c.B == -1);
  CHECK(c.C == -121);
}

TEST_CASE("trivial brackets") {
  const OrthoSeries f = mono(2, 2, 2, 1, 4) + mono(2, 0, 4, 3, 4);
  CHECK(bracket(f, 7, OrthoSeries(4), 3, 5).is_zero());
  const OrthoSeries one = OrthoSeries::constant(1, 4);
  CHECK(bracket(one, 0, one, 0, 6).is_zero());
  CHECK(nary_bracket({{one, Rational(0)}, {one, Rational(0)}, {one, Rational(0)}}, 6).is_zero());
  CHECK_THROWS_AS(nary_bracket({{f, Rational(1)}}, 3), std::invalid_argument);
}

TEST_CASE("bracket is symmetric in its two slots") {
  SeriesSampler s(8);
  for (int i = 0; i < 50; ++i) {
    const OrthoSeries f = s.series(s.parity(), 3), g = s.series(s.parity(), 3);
    CHECK(bracket(f, 5, g, 11, 7) == bracket(g, 11, f, 5, 7));
  }
}

TEST_CASE("bracket of psi5 and phi30 vanishes") {
  const OrthoSeries br = bracket(tower().psi5.series, 5, tower().phi30.series, 30, 3);
  CHECK(br.is_zero());
  CHECK(br.prec() >= 8);
  // A wrong weight breaks the identity.
  CHECK_FALSE(bracket(tower().psi5.series, 5, tower().phi30.series, 29, 3).is_zero());
}

TEST_CASE("the n-ary formula differs from the binary bracket for two forms") {
  const OrthoSeries& f = tower().psi5.series;
  const OrthoSeries& g = tower().phi30.series;
  const OrthoSeries nary = nary_bracket({{f, Rational(5)}, {g, Rational(30)}}, 3);
  const auto bc = bracket_coefficients(3, 5, 30);
  // Expanded, it reads AB lap(FG) - BC F lap(G) - AC G lap(F).
  const OrthoSeries expected = Rational(bc.A * bc.B) * laplace(f * g) - Rational(bc.B * bc.C) * (f * laplace(g)) -
                               Rational(bc.A * bc.C) * (g * laplace(f));
  CHECK(nary == expected);
  CHECK_FALSE(nary.is_zero());
}
