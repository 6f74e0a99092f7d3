#include <doctest.h>

#include <random>

#include "singmod/acceptance.hpp"
#include "singmod/jacobi_series.hpp"
#include "singmod/ortho_series.hpp"
#include "singmod/qseries.hpp"

using namespace singmod;

namespace {

OrthoSeries mono(int N, int R, int M, long c, int prec) {
  return OrthoSeries::monomial(IndexKey{N, R, M}, Rational(c), prec);
}

// Independent convolution oracle: plain loops over every index pair.
OrthoSeries::Terms brute_product(const OrthoSeries& a, const OrthoSeries& b) {
  OrthoSeries::Terms out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      IndexKey k{ka.N + kb.N, ka.R + kb.R, ka.M + kb.M};
      out[k] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("index keys") {
  const IndexKey k{4, -2, 6};
  CHECK(k.order() == 10);
  CHECK(k.disc() == 92);
  CHECK(IndexKey{1, 2, 1}.disc() == 0);
  CHECK(IndexKey{2, 5, 1} < IndexKey{1, 0, 3});
  CHECK(IndexKey{0, 0, 4} < IndexKey{1, -3, 3});
  CHECK(IndexKey{1, -3, 3} < IndexKey{1, 3, 3});
}

TEST_CASE("construction drops zeros and out-of-range terms") {
  OrthoSeries::Terms t{{IndexKey{0, 0, 0}, Rational(0)}, {IndexKey{2, 0, 2}, Rational(3)}, {IndexKey{4, 0, 4}, Rational(1)}};
  const OrthoSeries f(t, 2);
  CHECK(f.size() == 1);
  CHECK(f.coeff(IndexKey{2, 0, 2}) == 3);
  CHECK(f.min_order() == 4);
  CHECK(OrthoSeries(3).min_order() == 7);
  OrthoSeries::Terms mixed{{IndexKey{2, 0, 2}, Rational(1)}, {IndexKey{1, 1, 1}, Rational(1)}};
  CHECK_THROWS_AS(OrthoSeries(mixed, 4), SeriesError);
}

TEST_CASE("multiply") {
  const OrthoSeries a = mono(2, 2, 2, 1, 4);
  const OrthoSeries b = mono(2, -2, 2, 1, 4);
  const OrthoSeries ab = a * b;
  CHECK(ab.coeff(IndexKey{4, 0, 4}) == 1);
  CHECK(ab.size() == 1);
  // min(4 + 2, 4 + 2)
  CHECK(ab.prec() == 6);

  const OrthoSeries one = OrthoSeries::constant(1, 4);
  const OrthoSeries f = mono(2, 2, 2, 3, 4) + mono(0, 0, 4, -2, 4);
  CHECK(f * one == f);
  CHECK((f * one).prec() == 4);
  CHECK((f * OrthoSeries(4)).is_zero());
}

TEST_CASE("sqrt") {
  const OrthoSeries sq = mono(4, 4, 4, 1, 6);
  const OrthoSeries r = sqrt(sq);
  CHECK(r.coeff(IndexKey{2, 2, 2}) == 1);
  CHECK(r.size() == 1);

  // (qzx)^{1/2} pieces with the start term made positive.
  const OrthoSeries f = mono(1, 1, 1, -1, 3) + mono(1, -1, 1, 1, 3) + mono(3, 1, 1, 2, 3);
  const OrthoSeries root = sqrt(f * f);
  CHECK(root.coeff(IndexKey{1, 1, 1}) == 1);
  CHECK(root.agrees_with(-f, root.prec()));
  CHECK_THROWS_AS(sqrt(OrthoSeries(3)), SeriesError);
  CHECK_THROWS_AS(sqrt(mono(1, 1, 0, 1, 3)), SeriesError);
  CHECK_THROWS_AS(sqrt(mono(2, 2, 2, 2, 3)), std::exception);
}

TEST_CASE("divide_exact") {
  const OrthoSeries f = mono(2, 2, 2, 1, 5) + mono(2, -2, 2, -1, 5) + mono(4, 0, 2, 7, 5);
  const OrthoSeries g = mono(0, 0, 2, 1, 5) + mono(2, 0, 2, 3, 5);
  const OrthoSeries fg = f * g;
  const OrthoSeries q = divide_exact(fg, g);
  CHECK(q.agrees_with(f, q.prec()));
  const OrthoSeries ff = divide_exact(f, f);
  CHECK(ff.coeff(IndexKey{0, 0, 0}) == 1);
  CHECK(ff.size() == 1);
  CHECK_THROWS_AS(divide_exact(f, OrthoSeries(5)), SeriesError);
  CHECK_THROWS_AS(divide_exact(mono(2, 0, 2, 1, 5), mono(2, 2, 0, 2, 5) + mono(2, 0, 0, 1, 5)), std::exception);
}

TEST_CASE("derivatives, diagonal restriction, swap") {
  CHECK(derivative(mono(2, 2, 2, 1, 3), Axis::tau).coeff(IndexKey{2, 2, 2}) == 1);
  CHECK(derivative(mono(2, 4, 2, 1, 3), Axis::z).coeff(IndexKey{2, 4, 2}) == 2);
  CHECK(derivative(OrthoSeries::constant(5, 3), Axis::omega).is_zero());

  const OrthoSeries t = mono(2, 2, 2, 1, 3) + mono(2, -2, 2, 1, 3) + mono(2, 0, 2, -2, 3);
  CHECK(restrict_diagonal(t).empty());
  const auto d = restrict_diagonal(mono(2, 2, 2, 1, 3) + mono(0, 0, 4, 5, 3));
  CHECK(d.size() == 2);
  CHECK(d.at({2, 2}) == 1);
  CHECK(d.at({0, 4}) == 5);

  CHECK(swap(mono(2, 0, 4, 1, 3)) == mono(4, 0, 2, 1, 3));
  const OrthoSeries g = mono(2, 2, 4, 3, 3) + mono(0, 0, 2, 1, 3);
  CHECK(swap(swap(g)) == g);
  CHECK(negate_r(g).coeff(IndexKey{2, -2, 4}) == 3);
}

TEST_CASE("content normalization") {
  const OrthoSeries f = mono(2, 2, 2, 6, 3) + mono(2, 0, 2, -4, 3);
  const auto [g, c] = content_normalize(f);
  CHECK(c == -2);
  CHECK(g.coeff(IndexKey{2, 0, 2}) == 2);
  CHECK(g.coeff(IndexKey{2, 2, 2}) == -3);

  const OrthoSeries h = mono(2, 0, 2, 3, 3) + mono(2, 2, 2, 5, 3);
  CHECK(content_normalize(h).second == 1);
  CHECK(content_normalize(h).first == h);

  const OrthoSeries frac = OrthoSeries::monomial(IndexKey{2, 0, 2}, make_rational(3, 4), 3) +
                           OrthoSeries::monomial(IndexKey{2, 2, 2}, make_rational(9, 2), 3);
  CHECK(content_normalize(frac).second == make_rational(3, 4));
  CHECK(has_integer_coefficients(content_normalize(frac).first));
  CHECK_THROWS_AS(content_normalize(OrthoSeries(2)), SeriesError);
}

TEST_CASE("ring laws on random sparse series") {
  SeriesSampler s(99);
  for (int i = 0; i < 400; ++i) {
    const ParityClass pa = s.parity(), pb = s.parity();
    const OrthoSeries a = s.series(pa, s.uniform(1, 4));
    const OrthoSeries b = s.series(pb, s.uniform(1, 4));
    const OrthoSeries c = s.series(pb, s.uniform(1, 4));
    REQUIRE(a * b == b * a);
    const OrthoSeries l = (a * b) * c, r = a * (b * c);
    REQUIRE(l.truncated(r.prec()) == r.truncated(l.prec()));
    const OrthoSeries d1 = a * (b + c), d2 = a * b + a * c;
    REQUIRE(d1.truncated(d2.prec()) == d2.truncated(d1.prec()));
  }
}

TEST_CASE("product precision is sound and matches a brute-force convolution") {
  SeriesSampler s(5);
  for (int i = 0; i < 400; ++i) {
    const ParityClass pa = s.parity(), pb = s.parity();
    const OrthoSeries::Terms fp = s.polynomial(pa, 4), gp = s.polynomial(pb, 4);
    const OrthoSeries full_f(fp, 4), full_g(gp, 4);
    const OrthoSeries f = full_f.truncated(s.uniform(0, 4)), g = full_g.truncated(s.uniform(0, 4));
    const OrthoSeries fg = f * g;
    const OrthoSeries::Terms truth = brute_product(full_f, full_g);
    for (const auto& [k, v] : truth)
      if (k.order() <= fg.order_bound()) REQUIRE(fg.coeff(k) == v);
    for (const auto& [k, v] : fg.terms()) REQUIRE(truth.count(k) == 1);
  }
}

TEST_CASE("sqrt and division round trips") {
  SeriesSampler s(17);
  for (int i = 0; i < 300; ++i) {
    const OrthoSeries u = s.series(s.parity(), s.uniform(1, 4), false);
    const OrthoSeries v = s.series(s.parity(), s.uniform(1, 4), false);
    const OrthoSeries uu = u * u;
    const OrthoSeries r = sqrt(uu);
    const OrthoSeries rr = r * r;
    REQUIRE(rr.agrees_with(uu, std::min(rr.prec(), uu.prec())));
    const OrthoSeries uv = u * v;
    const OrthoSeries q = divide_exact(uv, v);
    const OrthoSeries qv = q * v;
    REQUIRE(qv.agrees_with(uv, std::min(qv.prec(), uv.prec())));
    REQUIRE(q.agrees_with(u, std::min(q.prec(), u.prec())));
  }
}

TEST_CASE("derivatives commute and D is symmetric") {
  SeriesSampler s(3);
  for (int i = 0; i < 100; ++i) {
    const OrthoSeries f = s.series(s.parity(), 3);
    CHECK(derivative(derivative(f, Axis::tau), Axis::z) == derivative(derivative(f, Axis::z), Axis::tau));
    CHECK(derivative(derivative(f, Axis::omega), Axis::z) == derivative(derivative(f, Axis::z), Axis::omega));
    CHECK(swap(swap(f)) == f);
    for (const auto& [k, c] : f.terms()) {
      CHECK(k.disc() == IndexKey{k.M, k.R, k.N}.disc());
      CHECK(k.disc() == IndexKey{k.N, -k.R, k.M}.disc());
    }
  }
}

TEST_CASE("q-series arithmetic") {
  const QSeries a(1, {{0, Rational(1)}, {1, Rational(-1)}}, 6);
  const QSeries inv = inverse(a);
  for (int e = 0; e <= 6; ++e) CHECK(inv.coeff(e) == 1);
  CHECK((a * inv).coeff(0) == 1);
  CHECK(divide_exact(a * a, a) == a.truncated(6));
  CHECK(power(a, 2).coeff(1) == -2);
  CHECK(power(a, 0).coeff(0) == 1);
  CHECK(a.rescaled(2).coeff(2) == -1);
  CHECK(common_scale(8, 6) == 24);
}

TEST_CASE("jacobi series arithmetic") {
  JacobiSeries z(2, 2, {{{1, 1}, Rational(1)}, {{1, -1}, Rational(-1)}}, 9);
  CHECK(z.coeff_at(0, 0) == 0);
  const JacobiSeries sq = z * z;
  CHECK(sq.coeff(2, 2) == 1);
  CHECK(sq.coeff(2, 0) == -2);
  const JacobiSeries red = sq.reduced();
  CHECK(red.qscale() == 1);
  CHECK(red.zscale() == 1);
  CHECK(red.coeff_at(1, 0) == -2);
  CHECK(sq.at_zeta_one().is_zero());
  CHECK(power(z, 2) == sq);
}
