#include <doctest.h>

#include "singmod/classical.hpp"
#include "singmod/igusa.hpp"

using namespace singmod;

namespace {

const IgusaTower& tower8() {
  static const IgusaTower t = build_tower(8);
  return t;
}

// (n, r, m) in whole units.
Rational a(const SiegelForm& f, int n, int r, int m) { return f.series.coeff(IndexKey{2 * n, 2 * r, 2 * m}); }

}  // namespace

TEST_CASE("Maass lift instantiation") {
  const int prec = 4;
  const auto phi = jacobi_index1(10, JacobiKind::cusp, prec * prec / 4);
  const OrthoSeries lift = maass_lift(phi, prec);
  CHECK(lift.coeff(IndexKey{4, 4, 2}) == phi.c(2, 2));
  CHECK(lift.coeff(IndexKey{4, 0, 4}) == phi.c(4, 0) + 512 * phi.c(1, 0));
  CHECK(lift.coeff(IndexKey{2, 2, 2}) == phi.c(1, 1));
  CHECK_THROWS(maass_lift(jacobi_index1(10, JacobiKind::cusp, 2), prec));
}

TEST_CASE("generators: known coefficients") {
  const auto& g = tower8().generators;
  CHECK(a(g.e4, 0, 0, 0) == 1);
  CHECK(a(g.e4, 1, 0, 0) == 240);
  CHECK(a(g.e4, 0, 0, 1) == 240);
  CHECK(a(g.e4, 1, 1, 1) == 13440);
  CHECK(a(g.e4, 1, 0, 1) == 30240);
  CHECK(a(g.e6, 0, 0, 0) == 1);
  CHECK(a(g.e6, 1, 0, 0) == -504);
  CHECK(a(g.e6, 1, 1, 1) == 44352);
  CHECK(a(g.e6, 1, 0, 1) == 166320);
  CHECK(a(g.chi10, 1, 1, 1) == 1);
  CHECK(a(g.chi10, 1, -1, 1) == 1);
  CHECK(a(g.chi10, 1, 0, 1) == -2);
  CHECK(a(g.chi12, 1, 1, 1) == 1);
  CHECK(a(g.chi12, 1, 0, 1) == 10);
}

TEST_CASE("psi5") {
  const IgusaTower& t = tower8();
  CHECK(t.psi5.weight == 5);
  CHECK(t.psi5.parity == FormParity::half_integral);
  CHECK(t.psi5.series.coeff(IndexKey{1, 1, 1}) == 1);
  CHECK(t.psi5.series.coeff(IndexKey{1, -1, 1}) == -1);
  for (const auto& [k, c] : t.psi5.series.terms()) {
    CHECK(k.N % 2 != 0);
    CHECK(k.R % 2 != 0);
    CHECK(k.M % 2 != 0);
  }
  const OrthoSeries sq = t.psi5.series * t.psi5.series;
  CHECK(sq.agrees_with(t.generators.chi10.series, 8));
}

TEST_CASE("phi35 and phi30") {
  const IgusaTower& t = tower8();
  CHECK(t.phi35.weight == 35);
  CHECK(t.phi35.content == -41472);
  CHECK(t.phi35.series.min_order() == 10);
  CHECK(t.phi35.series.coeff(IndexKey{4, -2, 6}) == 1);
  CHECK(t.phi35.series.coeff(IndexKey{4, 2, 6}) == -1);
  CHECK(swap(t.phi35.series) == -t.phi35.series);
  CHECK(restrict_diagonal(t.phi35.series).empty());
  CHECK(has_integer_coefficients(t.phi35.series));

  CHECK(t.phi30.weight == 30);
  CHECK(has_integer_coefficients(t.phi30.series));
  CHECK((t.phi30.series * t.psi5.series).agrees_with(t.phi35.series, 8));
}

TEST_CASE("support and symmetry invariants") {
  const IgusaTower& t = tower8();
  for (const SiegelForm* f : t.forms()) {
    CAPTURE(f->name);
    CHECK(f->series.prec() == 8);
    const bool cusp = f->name != "e4" && f->name != "e6";
    const int sign = f->weight % 2 == 0 ? 1 : -1;
    for (const auto& [k, c] : f->series.terms()) {
      CHECK(k.N >= 0);
      CHECK(k.M >= 0);
      if (cusp)
        CHECK(k.disc() > 0);
      else
        CHECK(k.disc() >= 0);
      CHECK(f->series.coeff(IndexKey{k.N, -k.R, k.M}) == sign * c);
    }
  }
}

TEST_CASE("diagonal restrictions") {
  const IgusaTower& t = tower8();
  CHECK(restrict_diagonal(t.generators.chi10.series).empty());

  const QSeries e4 = eisenstein_q(4, 8);
  const auto d4 = restrict_diagonal(t.generators.e4.series);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; n + m <= 8; ++m) {
      auto it = d4.find({2 * n, 2 * m});
      const Rational v = it == d4.end() ? Rational(0) : it->second;
      CHECK(v == e4.coeff(n) * e4.coeff(m));
    }

  // chi12 restricts to a multiple of Delta x Delta; the multiple is 12.
  const QSeries delta = eta_power(24, 8);
  const auto d12 = restrict_diagonal(t.generators.chi12.series);
  const Rational scale = d12.at({2, 2});
  CHECK(scale == 12);
  for (const auto& [nm, v] : d12) {
    CHECK(nm.first % 2 == 0);
    CHECK(v == scale * delta.coeff(12 * nm.first) * delta.coeff(12 * nm.second));
  }
}

TEST_CASE("prefix stability") {
  const IgusaTower small = build_tower(6);
  const IgusaTower& big = tower8();
  const auto sf = small.forms(), bf = big.forms();
  REQUIRE(sf.size() == 7);
  for (std::size_t i = 0; i < sf.size(); ++i) {
    CAPTURE(sf[i]->name);
    CHECK(big.form(sf[i]->name).series.agrees_with(sf[i]->series, 6));
    CHECK(bf[i]->series.truncated(6) == sf[i]->series);
  }
  CHECK(build_tower(4).phi35.series == big.phi35.series.truncated(4));
}

TEST_CASE("form lookup") {
  CHECK(tower8().form("phi30").weight == 30);
  CHECK_THROWS_AS(tower8().form("phi31"), std::out_of_range);
  CHECK_THROWS(build_tower(3));
}
