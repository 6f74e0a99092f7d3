#include "singmod/igusa.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace singmod {

OrthoSeries maass_lift(const JacobiForm& phi, int prec) {
  if (prec < 0) throw SeriesError("maass_lift: negative precision");
  const std::int64_t need = std::int64_t{prec} * prec / 4;
  if (phi.prec < need) throw SeriesError("maass_lift: Jacobi input precision too small");
  const int k = phi.weight;

  OrthoSeries::Terms t;
  for (std::int64_t n = 0; n <= prec; ++n) {
    for (std::int64_t m = 0; n + m <= prec; ++m) {
      std::int64_t rmax = 0;
      while ((rmax + 1) * (rmax + 1) <= 4 * n * m) ++rmax;
      for (std::int64_t r = -rmax; r <= rmax; ++r) {
        Rational a;
        if (n == 0 && m == 0) {
          a = -bernoulli(k) / (2 * k) * phi.c(0, 0);
        } else {
          const std::int64_t g = std::gcd(std::gcd(n, r), m);
          for (std::int64_t d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            const Rational c = phi.c(n * m / (d * d), r / d);
            if (c != 0) a += ipow(Integer(static_cast<long>(d)), static_cast<unsigned long>(k - 1)) * c;
          }
        }
        if (a != 0)
          t.emplace(IndexKey{static_cast<std::int32_t>(2 * n), static_cast<std::int32_t>(2 * r),
                             static_cast<std::int32_t>(2 * m)},
                    std::move(a));
      }
    }
  }
  return OrthoSeries(std::move(t), prec);
}

namespace {

void require_integral(const SiegelForm& f) {
  if (!has_integer_coefficients(f.series))
    throw SeriesError(f.name + ": construction produced non-integral coefficients");
}

SiegelForm truncated(const SiegelForm& f, int prec) {
  SiegelForm out = f;
  out.series = f.series.truncated(prec);
  return out;
}

}  // namespace

IgusaGenerators igusa_generators(int prec) {
  if (prec < 4) throw SeriesError("igusa_generators: precision must be at least 4");
  const std::int64_t jp = std::int64_t{prec} * prec / 4;
  auto lift = [&](int weight, JacobiKind kind, const char* name, bool eisenstein) {
    const JacobiForm phi = jacobi_index1(weight, kind, jp);
    OrthoSeries s = maass_lift(phi, prec);
    if (eisenstein) s *= -2 * weight / bernoulli(weight);
    SiegelForm f{name, weight, std::move(s), FormParity::integral, 1};
    require_integral(f);
    return f;
  };
  IgusaGenerators g;
  g.e4 = lift(4, JacobiKind::eisenstein, "e4", true);
  g.e6 = lift(6, JacobiKind::eisenstein, "e6", true);
  g.chi10 = lift(10, JacobiKind::cusp, "chi10", false);
  g.chi12 = lift(12, JacobiKind::cusp, "chi12", false);
  return g;
}

SiegelForm jacobian_form(const IgusaGenerators& g) {
  const std::array<const SiegelForm*, 4> gens = {&g.e4, &g.e6, &g.chi10, &g.chi12};
  // m[i][j]: row i is a generator, columns are (k F, D_tau F, D_z F, D_omega F).
  std::array<std::array<OrthoSeries, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    const OrthoSeries& f = gens[i]->series;
    m[i][0] = Rational(gens[i]->weight) * f;
    m[i][1] = derivative(f, Axis::tau);
    m[i][2] = derivative(f, Axis::z);
    m[i][3] = derivative(f, Axis::omega);
  }

  // Laplace expansion along rows {0, 1} against rows {2, 3}.
  auto minor = [&](std::size_t r0, std::size_t a, std::size_t b) {
    return m[r0][a] * m[r0 + 1][b] - m[r0][b] * m[r0 + 1][a];
  };
  const int prec = std::min({g.e4.series.prec(), g.e6.series.prec(), g.chi10.series.prec(), g.chi12.series.prec()});
  OrthoSeries det(prec);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      std::array<std::size_t, 2> rest{};
      std::size_t idx = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (c != a && c != b) rest[idx++] = c;
      const bool odd = (a + b + 1) % 2 != 0;
      OrthoSeries term = minor(0, a, b) * minor(2, rest[0], rest[1]);
      det = odd ? det - term : det + term;
    }
  }
  if (det.is_zero()) throw SeriesError("phi35: Jacobian determinant vanishes within precision");
  auto [normalized, content] = content_normalize(det);
  return SiegelForm{"phi35", 35, std::move(normalized), FormParity::integral, std::move(content)};
}

std::vector<const SiegelForm*> IgusaTower::forms() const {
  return {&generators.e4, &generators.e6, &generators.chi10, &generators.chi12, &psi5, &phi35, &phi30};
}

const SiegelForm& IgusaTower::form(const std::string& id) const {
  for (const SiegelForm* f : forms())
    if (f->name == id) return *f;
  throw std::out_of_range("unknown form id '" + id + "'");
}

IgusaTower build_tower(int prec) {
  if (prec < 4) throw SeriesError("build_tower: precision must be at least 4");
  const int work = std::max(prec, 6);

  const IgusaGenerators wide = igusa_generators(work + 2);
  IgusaGenerators det_inputs{truncated(wide.e4, work + 1), truncated(wide.e6, work + 1),
                             truncated(wide.chi10, work + 1),
                             truncated(wide.chi12, work + 1)};
  const SiegelForm p35 = jacobian_form(det_inputs);

  SiegelForm root{"psi5", 5, sqrt(wide.chi10.series), FormParity::half_integral, 1};
  if (root.series.prec() < work + 1) throw SeriesError("psi5: square root lost precision");
  root.series = root.series.truncated(work + 1);
  require_integral(root);

  SiegelForm p30{"phi30", 30, divide_exact(p35.series, root.series), FormParity::half_integral, 1};
  if (p30.series.prec() < prec) throw SeriesError("phi30: quotient lost precision");
  require_integral(p30);

  IgusaTower t;
  t.prec = prec;
  t.generators = {truncated(wide.e4, prec), truncated(wide.e6, prec), truncated(wide.chi10, prec),
                  truncated(wide.chi12, prec)};
  t.psi5 = truncated(root, prec);
  t.phi35 = truncated(p35, prec);
  t.phi30 = truncated(p30, prec);
  return t;
}

SiegelForm psi5(int prec) { return build_tower(prec).psi5; }

SiegelForm phi35(int prec) {
  if (prec < 6) throw SeriesError("phi35: precision must be at least 6");
  return build_tower(prec).phi35;
}

SiegelForm phi30(int prec) {
  if (prec < 6) throw SeriesError("phi30: precision must be at least 6");
  return build_tower(prec).phi30;
}

}  // namespace singmod
