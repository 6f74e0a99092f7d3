#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

#include "singmod/congruence.hpp"

namespace singmod {

namespace {

constexpr int kInfinity = INT_MAX / 4;

int val(const Rational& x, std::uint64_t p) { return x == 0 ? kInfinity : valuation(x, p); }

bool divides(std::uint64_t p, const Rational& x) {
  return residue(Integer(x.get_num()), p) == 0;
}

void add_primes(std::set<std::uint64_t>& out, const Rational& x) {
  if (x == 0) return;
  for (const Integer* part : {&x.get_num(), &x.get_den()}) {
    if (abs(*part) <= 1) continue;
    for (const auto& [p, e] : factor(*part)) out.insert(p);
  }
}

const std::vector<std::string>& bracket_assumptions() {
  static const std::vector<std::string> a = {"reflective, simple disjoint zeros", "no weight-2 forms",
                                             "partner form not ≡ 0 mod p", "p ∤ D_F"};
  return a;
}

std::string describe(const Rational& k, const Rational& l, const char* slot) {
  return "k=" + to_string(k) + " l=" + to_string(l) + " slot=" + slot;
}

void sort_results(std::vector<PredictionResult>& r) {
  std::sort(r.begin(), r.end(), [](const PredictionResult& a, const PredictionResult& b) {
    return std::tie(a.target, a.prime) < std::tie(b.target, b.prime);
  });
}

}  // namespace

const char* to_string(PredictionMode m) {
  switch (m) {
    case PredictionMode::strict:
      return "strict";
    case PredictionMode::valuation:
      return "valuation";
    case PredictionMode::identity:
      return "identity";
  }
  return "?";
}

std::optional<PredictionMode> parse_mode(const std::string& s) {
  if (s == "strict") return PredictionMode::strict;
  if (s == "valuation") return PredictionMode::valuation;
  if (s == "identity") return PredictionMode::identity;
  return std::nullopt;
}

int PredictionReport::exponent(const Target& target, std::uint64_t prime) const {
  for (const auto& r : results)
    if (r.target == target && r.prime == prime) return r.exponent;
  return 0;
}

SlotExponents slot_exponents(const BracketCoefficients& bc, std::uint64_t p, const std::optional<Rational>& rhs) {
  const int vc = rhs ? val(*rhs, p) : kInfinity;
  const int ab = val(bc.A * bc.B, p);
  const int bcv = val(bc.B * bc.C, p);
  const int ac = val(bc.A * bc.C, p);
  SlotExponents s;
  // AB lap(FG) - BC lap(F) G - AC F lap(G) = c X: each target is cleared by
  // the smallest valuation among the other terms.
  if (bc.B * bc.C != 0) s.f = std::min({ab, ac, vc}) - bcv;
  if (bc.A * bc.C != 0) s.g = std::min({ab, bcv, vc}) - ac;
  if (bc.A * bc.B != 0) s.fg = std::min({bcv, ac, vc}) - ab;
  return s;
}

PredictionReport predict_pair(const Rational& n, const Rational& k, const Rational& l, PredictionMode mode) {
  if (mode == PredictionMode::identity) throw std::invalid_argument("predict_pair: use predict_identity");
  if (n < 3) throw std::invalid_argument("predict_pair: n must be at least 3");
  const auto bc = bracket_coefficients(n, k, l);

  PredictionReport rep;
  rep.n = n;
  rep.weights = {k, l};
  rep.mode = mode;
  rep.assumptions = bracket_assumptions();

  std::set<std::uint64_t> primes;
  for (const Rational* x : {&bc.A, &bc.B, &bc.C}) add_primes(primes, *x);

  const Target F{0}, G{1}, FG{0, 1};
  for (const std::uint64_t p : primes) {
    if (mode == PredictionMode::strict) {
      if (bc.A != 0 && divides(p, bc.A) && !divides(p, l) && !divides(p, bc.B))
        rep.results.push_back({F, p, 1, describe(k, l, "F")});
      if (bc.B != 0 && divides(p, bc.B) && !divides(p, k) && !divides(p, bc.A))
        rep.results.push_back({G, p, 1, describe(k, l, "G")});
      if (bc.C != 0 && divides(p, bc.C) && !divides(p, k) && !divides(p, l))
        rep.results.push_back({FG, p, 1, describe(k, l, "FG")});
    } else {
      const int va = val(bc.A, p), vb = val(bc.B, p), vc = val(bc.C, p);
      if (bc.A != 0 && va - std::max(vb, vc) >= 1)
        rep.results.push_back({F, p, va - std::max(vb, vc), describe(k, l, "F")});
      if (bc.B != 0 && vb - std::max(va, vc) >= 1)
        rep.results.push_back({G, p, vb - std::max(va, vc), describe(k, l, "G")});
      if (bc.C != 0 && vc - std::max(va, vb) >= 1)
        rep.results.push_back({FG, p, vc - std::max(va, vb), describe(k, l, "FG")});
    }
  }
  sort_results(rep.results);
  return rep;
}

PredictionReport predict_family(const Rational& n, const std::vector<Rational>& weights, PredictionMode mode) {
  if (weights.size() < 2) throw std::invalid_argument("predict_family: needs at least two weights");
  if (weights.size() > 16) throw std::invalid_argument("predict_family: family too large");
  const std::size_t count = weights.size();
  const unsigned full = (1u << count) - 1;

  auto members = [&](unsigned mask) {
    Target t;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) t.push_back(i);
    return t;
  };
  auto weight_of = [&](unsigned mask) {
    Rational w = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) w += weights[i];
    return w;
  };
  auto label = [&](unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!first) s += "+";
      s += to_string(weights[i]);
      first = false;
    }
    return s + "}";
  };

  std::map<std::pair<Target, std::uint64_t>, PredictionResult> best;
  for (unsigned s = 1; s <= full; ++s) {
    for (unsigned t = s + 1; t <= full; ++t) {
      if (s & t) continue;
      const auto pair = predict_pair(n, weight_of(s), weight_of(t), mode);
      const unsigned slot_masks[] = {s, t, s | t};
      for (const auto& r : pair.results) {
        const unsigned mask = r.target == Target{0} ? slot_masks[0] : r.target == Target{1} ? slot_masks[1] : slot_masks[2];
        const char* slot = r.target == Target{0} ? "F" : r.target == Target{1} ? "G" : "FG";
        PredictionResult out{members(mask), r.prime, r.exponent, label(s) + " vs " + label(t) + " slot=" + slot};
        auto key = std::make_pair(out.target, out.prime);
        auto it = best.find(key);
        if (it == best.end())
          best.emplace(std::move(key), std::move(out));
        else if (out.exponent > it->second.exponent)
          it->second = std::move(out);
      }
    }
  }

  PredictionReport rep;
  rep.n = n;
  rep.weights = weights;
  rep.mode = mode;
  rep.assumptions = bracket_assumptions();
  for (auto& [key, r] : best) rep.results.push_back(std::move(r));
  sort_results(rep.results);
  return rep;
}

PredictionReport predict_identity(const Rational& n, const Rational& k, const Rational& l, const Rational& rhs) {
  if (rhs == 0) throw std::invalid_argument("predict_identity: right-hand constant must be nonzero");
  if (n < 3) throw std::invalid_argument("predict_identity: n must be at least 3");
  const auto bc = bracket_coefficients(n, k, l);

  PredictionReport rep;
  rep.n = n;
  rep.weights = {k, l};
  rep.mode = PredictionMode::identity;
  rep.assumptions = {"[F, G] = c·(product form) with c = " + to_string(rhs), "p ∤ D_F"};

  std::set<std::uint64_t> primes;
  for (const Rational* x : {&bc.A, &bc.B, &bc.C, &rhs}) add_primes(primes, *x);
  for (const std::uint64_t p : primes) {
    const SlotExponents s = slot_exponents(bc, p, rhs);
    if (s.f && *s.f >= 1) rep.results.push_back({{0}, p, *s.f, describe(k, l, "F")});
    if (s.g && *s.g >= 1) rep.results.push_back({{1}, p, *s.g, describe(k, l, "G")});
    if (s.fg && *s.fg >= 1) rep.results.push_back({{0, 1}, p, *s.fg, describe(k, l, "FG")});
  }
  sort_results(rep.results);
  return rep;
}

Rational eisenstein_constant(const RootSystemData& root, const Rational& /*k*/, const Rational& l) {
  return l * (Rational(root.d, 2) - l) * (Rational(root.h * (root.h + 1)) - root.weyl_norm);
}

std::size_t CatalogRun::claims_checked() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.checked; }));
}

std::size_t CatalogRun::claims_missed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.checked && o.exponent == 0; }));
}

CatalogRun run_catalog(const std::vector<CatalogEntry>& catalog, PredictionMode mode) {
  if (mode == PredictionMode::identity)
    throw std::invalid_argument("run_catalog: mode must be strict or valuation");
  CatalogRun run;
  run.mode = mode;
  for (const auto& e : catalog) {
    PredictionReport rep;
    if (e.is_identity()) {
      const Rational k = e.forms[0].weight, l = e.forms[1].weight;
      const Rational c = e.rhs ? *e.rhs : eisenstein_constant(root_system_data(*e.root_system), k, l);
      rep = predict_identity(e.lattice.n, k, l, c);
    } else {
      std::vector<Rational> w;
      for (const auto& f : e.forms) w.emplace_back(f.weight);
      rep = predict_family(e.lattice.n, w, mode);
    }

    auto target_of = [&](const std::vector<std::string>& product) {
      Target t;
      for (std::size_t i = 0; i < e.forms.size(); ++i)
        if (std::find(product.begin(), product.end(), e.forms[i].name) != product.end()) t.push_back(i);
      return t;
    };

    std::set<std::pair<Target, std::uint64_t>> claimed;
    for (const auto& c : e.claims) {
      const Target t = target_of(c.product);
      claimed.emplace(t, c.prime);
      ClaimOutcome o{e.id(), c, rep.exponent(t, c.prime), true};
      if (mode == PredictionMode::strict && c.source == ClaimSource::valuation) o.checked = false;
      run.outcomes.push_back(std::move(o));
    }
    bool exact = true;
    for (const auto& r : rep.results) {
      if (claimed.count({r.target, r.prime})) continue;
      std::vector<std::string> names;
      for (const std::size_t i : r.target) names.push_back(e.forms[i].name);
      run.extras.push_back({e.id(), std::move(names), r.prime, r.exponent});
      exact = false;
    }
    for (const auto& [t, p] : claimed)
      if (rep.exponent(t, p) == 0) exact = false;
    if (e.mode_exact && mode == PredictionMode::valuation && !exact) run.mode_exact_failures.push_back(e.id());
  }
  return run;
}

}  // namespace singmod
