#include <doctest.h>

#include <chrono>
#include <set>

#include "singmod/congruence.hpp"
#include "singmod/lattice.hpp"
#include "singmod/report.hpp"

using namespace singmod;

namespace {

const CatalogEntry& entry(const std::string& id) {
  for (const auto& e : builtin_catalog())
    if (e.id() == id) return e;
  throw std::out_of_range(id);
}

std::set<std::pair<std::vector<std::string>, std::uint64_t>> claim_set(const CatalogEntry& e) {
  std::set<std::pair<std::vector<std::string>, std::uint64_t>> s;
  for (const auto& c : e.claims) s.insert({c.product, c.prime});
  return s;
}

}  // namespace

TEST_CASE("signature n") {
  CHECK(signature_n("2U+A1") == 3);
  CHECK(signature_n("2U+A2") == 4);
  CHECK(signature_n("2U+2A2") == 6);
  CHECK(signature_n("2U+A1(2)") == 3);
  CHECK(signature_n("2U(2)+A2") == 4);
  CHECK(signature_n("2U+E8") == 10);
  CHECK(signature_n("2U+D11") == 13);
  CHECK(signature_n("2U+E6'(3)") == 8);
  CHECK_THROWS_AS(signature_n("U+A1"), CatalogError);
  CHECK_THROWS_AS(signature_n("2U+B3"), CatalogError);
  CHECK_THROWS_AS(signature_n("2U+E6'"), CatalogError);
  CHECK_THROWS_AS(signature_n(""), CatalogError);
}

TEST_CASE("root systems") {
  const auto e6 = root_system_data("E6");
  CHECK(e6.d == 6);
  CHECK(e6.h == 12);
  CHECK(e6.weyl_norm == 39);
  CHECK(root_system_data("E7").weyl_norm == make_rational(399, 4));
  CHECK(root_system_data("E8").weyl_norm == 310);
  CHECK_THROWS(root_system_data("F4"));
}

TEST_CASE("catalog contents") {
  const auto& cat = builtin_catalog();
  std::size_t claims = 0;
  for (const auto& e : cat) {
    CHECK_NOTHROW(validate(e));
    claims += e.claims.size();
  }
  CHECK(claims >= 50);

  const auto& a1 = entry("2U+A1");
  CHECK(a1.lattice.n == 3);
  CHECK(a1.forms.size() == 2);
  CHECK(claim_set(a1) == std::set<std::pair<std::vector<std::string>, std::uint64_t>>{
                             {{"Psi5"}, 3}, {{"Phi30"}, 59}, {{"Psi5", "Phi30"}, 23}});
  CHECK(entry("2U+A1(2)").claims.size() == 6);
  const auto d7 = claim_set(entry("2U+D7"));
  CHECK(d7.count({{"Phi114"}, 13}));
  CHECK(d7.count({{"Phi114"}, 17}));
  CHECK(d7.count({{"Psi5", "Phi114"}, 7}));
  CHECK(d7.count({{"Psi5", "Phi114"}, 11}));

  std::size_t exact = 0;
  for (const auto& e : cat) exact += e.mode_exact;
  CHECK(exact == 6);
}

TEST_CASE("catalog regression: nothing missed") {
  const auto t0 = std::chrono::steady_clock::now();
  const CatalogRun run = run_catalog(builtin_catalog(), PredictionMode::valuation);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(run.claims_missed() == 0);
  CHECK(run.claims_checked() >= 50);
  CHECK(run.mode_exact_failures.empty());
  CHECK(secs < 1.0);
  CHECK(catalog_run_to_text(run).find("0 missed / ") != std::string::npos);

  const CatalogRun strict = run_catalog(builtin_catalog(), PredictionMode::strict);
  CHECK(strict.claims_missed() == 0);
  CHECK(strict.claims_checked() < run.claims_checked());
  CHECK_THROWS_AS(run_catalog(builtin_catalog(), PredictionMode::identity), std::invalid_argument);
}

TEST_CASE("mode-exact entries") {
  const auto a3 = entry("2U+A3");
  const auto r = predict_family(a3.lattice.n, {9, 54}, PredictionMode::valuation);
  REQUIRE(r.results.size() == 2);
  CHECK(r.exponent({1}, 7) >= 1);
  CHECK(r.exponent({0, 1}, 41) >= 1);

  const auto d5 = predict_family(entry("2U+D5").lattice.n, {7, 88}, PredictionMode::valuation);
  CHECK(d5.exponent({1}, 19) >= 1);
  CHECK(d5.exponent({0, 1}, 5) >= 1);
  CHECK(d5.exponent({0, 1}, 37) >= 1);
}

TEST_CASE("a broken catalog reports missed claims") {
  std::vector<CatalogEntry> cat = {entry("2U+A1")};
  cat[0].claims.push_back(Claim{{"Phi30"}, 61, ClaimSource::strict});
  const CatalogRun run = run_catalog(cat, PredictionMode::valuation);
  CHECK(run.claims_missed() == 1);
}

TEST_CASE("catalog json round trip") {
  const std::string text = catalog_to_json(builtin_catalog());
  const auto back = catalog_from_json(text);
  REQUIRE(back.size() == builtin_catalog().size());
  CHECK(catalog_to_json(back) == text);
  CHECK_THROWS_AS(catalog_from_json("{"), CatalogError);
  CHECK_THROWS_AS(catalog_from_json("[{\"lattice\": \"2U+A1\"}]"), CatalogError);
}

TEST_CASE("display names") {
  CHECK(display_name("Psi5") == "Ψ5");
  CHECK(display_name("Phi120") == "Φ120");
  CHECK(display_name("M7") == "𝔐7");
  CHECK(display_name("G4") == "G4");
}
