#include <doctest.h>

#include <json.hpp>
#include <set>

#include "singmod/congruence.hpp"
#include "singmod/lattice.hpp"
#include "singmod/report.hpp"

using namespace singmod;

namespace {

const Target F{0}, G{1}, FG{0, 1};

std::set<std::uint64_t> primes_for(const PredictionReport& r, const Target& t) {
  std::set<std::uint64_t> out;
  for (const auto& res : r.results)
    if (res.target == t) out.insert(res.prime);
  return out;
}

// Independent reading of the strict rule on integer (n, k, l).
bool strict_f(int n, int k, int l, std::uint64_t p) {
  // 2A = n - 2 - 2k, 2B = n - 2 - 2l; p odd here.
  const long a2 = n - 2 - 2L * k, b2 = n - 2 - 2L * l;
  return a2 != 0 && a2 % static_cast<long>(p) == 0 && l % static_cast<long>(p) != 0 && b2 % static_cast<long>(p) != 0;
}

}  // namespace

TEST_CASE("pair predictions for the Siegel family") {
  const auto v = predict_pair(3, 5, 30, PredictionMode::valuation);
  CHECK(primes_for(v, F) == std::set<std::uint64_t>{3});
  CHECK(primes_for(v, G) == std::set<std::uint64_t>{59});
  CHECK(primes_for(v, FG) == std::set<std::uint64_t>{23});
  // v_3(A) = 2 against v_3(C) = 1.
  CHECK(v.exponent(F, 3) == 1);

  // 3 divides the partner weight 30, so the strict rule is silent on F.
  const auto s = predict_pair(3, 5, 30, PredictionMode::strict);
  CHECK(primes_for(s, F).empty());
  CHECK(primes_for(s, G) == std::set<std::uint64_t>{59});
  CHECK(primes_for(s, FG) == std::set<std::uint64_t>{23});
}

TEST_CASE("valuation mode") {
  const auto r = predict_pair(4, 9, 45, PredictionMode::valuation);
  CHECK(r.exponent(F, 2) == 1);
  CHECK(r.exponent(G, 11) == 1);
  CHECK(r.exponent(FG, 53) == 1);
  // p = 2 comes only from the valuation rule here.
  CHECK(predict_pair(4, 9, 45, PredictionMode::strict).exponent(F, 2) == 0);

  const auto s = predict_pair(8, 120, 7, PredictionMode::valuation);
  CHECK(s.exponent(F, 13) >= 1);
  CHECK(s.exponent(FG, 31) >= 1);
}

TEST_CASE("strict rule agrees with an independent reading") {
  for (int n = 3; n <= 12; ++n)
    for (int k = 0; k <= 60; ++k)
      for (int l = 0; l <= 60; ++l) {
        const auto r = predict_pair(n, k, l, PredictionMode::strict);
        for (const std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
          REQUIRE(strict_f(n, k, l, p) == (r.exponent(F, p) == 1));
      }
}

TEST_CASE("strict predictions are valuation predictions") {
  for (int n = 3; n <= 20; n += 1)
    for (int k = 0; k <= 120; k += 1)
      for (int l = 0; l <= 120; l += 3) {
        const auto st = predict_pair(n, k, l, PredictionMode::strict);
        if (st.results.empty()) continue;
        const auto va = predict_pair(n, k, l, PredictionMode::valuation);
        for (const auto& res : st.results) REQUIRE(va.exponent(res.target, res.prime) >= 1);
      }
}

TEST_CASE("family predictions") {
  const auto a = predict_family(3, {2, 9, 12}, PredictionMode::valuation);
  CHECK(a.exponent({1}, 17) >= 1);
  CHECK(a.exponent({2}, 23) >= 1);
  CHECK(a.exponent({0, 1}, 7) >= 1);
  CHECK(a.exponent({0, 2}, 3) >= 1);
  CHECK(a.exponent({1, 2}, 41) >= 1);
  CHECK(a.exponent({0, 1, 2}, 5) >= 1);

  const auto b = predict_family(3, {1, 6, 12}, PredictionMode::valuation);
  CHECK(b.exponent({1}, 11) >= 1);
  CHECK(b.exponent({2}, 23) >= 1);
  CHECK(b.exponent({0, 1}, 13) >= 1);
  CHECK(b.exponent({0, 2}, 5) >= 1);
  CHECK(b.exponent({1, 2}, 5) >= 1);
  CHECK(b.exponent({1, 2}, 7) >= 1);
  CHECK(b.exponent({0, 1, 2}, 37) >= 1);

  const auto c = predict_family(6, {24, 72}, PredictionMode::valuation);
  CHECK(primes_for(c, {1}) == std::set<std::uint64_t>{5, 7});
  CHECK(c.exponent({0, 1}, 47) >= 1);

  CHECK_THROWS_AS(predict_family(3, {5}, PredictionMode::valuation), std::invalid_argument);
  CHECK_THROWS_AS(predict_pair(2, 5, 30, PredictionMode::valuation), std::invalid_argument);
}

TEST_CASE("identity predictions") {
  const auto d11 = predict_identity(13, 142, 1, 1950);
  CHECK(d11.exponent(F, 13) == 1);
  CHECK(d11.exponent(FG, 5) == 2);
  CHECK(d11.mode == PredictionMode::identity);

  const auto e6 = predict_identity(8, 120, 4, -468);
  CHECK(e6.exponent(F, 13) >= 1);

  const Rational c8 = eisenstein_constant(root_system_data("E8"), 252, 8);
  CHECK(predict_identity(10, 252, 8, c8).exponent(F, 31) >= 1);
  CHECK_THROWS_AS(predict_identity(13, 142, 1, 0), std::invalid_argument);
}

TEST_CASE("identity formulas degenerate to the valuation rule") {
  for (int n = 3; n <= 14; ++n)
    for (int k = 0; k <= 80; ++k)
      for (int l = 0; l <= 80; l += 7) {
        const auto bc = bracket_coefficients(n, k, l);
        if (bc.A == 0 || bc.B == 0 || bc.C == 0) continue;
        const auto val = predict_pair(n, k, l, PredictionMode::valuation);
        for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
          const auto s = slot_exponents(bc, p);
          REQUIRE(s.f.has_value());
          const int expect = valuation(bc.A, p) - std::max(valuation(bc.B, p), valuation(bc.C, p));
          REQUIRE(*s.f == expect);
          REQUIRE(val.exponent(F, p) == std::max(expect, 0));
        }
      }
}

TEST_CASE("eisenstein constants") {
  CHECK(eisenstein_constant(root_system_data("E6"), 120, 4) == -468);
  CHECK(eisenstein_constant(root_system_data("E8"), 252, 8) == -19840);
  CHECK(eisenstein_constant(root_system_data("E7"), 165, 4) == make_rational(-969, 2));
}

TEST_CASE("report rendering") {
  const auto r = predict_family(3, {5, 30}, PredictionMode::valuation);
  const auto j = nlohmann::json::parse(report_to_json(r, {"Psi5", "Phi30"}));
  CHECK(j["n"] == "3");
  CHECK(j["mode"] == "valuation");
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][0]["target"] == nlohmann::json::array({"Psi5"}));
  CHECK(j["results"][0]["prime"] == 3);
  CHECK(j["assumptions"].size() == 4);
  const std::string text = report_to_text(r, {"Psi5", "Phi30"});
  CHECK(text.find("Ψ5 is singular modulo p=3") != std::string::npos);
  CHECK(text.find("Ψ5Φ30 is singular modulo p=23") != std::string::npos);
  CHECK(default_names(r) == std::vector<std::string>{"F", "G"});
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("strict") == PredictionMode::strict);
  CHECK(parse_mode("identity") == PredictionMode::identity);
  CHECK_FALSE(parse_mode("loose").has_value());
}
