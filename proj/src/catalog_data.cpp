#include "singmod/lattice.hpp"

namespace singmod {

namespace {

const std::vector<std::string> kBracketAssumptions = {
    "reflective, simple disjoint zeros",
    "no weight-2 forms",
    "partner form not ≡ 0 mod p",
    "p ∤ D_F",
};

Claim claim(std::vector<std::string> product, std::uint64_t p, ClaimSource s = ClaimSource::strict) {
  return Claim{std::move(product), p, s};
}

CatalogEntry family(std::string label, int n, std::vector<FormSpec> forms, std::vector<Claim> claims,
                    std::vector<std::string> extra = {}) {
  CatalogEntry e;
  e.lattice = {std::move(label), n, {}};
  e.forms = std::move(forms);
  e.claims = std::move(claims);
  e.assumptions = kBracketAssumptions;
  e.assumptions.insert(e.assumptions.end(), extra.begin(), extra.end());
  return e;
}

CatalogEntry exact(CatalogEntry e) {
  e.mode_exact = true;
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  constexpr auto V = ClaimSource::valuation;
  constexpr auto I = ClaimSource::identity;
  std::vector<CatalogEntry> c;

  c.push_back(family("2U+A1", 3, {{"Psi5", 5}, {"Phi30", 30}},
                     {claim({"Psi5"}, 3, V), claim({"Phi30"}, 59), claim({"Psi5", "Phi30"}, 23)},
                     {"Siegel modular forms of degree two"}));

  c.push_back(family("2U+A1(2)", 3, {{"Psi2", 2}, {"Psi9", 9}, {"Phi12", 12}},
                     {claim({"Psi9"}, 17), claim({"Phi12"}, 23), claim({"Psi2", "Psi9"}, 7),
                      claim({"Psi2", "Phi12"}, 3, V), claim({"Psi9", "Phi12"}, 41),
                      claim({"Psi2", "Psi9", "Phi12"}, 5)},
                     {"paramodular level 2", "characters carried as metadata only"}));

  c.push_back(family("2U+A1(3)", 3, {{"Psi1", 1}, {"Psi6", 6}, {"Phi12", 12}},
                     {claim({"Psi6"}, 11), claim({"Phi12"}, 23), claim({"Psi1", "Psi6"}, 13),
                      claim({"Psi1", "Phi12"}, 5), claim({"Psi6", "Phi12"}, 5), claim({"Psi6", "Phi12"}, 7),
                      claim({"Psi1", "Psi6", "Phi12"}, 37)},
                     {"paramodular level 3", "characters carried as metadata only"}));

  c.push_back(family("2U+A2", 4, {{"Psi9", 9}, {"Phi45", 45}},
                     {claim({"Psi9"}, 2, V), claim({"Phi45"}, 11), claim({"Psi9", "Phi45"}, 53)},
                     {"Hermitian modular forms over the Eisenstein integers"}));

  c.push_back(family("2U(2)+A2", 4, {{"Psi3", 3}, {"Psi12", 12}, {"Phi15", 15}},
                     {claim({"Psi12"}, 11), claim({"Phi15"}, 7), claim({"Psi3", "Psi12"}, 7),
                      claim({"Psi3", "Phi15"}, 17), claim({"Psi12", "Phi15"}, 13),
                      claim({"Psi3", "Psi12", "Phi15"}, 29)},
                     {"level-two Hermitian subgroup"}));

  c.push_back(family("2U+2A1", 4, {{"Psi4", 4}, {"Psi10", 10}, {"Phi30", 30}},
                     {claim({"Psi10"}, 3, V), claim({"Phi30"}, 29), claim({"Psi4", "Psi10"}, 13),
                      claim({"Psi4", "Phi30"}, 11), claim({"Psi10", "Phi30"}, 13),
                      claim({"Psi4", "Psi10", "Phi30"}, 43)},
                     {"Hermitian modular forms over the Gaussian integers"}));

  c.push_back(exact(family("2U+A3", 5, {{"Psi9", 9}, {"Phi54", 54}},
                           {claim({"Phi54"}, 7), claim({"Psi9", "Phi54"}, 41)})));

  c.push_back(family("2U+D4", 6, {{"Psi24", 24}, {"Phi72", 72}},
                     {claim({"Phi72"}, 5), claim({"Phi72"}, 7), claim({"Psi24", "Phi72"}, 47)},
                     {"quaternionic modular forms over the Hurwitz order"}));
  {
    CatalogEntry e = family("2U+D4", 6, {{"Psi8", 8}, {"Phi72", 72}}, {claim({"Psi8", "Phi72"}, 13)},
                            {"subgroup Γ generated by reflections in the divisor of Ψ8Φ72"});
    e.tag = "reflection subgroup";
    c.push_back(std::move(e));
  }

  {
    CatalogEntry e = family("2U+2A2", 6, {{"Psi6", 6}, {"Phi42", 42}},
                            {claim({"Phi42"}, 2, V), claim({"Phi42"}, 5), claim({"Psi6", "Phi42"}, 23)});
    e.lattice.notes = "signature (6,2) by rank arithmetic";
    c.push_back(std::move(e));
  }

  c.push_back(exact(family("2U+D5", 7, {{"Psi7", 7}, {"Phi88", 88}},
                           {claim({"Phi88"}, 19), claim({"Psi7", "Phi88"}, 5), claim({"Psi7", "Phi88"}, 37)})));

  c.push_back(family("2U+D6", 8, {{"Psi6", 6}, {"Phi102", 102}},
                     {claim({"Phi102"}, 3, V), claim({"Phi102"}, 11), claim({"Psi6", "Phi102"}, 5),
                      claim({"Psi6", "Phi102"}, 7)}));

  c.push_back(exact(family("2U+E6'(3)", 8, {{"Psi12", 12}, {"Phi12", 12}}, {claim({"Psi12", "Phi12"}, 7)})));

  c.push_back(family("2U+2A3", 8, {{"Psi6", 6}, {"Phi48", 48}},
                     {claim({"Phi48"}, 3, V), claim({"Phi48"}, 5), claim({"Psi6", "Phi48"}, 17)}));

  c.push_back(exact(family("2U+D7", 9, {{"Psi5", 5}, {"Phi114", 114}},
                           {claim({"Phi114"}, 13), claim({"Phi114"}, 17), claim({"Psi5", "Phi114"}, 7),
                            claim({"Psi5", "Phi114"}, 11)})));

  c.push_back(exact(family("2U+E8(2)", 10, {{"Psi60", 60}, {"Phi12", 12}},
                           {claim({"Psi60"}, 7), claim({"Psi60", "Phi12"}, 17)})));

  c.push_back(exact(family("2U+D8'(2)", 10, {{"Psi28", 28}, {"Phi28", 28}}, {claim({"Psi28", "Phi28"}, 13)})));

  const std::vector<std::string> eis = {"unique reflective form with simple zeros",
                                        "G_l and G_{l+2} integral Eisenstein series with constant term 1",
                                        "M_{l+2} one-dimensional", "p ∤ D_F"};
  auto eisenstein_entry = [&](std::string label, int n, const char* root, FormSpec phi, FormSpec g,
                              std::vector<Claim> claims) {
    CatalogEntry e;
    e.lattice = {std::move(label), n, {}};
    e.forms = {std::move(phi), std::move(g)};
    e.claims = std::move(claims);
    e.assumptions = eis;
    e.root_system = root;
    return e;
  };
  c.push_back(eisenstein_entry("2U+E6", 8, "E6", {"Phi120", 120}, {"G4", 4}, {claim({"Phi120"}, 13, I)}));
  {
    CatalogEntry e = family("2U+E6", 8, {{"Phi120", 120}, {"M7", 7}},
                            {claim({"Phi120", "M7"}, 31), claim({"Phi120"}, 13)},
                            {"M7 is not a Borcherds product"});
    e.assumptions = {"simple zeros of Φ120", "no weight-9 forms", "partner form not ≡ 0 mod p", "p ∤ D_F",
                     "M7 is not a Borcherds product"};
    e.tag = "weight-7 partner";
    c.push_back(std::move(e));
  }
  c.push_back(eisenstein_entry("2U+E7", 9, "E7", {"Phi165", 165}, {"G4", 4},
                               {claim({"Phi165"}, 17, I), claim({"Phi165"}, 19, I)}));
  c.push_back(eisenstein_entry("2U+E8", 10, "E8", {"Phi252", 252}, {"G8", 8}, {claim({"Phi252"}, 31, I)}));

  {
    CatalogEntry e;
    e.lattice = {"2U+D11", 13, {}};
    e.forms = {{"Phi142", 142}, {"Psi1", 1}};
    e.claims = {claim({"Phi142"}, 13, I), claim({"Psi1", "Phi142"}, 5, I)};
    e.assumptions = {"Ψ1 meromorphic with simple poles on s⊥", "non-simple zeros of Φ142 along s⊥",
                     "identity RHS constant 1950", "p ∤ D_F"};
    e.rhs = Rational(1950);
    c.push_back(std::move(e));
  }

  for (const auto& e : c) validate(e);
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = make_catalog();
  return catalog;
}

}  // namespace singmod
