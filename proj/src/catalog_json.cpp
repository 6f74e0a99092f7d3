#include <json.hpp>

#include "singmod/lattice.hpp"

namespace singmod {

using nlohmann::json;

std::string catalog_to_json(const std::vector<CatalogEntry>& catalog) {
  json doc = json::array();
  for (const auto& e : catalog) {
    json j;
    j["lattice"] = e.lattice.label;
    j["n"] = e.lattice.n;
    if (!e.lattice.notes.empty()) j["notes"] = e.lattice.notes;
    if (!e.tag.empty()) j["tag"] = e.tag;
    j["forms"] = json::array();
    for (const auto& f : e.forms) j["forms"].push_back({{"name", f.name}, {"weight", f.weight}});
    j["claims"] = json::array();
    for (const auto& c : e.claims)
      j["claims"].push_back({{"product", c.product}, {"prime", c.prime}, {"source", to_string(c.source)}});
    j["assumptions"] = e.assumptions;
    if (e.root_system) j["root_system"] = *e.root_system;
    if (e.rhs) j["rhs"] = to_string(*e.rhs);
    if (e.mode_exact) j["mode_exact"] = true;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> catalog_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogError("catalog JSON: top level must be an array");

  std::vector<CatalogEntry> out;
  try {
    for (const auto& j : doc) {
      CatalogEntry e;
      e.lattice.label = j.at("lattice").get<std::string>();
      e.lattice.n = j.at("n").get<int>();
      e.lattice.notes = j.value("notes", std::string{});
      e.tag = j.value("tag", std::string{});
      for (const auto& f : j.at("forms")) e.forms.push_back({f.at("name").get<std::string>(), f.at("weight").get<int>()});
      for (const auto& c : j.at("claims")) {
        Claim cl;
        cl.product = c.at("product").get<std::vector<std::string>>();
        cl.prime = c.at("prime").get<std::uint64_t>();
        const auto src = parse_claim_source(c.at("source").get<std::string>());
        if (!src) throw CatalogError("catalog JSON: unknown claim source");
        cl.source = *src;
        e.claims.push_back(std::move(cl));
      }
      e.assumptions = j.value("assumptions", std::vector<std::string>{});
      if (j.contains("root_system")) e.root_system = j.at("root_system").get<std::string>();
      if (j.contains("rhs")) {
        const auto& r = j.at("rhs");
        e.rhs = r.is_string() ? parse_rational(r.get<std::string>()) : Rational(Integer(std::to_string(r.get<std::int64_t>())));
      }
      e.mode_exact = j.value("mode_exact", false);
      validate(e);
      out.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog JSON: ") + e.what());
  } catch (const ArithmeticError& e) {
    throw CatalogError(std::string("catalog JSON: ") + e.what());
  }
  return out;
}

}  // namespace singmod
