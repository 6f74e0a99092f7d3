#include <json.hpp>
#include <sstream>

#include "singmod/report.hpp"

namespace singmod {

using nlohmann::json;

namespace {

json certificate_json(const Certificate& c) {
  json j;
  j["form"] = c.form;
  j["prime"] = c.prime;
  j["prec"] = c.prec;
  j["d_f"] = c.d_f;
  j["status"] = to_string(c.status);
  j["checked_count"] = c.checked_count;
  j["witnesses_nonvacuous"] = c.witnesses_nonvacuous;
  j["violations"] = json::array();
  for (const auto& v : c.violations)
    j["violations"].push_back(
        {{"index", {v.index.N, v.index.R, v.index.M}}, {"coeff_mod_p", v.coeff_mod_p}, {"disc_mod_p", v.disc_mod_p}});
  return j;
}

std::string series_name(const std::string& id) {
  if (id == "psi5") return "Ψ5";
  if (id == "phi30") return "Φ30";
  if (id == "phi35") return "Φ35";
  if (id == "chi10") return "χ10";
  if (id == "chi12") return "χ12";
  if (id == "e4") return "E4";
  if (id == "e6") return "E6";
  return id;
}

std::string exponent_suffix(int s) { return s >= 2 ? " (mod p^" + std::to_string(s) + ")" : ""; }

}  // namespace

std::vector<std::string> default_names(const PredictionReport& r) {
  if (r.weights.size() == 2) return {"F", "G"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r.weights.size(); ++i) out.push_back("F" + std::to_string(i + 1));
  return out;
}

std::string target_label(const Target& t, const std::vector<std::string>& names) {
  std::string s;
  for (const std::size_t i : t) s += i < names.size() ? display_name(names[i]) : "?";
  return s;
}

std::string certificate_to_json(const Certificate& c) { return certificate_json(c).dump(2) + "\n"; }

std::string report_to_json(const PredictionReport& r, const std::vector<std::string>& names_in) {
  const auto names = names_in.empty() ? default_names(r) : names_in;
  json j;
  j["n"] = to_string(r.n);
  j["weights"] = json::array();
  for (const auto& w : r.weights) j["weights"].push_back(to_string(w));
  j["mode"] = to_string(r.mode);
  j["results"] = json::array();
  for (const auto& res : r.results) {
    json t = json::array();
    for (const std::size_t i : res.target) t.push_back(names[i]);
    j["results"].push_back({{"target", t}, {"prime", res.prime}, {"exponent", res.exponent}, {"pairing", res.pairing}});
  }
  j["assumptions"] = r.assumptions;
  return j.dump(2) + "\n";
}

std::string catalog_run_to_json(const CatalogRun& run) {
  json j;
  j["mode"] = to_string(run.mode);
  j["claims_checked"] = run.claims_checked();
  j["claims_missed"] = run.claims_missed();
  j["outcomes"] = json::array();
  for (const auto& o : run.outcomes)
    j["outcomes"].push_back({{"entry", o.entry},
                             {"product", o.claim.product},
                             {"prime", o.claim.prime},
                             {"source", to_string(o.claim.source)},
                             {"checked", o.checked},
                             {"exponent", o.exponent}});
  j["extras"] = json::array();
  for (const auto& x : run.extras)
    j["extras"].push_back({{"entry", x.entry}, {"product", x.product}, {"prime", x.prime}, {"exponent", x.exponent}});
  j["mode_exact_failures"] = run.mode_exact_failures;
  return j.dump(2) + "\n";
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  const std::string name = series_name(c.form);
  switch (c.status) {
    case CertificateStatus::pass:
      os << name << " is singular modulo p=" << c.prime;
      break;
    case CertificateStatus::fail:
      os << name << " is NOT singular modulo p=" << c.prime;
      break;
    case CertificateStatus::vacuous:
      os << name << " modulo p=" << c.prime << ": vacuous (no index with Q ≢ 0)";
      break;
  }
  os << "  [prec " << c.prec << ", D_F " << c.d_f << ", checked " << c.checked_count << ", witnesses "
     << c.witnesses_nonvacuous << ", violations " << c.violations.size() << "]\n";
  std::size_t shown = 0;
  for (const auto& v : c.violations) {
    if (shown++ == 10) {
      os << "  ... " << c.violations.size() - 10 << " more\n";
      break;
    }
    os << "  a(" << v.index.N << ", " << v.index.R << ", " << v.index.M << ") ≡ " << v.coeff_mod_p
       << ", D ≡ " << v.disc_mod_p << " (mod " << c.prime << ")\n";
  }
  return os.str();
}

std::string report_to_text(const PredictionReport& r, const std::vector<std::string>& names_in) {
  const auto names = names_in.empty() ? default_names(r) : names_in;
  std::ostringstream os;
  os << "n = " << to_string(r.n) << ", weights";
  for (const auto& w : r.weights) os << ' ' << to_string(w);
  os << ", mode " << to_string(r.mode) << '\n';
  if (r.results.empty()) os << "  (no predictions)\n";
  for (const auto& res : r.results)
    os << "  " << target_label(res.target, names) << " is singular modulo p=" << res.prime
       << exponent_suffix(res.exponent) << "   (" << res.pairing << ")\n";
  os << "assumptions:";
  for (const auto& a : r.assumptions) os << "\n  - " << a;
  os << '\n';
  return os.str();
}

std::string catalog_run_to_text(const CatalogRun& run) {
  std::ostringstream os;
  std::string current;
  for (const auto& o : run.outcomes) {
    if (o.entry != current) {
      current = o.entry;
      os << current << '\n';
    }
    std::string product;
    for (const auto& p : o.claim.product) product += display_name(p);
    os << "  " << product << " is singular modulo p=" << o.claim.prime;
    if (!o.checked)
      os << "   [not checked in " << to_string(run.mode) << " mode]";
    else if (o.exponent == 0)
      os << "   [MISSED]";
    else
      os << "   [ok" << (o.exponent >= 2 ? ", s=" + std::to_string(o.exponent) : "") << "]";
    os << '\n';
  }
  if (!run.extras.empty()) {
    os << "engine extras:\n";
    for (const auto& x : run.extras) {
      std::string product;
      for (const auto& p : x.product) product += display_name(p);
      os << "  " << x.entry << ": " << product << " mod p=" << x.prime << exponent_suffix(x.exponent) << '\n';
    }
  }
  for (const auto& m : run.mode_exact_failures) os << "mode-exact mismatch: " << m << '\n';
  os << run.claims_missed() << " missed / " << run.claims_checked() << " claims verified\n";
  return os.str();
}

}  // namespace singmod
