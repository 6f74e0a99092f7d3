#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "singmod/acceptance.hpp"
#include "singmod/bracket.hpp"
#include "singmod/cli.hpp"
#include "singmod/congruence.hpp"
#include "singmod/fser.hpp"
#include "singmod/lattice.hpp"
#include "singmod/report.hpp"

namespace singmod {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int prec = 8;
  bool prec_given = false;
  std::string dir;
  std::string out_dir;
  std::string form;
  std::uint64_t prime = 0;
  std::uint64_t max_prime = 100;
  std::string format = "text";
  std::string n = "3";
  std::string weights;
  std::string k, l, rhs;
  std::string names;
  std::string mode = "valuation";
  std::string root;
  std::string catalog_path;
  std::string export_path;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Rational rational_arg(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const ArithmeticError&) {
    throw UsageError(std::string("--") + what + ": not a rational number: '" + s + "'");
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int build();
  int check();
  int scan();
  int bracket_check();
  int predict();
  int predict_identity_cmd();
  int eisenstein();
  int catalog();
  int selftest();

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;

  bool json_out() const { return o_.format == "json"; }

  int fourier_prec() const {
    if (o_.prec < 4) throw UsageError("--prec must be at least 4 for Fourier-level commands");
    return o_.prec;
  }

  IgusaTower tower() const {
    if (!o_.dir.empty()) return read_form_set(o_.dir);
    return cached_tower(fourier_prec(), &err_);
  }

  // Certificates run at the requested prec, or at the stored prec for --dir.
  int scan_prec(const IgusaTower& t) const { return o_.dir.empty() || o_.prec_given ? fourier_prec() : t.prec; }

  const SiegelForm& form(const IgusaTower& t) const {
    try {
      return t.form(lower(o_.form));
    } catch (const std::out_of_range&) {
      throw UsageError("unknown form '" + o_.form + "' (expected e4, e6, chi10, chi12, psi5, phi35, phi30)");
    }
  }

  std::vector<std::string> names_for(std::size_t count) const {
    auto names = split_list(o_.names);
    if (names.empty()) return {};
    if (names.size() != count) throw UsageError("--names needs one name per weight");
    return names;
  }
};

int Session::build() {
  const int prec = fourier_prec();
  const fs::path dir = o_.out_dir.empty() ? cache_root() / ("prec-" + std::to_string(prec)) : fs::path(o_.out_dir);
  const IgusaTower t = build_tower(prec);
  if (const auto failed = tower_invariant_failures(t); !failed.empty()) {
    for (const auto& f : failed) err_ << "construction failed: invariant '" << f << "' does not hold\n";
    return kExitClaimFail;
  }
  write_form_set(dir, t);
  for (const SiegelForm* f : t.forms())
    out_ << (dir / (f->name + ".fser")).string() << "  weight " << f->weight << ", " << f->series.size() << " terms\n";
  out_ << (dir / "manifest.json").string() << "\n";
  return kExitPass;
}

int Session::check() {
  if (o_.prime == 0) throw UsageError("--prime is required");
  const IgusaTower t = tower();
  const SiegelForm& f = form(t);
  const Certificate c = check_singular(f.series, o_.prime, scan_prec(t), f.name);
  out_ << (json_out() ? certificate_to_json(c) : certificate_to_text(c));
  return c.status == CertificateStatus::pass ? kExitPass : kExitClaimFail;
}

int Session::scan() {
  const IgusaTower t = tower();
  const SiegelForm& f = form(t);
  const auto entries = scan_primes(f.series, scan_prec(t), o_.max_prime);
  if (json_out()) {
    json j = json::array();
    for (const auto& e : entries) j.push_back({{"prime", e.prime}, {"status", to_string(e.status)}, {"violations", e.violations}});
    out_ << json{{"form", f.name}, {"prec", scan_prec(t)}, {"primes", j}}.dump(2) << "\n";
  } else {
    out_ << f.name << " at prec " << scan_prec(t) << ", D_F = " << compute_DF(f.series) << "\n";
    for (const auto& e : entries)
      out_ << "  p=" << e.prime << "  " << to_string(e.status) << "  violations " << e.violations << "\n";
  }
  return kExitPass;
}

int Session::bracket_check() {
  const IgusaTower t = tower();
  const OrthoSeries& psi = t.psi5.series;
  const OrthoSeries& phi = t.phi30.series;
  const OrthoSeries lemma = bracket(psi, 5, phi, 30, 3);
  const OrthoSeries nary = nary_bracket({{psi, Rational(5)}, {phi, Rational(30)}}, 3);
  if (json_out()) {
    out_ << json{{"n", 3},
                 {"weights", {5, 30}},
                 {"bracket", {{"prec", lemma.prec()}, {"nonzero_terms", lemma.size()}}},
                 {"nary", {{"prec", nary.prec()}, {"nonzero_terms", nary.size()}}}}
                .dump(2)
         << "\n";
  } else {
    out_ << "[Ψ5, Φ30] at n=3: " << lemma.size() << " nonzero terms through prec " << lemma.prec() << "\n";
    out_ << "n-ary form of the same pair: " << nary.size() << " nonzero terms through prec " << nary.prec()
         << (nary.is_zero() ? "" : " (disagrees with the binary bracket)") << "\n";
  }
  return lemma.is_zero() ? kExitPass : kExitClaimFail;
}

int Session::predict() {
  const Rational n = rational_arg(o_.n, "n");
  std::vector<Rational> weights;
  if (!o_.weights.empty()) {
    for (const auto& w : split_list(o_.weights)) weights.push_back(rational_arg(w, "weights"));
  } else if (!o_.k.empty() && !o_.l.empty()) {
    weights = {rational_arg(o_.k, "k"), rational_arg(o_.l, "l")};
  } else {
    throw UsageError("give --weights or both --k and --l");
  }
  const auto mode = parse_mode(o_.mode);
  if (!mode) throw UsageError("--mode must be strict, valuation or identity");

  PredictionReport rep;
  if (!o_.rhs.empty() || *mode == PredictionMode::identity) {
    if (o_.rhs.empty()) throw UsageError("identity mode needs --rhs");
    if (weights.size() != 2) throw UsageError("identity mode takes exactly two weights");
    rep = predict_identity(n, weights[0], weights[1], rational_arg(o_.rhs, "rhs"));
  } else {
    rep = predict_family(n, weights, *mode);
  }
  const auto names = names_for(weights.size());
  out_ << (json_out() ? report_to_json(rep, names) : report_to_text(rep, names));
  return kExitPass;
}

int Session::predict_identity_cmd() {
  if (o_.k.empty() || o_.l.empty() || o_.rhs.empty()) throw UsageError("predict-identity needs --k, --l and --rhs");
  const PredictionReport rep = predict_identity(rational_arg(o_.n, "n"), rational_arg(o_.k, "k"),
                                                rational_arg(o_.l, "l"), rational_arg(o_.rhs, "rhs"));
  const auto names = names_for(2);
  out_ << (json_out() ? report_to_json(rep, names) : report_to_text(rep, names));
  return kExitPass;
}

int Session::eisenstein() {
  if (o_.root.empty() || o_.k.empty() || o_.l.empty()) throw UsageError("eisenstein-constant needs --root, --k and --l");
  RootSystemData root;
  try {
    root = root_system_data(o_.root);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const Rational k = rational_arg(o_.k, "k"), l = rational_arg(o_.l, "l");
  const Rational c = eisenstein_constant(root, k, l);
  if (json_out()) {
    out_ << json{{"root", root.name}, {"k", to_string(k)}, {"l", to_string(l)}, {"c", to_string(c)}}.dump(2) << "\n";
  } else {
    out_ << to_string(c) << "\n";
  }
  return kExitPass;
}

int Session::catalog() {
  std::vector<CatalogEntry> entries;
  if (o_.catalog_path.empty()) {
    entries = builtin_catalog();
  } else {
    std::ifstream in(o_.catalog_path, std::ios::binary);
    if (!in) throw UsageError("cannot read catalog " + o_.catalog_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      entries = catalog_from_json(ss.str());
    } catch (const CatalogError& e) {
      throw UsageError(o_.catalog_path + ": " + e.what());
    }
  }
  if (!o_.export_path.empty()) {
    std::ofstream out(o_.export_path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + o_.export_path);
    out << catalog_to_json(entries);
    return kExitPass;
  }
  const auto mode = parse_mode(o_.mode);
  if (!mode || *mode == PredictionMode::identity) throw UsageError("catalog --mode must be strict or valuation");
  const CatalogRun run = run_catalog(entries, *mode);
  out_ << (json_out() ? catalog_run_to_json(run) : catalog_run_to_text(run));
  return run.claims_missed() == 0 && run.mode_exact_failures.empty() ? kExitPass : kExitClaimFail;
}

int Session::selftest() {
  std::optional<IgusaTower> preloaded;
  if (!o_.dir.empty()) {
    try {
      preloaded = read_form_set(o_.dir);
    } catch (const IntegrityError& e) {
      err_ << "certificate-integrity failure: " << e.what() << "\n";
      return kExitContract;
    }
  }
  AcceptanceOptions acc;
  acc.prec = preloaded && !o_.prec_given ? preloaded->prec : fourier_prec();
  acc.tower = [&](int p) { return preloaded ? *preloaded : cached_tower(p, &err_); };
  const std::string dir = o_.dir;
  acc.cli = [dir](const std::vector<std::string>& args) {
    std::vector<std::string> full = args;
    if (!dir.empty()) full.insert(full.end(), {"--dir", dir});
    std::ostringstream sink_out, sink_err;
    return run_cli(full, sink_out, sink_err);
  };

  const auto results = run_acceptance(acc);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out_ << format_criterion(r) << "\n";
    passed += r.pass ? 1 : 0;
  }
  out_ << passed << "/" << results.size() << " criteria pass at prec " << acc.prec << "\n";
  return passed == results.size() ? kExitPass : kExitClaimFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier-level checks of singular-mod-p congruences for Siegel modular forms", "singmod"};
  app.require_subcommand(1);
  Options o;

  auto prec_opt = [&](CLI::App* sub) {
    sub->add_option("--prec", o.prec, "precision P: indices with n + m <= P")->check(CLI::Range(0, 64));
  };
  auto dir_opt = [&](CLI::App* sub) { sub->add_option("--dir", o.dir, "read forms from a built directory"); };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* build = app.add_subcommand("build", "build E4, E6, chi10, chi12, psi5, phi35, phi30 as FSER files");
  prec_opt(build);
  build->add_option("--out", o.out_dir, "output directory (default: the cache)");

  auto* check = app.add_subcommand("check", "certify that a form is singular modulo a prime");
  prec_opt(check);
  dir_opt(check);
  format_opt(check);
  check->add_option("--form", o.form, "form id")->required();
  check->add_option("--prime", o.prime, "prime p")->required();

  auto* scan = app.add_subcommand("scan", "certificate status for every prime up to a bound");
  prec_opt(scan);
  dir_opt(scan);
  format_opt(scan);
  scan->add_option("--form", o.form, "form id")->required();
  scan->add_option("--max-prime", o.max_prime, "largest prime scanned");

  auto* bcheck = app.add_subcommand("bracket-check", "evaluate the bracket of psi5 and phi30 at n = 3");
  prec_opt(bcheck);
  dir_opt(bcheck);
  format_opt(bcheck);

  auto* predict = app.add_subcommand("predict", "predict primes from the bracket coefficients");
  predict->add_option("--n", o.n, "n of the signature (n, 2)");
  predict->add_option("--weights", o.weights, "comma-separated weights");
  predict->add_option("--k", o.k, "weight of F");
  predict->add_option("--l", o.l, "weight of G");
  predict->add_option("--rhs", o.rhs, "nonzero right-hand constant (implies identity mode)");
  predict->add_option("--mode", o.mode, "strict, valuation or identity");
  predict->add_option("--names", o.names, "comma-separated form names");
  format_opt(predict);

  auto* pident = app.add_subcommand("predict-identity", "predict primes from a bracket identity with c != 0");
  pident->add_option("--n", o.n, "n of the signature (n, 2)");
  pident->add_option("--k", o.k, "weight of F");
  pident->add_option("--l", o.l, "weight of G");
  pident->add_option("--rhs", o.rhs, "right-hand constant c");
  pident->add_option("--names", o.names, "comma-separated form names");
  format_opt(pident);

  auto* eis = app.add_subcommand("eisenstein-constant", "constant of the bracket against an Eisenstein series");
  eis->add_option("--root", o.root, "E6, E7 or E8");
  eis->add_option("--k", o.k, "weight of the product");
  eis->add_option("--l", o.l, "weight of the Eisenstein series");
  format_opt(eis);

  auto* cat = app.add_subcommand("catalog", "regression over the catalog of lattices and claims");
  cat->add_option("--catalog", o.catalog_path, "JSON catalog (default: built in)");
  cat->add_option("--mode", o.mode, "strict or valuation");
  cat->add_option("--export", o.export_path, "write the catalog as JSON and exit");
  format_opt(cat);

  auto* self = app.add_subcommand("selftest", "run every acceptance criterion");
  prec_opt(self);
  dir_opt(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  for (auto* sub : {build, check, scan, bcheck, self})
    if (sub->parsed() && sub->count("--prec") > 0) o.prec_given = true;

  Session s(o, out, err);
  try {
    if (build->parsed()) return s.build();
    if (check->parsed()) return s.check();
    if (scan->parsed()) return s.scan();
    if (bcheck->parsed()) return s.bracket_check();
    if (predict->parsed()) return s.predict();
    if (pident->parsed()) return s.predict_identity_cmd();
    if (eis->parsed()) return s.eisenstein();
    if (cat->parsed()) return s.catalog();
    if (self->parsed()) return s.selftest();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "contract violation (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitContract;
  } catch (const IntegrityError& e) {
    err << "certificate-integrity failure: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitClaimFail;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace singmod
