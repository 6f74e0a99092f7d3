#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "singmod/cli.hpp"
#include "singmod/fser.hpp"

namespace singmod {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifest = "manifest.json";

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IntegrityError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_if_changed(const fs::path& p, const std::string& data) {
  std::error_code ec;
  if (fs::exists(p, ec)) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (ss.str() == data) return;
  }
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << data;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, p);
}

const char* parity_name(FormParity p) { return p == FormParity::integral ? "integral" : "half_integral"; }

FormParity parse_parity(const std::string& s) {
  if (s == "integral") return FormParity::integral;
  if (s == "half_integral") return FormParity::half_integral;
  throw IntegrityError("manifest: unknown parity '" + s + "'");
}

// Serializes access to one cache directory across processes.
class DirLock {
 public:
  explicit DirLock(const fs::path& dir) {
    fs::create_directories(dir);
    const std::string path = (dir / ".lock").string();
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path);
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

void write_form_set(const fs::path& dir, const IgusaTower& tower) {
  fs::create_directories(dir);
  json forms = json::array();
  for (const SiegelForm* f : tower.forms()) {
    const std::string text = to_fser(f->series);
    const std::string file = f->name + ".fser";
    write_if_changed(dir / file, text);
    forms.push_back({{"id", f->name},
                     {"weight", f->weight},
                     {"parity", parity_name(f->parity)},
                     {"content", to_string(f->content)},
                     {"terms", f->series.size()},
                     {"file", file},
                     {"sha256", sha256_hex(text)}});
  }
  const json manifest = {{"format", "singmod-forms"}, {"version", 1}, {"prec", tower.prec}, {"forms", forms}};
  write_if_changed(dir / kManifest, manifest.dump(2) + "\n");
}

IgusaTower read_form_set(const fs::path& dir) {
  json manifest;
  try {
    manifest = json::parse(read_file(dir / kManifest));
  } catch (const json::exception& e) {
    throw IntegrityError("manifest " + (dir / kManifest).string() + " is not valid JSON: " + e.what());
  }

  IgusaTower tower;
  std::map<std::string, SiegelForm> loaded;
  try {
    if (manifest.at("format") != "singmod-forms" || manifest.at("version") != 1)
      throw IntegrityError("manifest: unsupported format");
    tower.prec = manifest.at("prec").get<int>();
    for (const auto& entry : manifest.at("forms")) {
      SiegelForm f;
      f.name = entry.at("id").get<std::string>();
      f.weight = entry.at("weight").get<int>();
      f.parity = parse_parity(entry.at("parity").get<std::string>());
      f.content = parse_rational(entry.at("content").get<std::string>());
      const fs::path file = dir / entry.at("file").get<std::string>();
      const std::string text = read_file(file);
      if (sha256_hex(text) != entry.at("sha256").get<std::string>())
        throw IntegrityError("checksum mismatch for " + file.string());
      try {
        f.series = parse_fser_ortho(text);
      } catch (const FserError& e) {
        throw IntegrityError(file.string() + ": " + e.what());
      }
      if (f.series.prec() != tower.prec) throw IntegrityError(file.string() + ": precision differs from manifest");
      if (f.series.size() != entry.at("terms").get<std::size_t>())
        throw IntegrityError(file.string() + ": term count differs from manifest");
      loaded.emplace(f.name, std::move(f));
    }
  } catch (const json::exception& e) {
    throw IntegrityError("manifest " + (dir / kManifest).string() + ": " + e.what());
  } catch (const ArithmeticError& e) {
    throw IntegrityError("manifest " + (dir / kManifest).string() + ": " + e.what());
  }

  auto take = [&](const char* id) {
    auto it = loaded.find(id);
    if (it == loaded.end()) throw IntegrityError(std::string("form set is missing ") + id);
    return std::move(it->second);
  };
  tower.generators.e4 = take("e4");
  tower.generators.e6 = take("e6");
  tower.generators.chi10 = take("chi10");
  tower.generators.chi12 = take("chi12");
  tower.psi5 = take("psi5");
  tower.phi35 = take("phi35");
  tower.phi30 = take("phi30");
  return tower;
}

fs::path cache_root() {
  if (const char* env = std::getenv("SINGMOD_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "singmod";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "singmod";
  return fs::current_path() / ".singmod-cache";
}

IgusaTower cached_tower(int prec, std::ostream* log) {
  const fs::path root = cache_root();
  DirLock lock(root);
  const fs::path dir = root / ("prec-" + std::to_string(prec));
  if (fs::exists(dir / kManifest)) return read_form_set(dir);

  if (log) *log << "building forms at prec " << prec << " into " << dir.string() << "\n";
  IgusaTower tower = build_tower(prec);
  if (const auto failed = tower_invariant_failures(tower); !failed.empty())
    throw std::runtime_error("construction invariant failed: " + failed.front());
  write_form_set(dir, tower);
  return tower;
}

std::vector<std::string> tower_invariant_failures(const IgusaTower& t) {
  std::vector<std::string> out;
  const int p = t.prec;
  const OrthoSeries sq = t.psi5.series * t.psi5.series;
  if (!(sq.prec() >= p && sq.agrees_with(t.generators.chi10.series, p))) out.emplace_back("psi5^2 = chi10");
  const OrthoSeries prod = t.phi30.series * t.psi5.series;
  if (!(prod.prec() >= p && prod.agrees_with(t.phi35.series, p))) out.emplace_back("phi30 * psi5 = phi35");
  if (swap(t.phi35.series) != -t.phi35.series) out.emplace_back("phi35 antisymmetric under swap");
  for (const SiegelForm* f : t.forms()) {
    if (!has_integer_coefficients(f->series)) out.push_back(f->name + " has integral coefficients");
    if (f->series.prec() != p) out.push_back(f->name + " carries prec " + std::to_string(p));
  }
  return out;
}

}  // namespace singmod
