#include "singmod/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace singmod {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }
  std::optional<int> number() {
    const std::size_t start = i;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    if (i - start > 6) throw CatalogError("number too large in lattice label");
    return std::stoi(std::string(s.substr(start, i - start)));
  }
};

[[noreturn]] void bad(std::string_view label, const std::string& why) {
  throw CatalogError("cannot parse lattice label '" + std::string(label) + "': " + why);
}

}  // namespace

int signature_n(std::string_view label) {
  Cursor c{label};
  int rank = 0;
  int planes = 0;
  if (label.empty()) bad(label, "empty label");
  while (true) {
    const int mult = c.number().value_or(1);
    if (mult < 1) bad(label, "zero multiplicity");
    const char kind = c.peek();
    int summand = 0;
    bool plane = false;
    switch (kind) {
      case 'U':
        ++c.i;
        plane = true;
        summand = 2;
        break;
      case 'A':
      case 'D':
      case 'E': {
        ++c.i;
        const auto k = c.number();
        if (!k) bad(label, "root lattice without rank");
        if (kind == 'A' && *k < 1) bad(label, "A_k needs k >= 1");
        if (kind == 'D' && *k < 4) bad(label, "D_k needs k >= 4");
        if (kind == 'E' && (*k < 6 || *k > 8)) bad(label, "E_k needs 6 <= k <= 8");
        summand = *k;
        if (c.eat('\'')) {
          if (kind == 'A') bad(label, "dual rescaling is only defined for D and E here");
          if (c.peek() != '(') bad(label, "dual summand needs a scale");
        }
        break;
      }
      default:
        bad(label, "unexpected character");
    }
    if (c.eat('(')) {
      const auto m = c.number();
      if (!m || *m < 1 || !c.eat(')')) bad(label, "malformed scale");
    }
    rank += mult * summand;
    if (plane) planes += mult;
    if (c.done()) break;
    if (!c.eat('+')) bad(label, "expected '+'");
  }
  if (planes != 2) bad(label, "signature (n, 2) needs exactly two hyperbolic planes");
  const int n = rank - 2;
  if (n < 3) bad(label, "n must be at least 3");
  return n;
}

RootSystemData root_system_data(std::string_view name) {
  int d = 0, h = 0;
  if (name == "E6") {
    d = 6;
    h = 12;
  } else if (name == "E7") {
    d = 7;
    h = 18;
  } else if (name == "E8") {
    d = 8;
    h = 30;
  } else {
    throw CatalogError("unknown root system '" + std::string(name) + "'");
  }
  return {std::string(name), d, h, make_rational(long{h} * (h + 1) * d, 24)};
}

const char* to_string(ClaimSource s) {
  switch (s) {
    case ClaimSource::strict:
      return "strict";
    case ClaimSource::valuation:
      return "valuation";
    case ClaimSource::identity:
      return "identity";
  }
  return "?";
}

std::optional<ClaimSource> parse_claim_source(std::string_view s) {
  if (s == "strict") return ClaimSource::strict;
  if (s == "valuation") return ClaimSource::valuation;
  if (s == "identity") return ClaimSource::identity;
  return std::nullopt;
}

void validate(const CatalogEntry& e) {
  const std::string id = e.id();
  if (signature_n(e.lattice.label) != e.lattice.n)
    throw CatalogError(id + ": stored n does not match the label");
  if (e.forms.empty()) throw CatalogError(id + ": no forms");
  std::set<std::string> names;
  for (const auto& f : e.forms) {
    if (f.name.empty() || f.weight < 0) throw CatalogError(id + ": malformed form");
    if (!names.insert(f.name).second) throw CatalogError(id + ": duplicate form " + f.name);
  }
  if (e.is_identity() && e.forms.size() != 2) throw CatalogError(id + ": identity entries need two forms");
  if (e.root_system) root_system_data(*e.root_system);
  if (e.rhs && *e.rhs == 0) throw CatalogError(id + ": identity constant must be nonzero");
  for (const auto& c : e.claims) {
    if (c.product.empty()) throw CatalogError(id + ": empty claim product");
    std::set<std::string> seen;
    for (const auto& p : c.product) {
      if (!names.count(p)) throw CatalogError(id + ": claim names unknown form " + p);
      if (!seen.insert(p).second) throw CatalogError(id + ": claim repeats form " + p);
    }
    if (!is_prime(c.prime)) throw CatalogError(id + ": claim prime " + std::to_string(c.prime) + " is not prime");
  }
}

std::string display_name(std::string_view ascii) {
  auto swap_prefix = [&](std::string_view from, const char* to) -> std::optional<std::string> {
    if (ascii.substr(0, from.size()) == from && ascii.size() > from.size() &&
        std::isdigit(static_cast<unsigned char>(ascii[from.size()])))
      return std::string(to) + std::string(ascii.substr(from.size()));
    return std::nullopt;
  };
  if (auto s = swap_prefix("Psi", "Ψ")) return *s;
  if (auto s = swap_prefix("Phi", "Φ")) return *s;
  if (auto s = swap_prefix("M", "𝔐")) return *s;
  return std::string(ascii);
}

}  // namespace singmod
