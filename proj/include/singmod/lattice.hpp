#pragma once

// Symbolic lattice descriptors and the catalog of congruence claims for
// reflective products on O(n, 2).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singmod/exact.hpp"

namespace singmod {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeSpec {
  std::string label;  // e.g. "2U+A1", "2U(2)+A2", "2U+E6'(3)"
  int n = 0;          // signature (n, 2)
  std::string notes;
};

/// Rank of the positive-definite part of a label built from U, U(m), A_k,
/// A_k(m), D_k, D_k'(m), E_k and E_k'(m) summands, each with an optional
/// multiplicity ("2U+2A2"). Exactly two hyperbolic planes are required and the
/// result must be at least 3. Throws CatalogError otherwise.
int signature_n(std::string_view label);

struct RootSystemData {
  std::string name;  // E6, E7, E8
  int d = 0;         // rank
  int h = 0;         // Coxeter number
  Rational weyl_norm;  // Q(rho) = h(h+1)d/24
};

RootSystemData root_system_data(std::string_view name);

enum class ClaimSource { strict, valuation, identity };
const char* to_string(ClaimSource s);
std::optional<ClaimSource> parse_claim_source(std::string_view s);

struct FormSpec {
  std::string name;  // ASCII: Psi5, Phi30, M7, G4
  int weight = 0;
};

struct Claim {
  std::vector<std::string> product;  // subset of the entry's form names
  std::uint64_t prime = 0;
  ClaimSource source = ClaimSource::strict;
};

struct CatalogEntry {
  LatticeSpec lattice;
  std::vector<FormSpec> forms;
  std::vector<Claim> claims;
  std::vector<std::string> assumptions;
  /// Identity entries: forms[0] is F and forms[1] is G in
  /// [F, G] = c * (product form). The constant is `rhs`, or is derived from
  /// the root system through eisenstein_constant.
  std::optional<std::string> root_system;
  std::optional<Rational> rhs;
  /// The valuation-mode prediction set must equal the claim set exactly.
  bool mode_exact = false;
  std::string tag;  // distinguishes entries sharing a lattice

  bool is_identity() const { return root_system.has_value() || rhs.has_value(); }
  std::string id() const { return tag.empty() ? lattice.label : lattice.label + " [" + tag + "]"; }
};

/// Throws CatalogError when an entry breaks an invariant: claim products must
/// be nonempty subsets of the forms, primes must be prime, n must match the
/// label, identity entries need exactly two forms.
void validate(const CatalogEntry& e);

const std::vector<CatalogEntry>& builtin_catalog();

std::string catalog_to_json(const std::vector<CatalogEntry>& catalog);
/// Parses and validates a catalog document.
std::vector<CatalogEntry> catalog_from_json(std::string_view text);

/// Display name: "Psi5" -> "Ψ5", "Phi30" -> "Φ30", "M7" -> "𝔐7".
std::string display_name(std::string_view ascii);

}  // namespace singmod
