#pragma once

// Singular-mod-p certificates on Fourier series and the prime-prediction
// calculus on bracket coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singmod/bracket.hpp"
#include "singmod/lattice.hpp"
#include "singmod/ortho_series.hpp"

namespace singmod {

// ---------------------------------------------------------------------------
// Certificates

enum class ViolationKind { non_integral, prime_divides_df, insufficient_precision, not_prime };

class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(ViolationKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ViolationKind kind() const { return kind_; }

 private:
  ViolationKind kind_;
};

const char* to_string(ViolationKind kind);

/// Smallest D > 0 with D * Q(lambda) integral on the support, where
/// Q = (4NM - R^2) / 16.
std::uint64_t compute_DF(const OrthoSeries& f);

enum class CertificateStatus { pass, fail, vacuous };
const char* to_string(CertificateStatus s);

struct Violation {
  IndexKey index;
  std::uint64_t coeff_mod_p = 0;
  std::uint64_t disc_mod_p = 0;  // 4NM - R^2 reduced mod p
};

struct Certificate {
  std::string form;
  std::uint64_t prime = 0;
  int prec = 0;
  std::uint64_t d_f = 0;
  CertificateStatus status = CertificateStatus::vacuous;
  std::vector<Violation> violations;
  std::size_t checked_count = 0;
  std::size_t witnesses_nonvacuous = 0;  // scanned indices with Q(lambda) != 0 mod p
};

/// Scans every support index with N + M <= 2 prec. Throws ContractViolation
/// when p is not prime, p | D_F, a scanned coefficient is not integral, or
/// prec exceeds the precision of f.
Certificate check_singular(const OrthoSeries& f, std::uint64_t p, int prec, const std::string& name = {});

struct PrimeScanEntry {
  std::uint64_t prime = 0;
  CertificateStatus status = CertificateStatus::vacuous;
  std::size_t violations = 0;
};

/// Certificate status for every prime <= max_prime not dividing D_F.
std::vector<PrimeScanEntry> scan_primes(const OrthoSeries& f, int prec, std::uint64_t max_prime);

// ---------------------------------------------------------------------------
// Prediction

enum class PredictionMode { strict, valuation, identity };
const char* to_string(PredictionMode m);
std::optional<PredictionMode> parse_mode(const std::string& s);

/// Positions into PredictionReport::weights, sorted ascending.
using Target = std::vector<std::size_t>;

struct PredictionResult {
  Target target;
  std::uint64_t prime = 0;
  int exponent = 0;     // singular mod prime^exponent
  std::string pairing;  // e.g. "k=11 l=12 slot=G"
};

struct PredictionReport {
  Rational n;
  std::vector<Rational> weights;
  PredictionMode mode = PredictionMode::valuation;
  std::vector<PredictionResult> results;  // sorted by (target, prime)
  std::vector<std::string> assumptions;

  /// Exponent for (target, prime), 0 when absent.
  int exponent(const Target& target, std::uint64_t prime) const;
};

/// Valuation-mode exponents for one prime; nullopt where the target's own
/// scalar vanishes. With rhs == nullopt the identity formulas reduce to the
/// bracket-vanishing case, v_p(c) = +infinity.
struct SlotExponents {
  std::optional<int> f, g, fg;
};
SlotExponents slot_exponents(const BracketCoefficients& bc, std::uint64_t p,
                             const std::optional<Rational>& rhs = std::nullopt);

/// F of weight k against G of weight l; targets {0} = F, {1} = G, {0,1} = FG.
PredictionReport predict_pair(const Rational& n, const Rational& k, const Rational& l, PredictionMode mode);

/// Every unordered pair of disjoint nonempty sub-multisets; results keep the
/// largest exponent per (target, prime).
PredictionReport predict_family(const Rational& n, const std::vector<Rational>& weights, PredictionMode mode);

/// AB lap(FG) - BC lap(F) G - AC F lap(G) = c X with c != 0.
PredictionReport predict_identity(const Rational& n, const Rational& k, const Rational& l, const Rational& rhs);

/// l (d/2 - l) [h(h+1) - Q(rho)].
Rational eisenstein_constant(const RootSystemData& root, const Rational& k, const Rational& l);

// ---------------------------------------------------------------------------
// Catalog regression

struct ClaimOutcome {
  std::string entry;
  Claim claim;
  int exponent = 0;  // 0 = missed
  bool checked = true;  // false for claims outside the requested mode
};

struct ExtraPrediction {
  std::string entry;
  std::vector<std::string> product;
  std::uint64_t prime = 0;
  int exponent = 0;
};

struct CatalogRun {
  PredictionMode mode = PredictionMode::valuation;
  std::vector<ClaimOutcome> outcomes;
  std::vector<ExtraPrediction> extras;
  /// Mode-exact entries whose prediction set differs from their claim set.
  std::vector<std::string> mode_exact_failures;

  std::size_t claims_checked() const;
  std::size_t claims_missed() const;
};

/// strict/valuation run predict_family per entry (identity entries always use
/// their identity). In strict mode only claims tagged strict or identity are
/// checked.
CatalogRun run_catalog(const std::vector<CatalogEntry>& catalog, PredictionMode mode);

}  // namespace singmod
