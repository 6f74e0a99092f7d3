#pragma once

// End-to-end acceptance criteria, shared by the `selftest` command and the
// acceptance test binary.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "singmod/igusa.hpp"
#include "singmod/ortho_series.hpp"

namespace singmod {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int prec = 8;
  /// Supplies the tower; defaults to build_tower. The CLI passes its cache.
  std::function<IgusaTower(int)> tower;
  /// Runs a CLI command line and returns its exit code. Used by the
  /// refusal check; when empty only the library-level refusal is checked.
  std::function<int(const std::vector<std::string>&)> cli;
  std::uint64_t seed = 20240601;
  int property_cases = 1000;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "[PASS] 1 title: detail (0.12 s)"
std::string format_criterion(const CriterionResult& r);

// Random sparse series for property checks.
struct SeriesSampler {
  std::mt19937_64 rng;
  int max_terms = 8;
  int max_r = 6;
  int coeff_range = 9;

  explicit SeriesSampler(std::uint64_t seed) : rng(seed) {}

  ParityClass parity();
  /// Exact polynomial (every term at order <= 2 * max_prec) in one parity
  /// class; may be empty when allow_zero is set.
  OrthoSeries::Terms polynomial(ParityClass parity, int max_prec, bool allow_zero = true);
  OrthoSeries series(ParityClass parity, int prec, bool allow_zero = true);
  int uniform(int lo, int hi);
};

/// Untruncated product of two exact polynomials by direct double loop.
OrthoSeries::Terms naive_product(const OrthoSeries::Terms& a, const OrthoSeries::Terms& b);

}  // namespace singmod
