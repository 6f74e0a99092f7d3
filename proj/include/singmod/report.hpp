#pragma once

// JSON and plain-text renderings of certificates and prediction reports.

#include <string>
#include <vector>

#include "singmod/congruence.hpp"

namespace singmod {

std::string certificate_to_json(const Certificate& c);
std::string report_to_json(const PredictionReport& r, const std::vector<std::string>& names = {});
std::string catalog_run_to_json(const CatalogRun& run);

/// Default slot names: F, G for pairs and F1, F2, ... for larger families.
std::vector<std::string> default_names(const PredictionReport& r);
/// Concatenated display names of the target's forms.
std::string target_label(const Target& t, const std::vector<std::string>& names);

/// "Ψ5 is singular modulo p=3" style lines.
std::string certificate_to_text(const Certificate& c);
std::string report_to_text(const PredictionReport& r, const std::vector<std::string>& names = {});
std::string catalog_run_to_text(const CatalogRun& run);

}  // namespace singmod
