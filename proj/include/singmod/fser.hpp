#pragma once

// FSER: line-oriented exact text format for series.
//
//   FSER 1
//   kind ortho|jacobi|q
//   scales <...>          ortho: "2 2 2", jacobi: "<qscale> <zscale>", q: "<scale>"
//   prec <int>
//   minorder <int>
//   <term lines>          ortho: "N R M c", jacobi: "q z c", q: "e c"
//
// Terms are sorted (by (N+M, N, R) for ortho, lexicographically otherwise),
// carry no zeros or duplicates, and round-trip exactly.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "singmod/jacobi_series.hpp"
#include "singmod/ortho_series.hpp"
#include "singmod/qseries.hpp"

namespace singmod {

class FserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FserKind { ortho, jacobi, q };

std::string to_fser(const OrthoSeries& s);
std::string to_fser(const JacobiSeries& s);
std::string to_fser(const QSeries& s);

/// Reads the kind line without parsing the body.
FserKind fser_kind(std::string_view text);

OrthoSeries parse_fser_ortho(std::string_view text);
JacobiSeries parse_fser_jacobi(std::string_view text);
QSeries parse_fser_q(std::string_view text);

}  // namespace singmod
