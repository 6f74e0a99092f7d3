#pragma once

// Command-line front end and the on-disk form store it works from.
//
// Exit codes: 0 pass, 1 claim failure, 2 precondition or contract violation
// (including a damaged form store), 3 usage error.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singmod/igusa.hpp"

namespace singmod {

enum ExitCode : int { kExitPass = 0, kExitClaimFail = 1, kExitContract = 2, kExitUsage = 3 };

int run_cli(int argc, char** argv);
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data);

/// Writes one FSER file per form plus manifest.json. Files whose contents are
/// unchanged are left untouched, so repeated builds are byte-identical.
void write_form_set(const std::filesystem::path& dir, const IgusaTower& tower);

/// Reloads a form set, verifying every checksum and the FSER structure.
/// Throws IntegrityError on any mismatch.
IgusaTower read_form_set(const std::filesystem::path& dir);

/// $SINGMOD_CACHE, else $XDG_CACHE_HOME/singmod, else ~/.cache/singmod.
std::filesystem::path cache_root();

/// Form set for prec under the cache root: loaded when present (and
/// verified), built and stored otherwise. Holds an exclusive lock on the
/// cache directory while it works.
IgusaTower cached_tower(int prec, std::ostream* log = nullptr);

/// Invariants every built tower must satisfy; returns the names of those
/// that fail.
std::vector<std::string> tower_invariant_failures(const IgusaTower& tower);

}  // namespace singmod
