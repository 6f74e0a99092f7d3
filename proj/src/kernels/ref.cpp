#include "singmod/kernels/scan.hpp"

namespace singmod::kernels::ref {

void disc_invariants(const std::int32_t* n, const std::int32_t* r, const std::int32_t* m,
                     std::int32_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t d = 4 * std::int64_t{n[i]} * m[i] - std::int64_t{r[i]} * r[i];
    out[i] = static_cast<std::int32_t>(d);
  }
}

void residue_flags(const std::int32_t* values, const std::uint32_t* residues, std::uint32_t p,
                   std::uint8_t* flags, std::size_t count) {
  const std::int64_t mod = p;
  for (std::size_t i = 0; i < count; ++i) {
    const bool nonzero = (std::int64_t{values[i]} % mod) != 0;
    std::uint8_t f = 0;
    if (nonzero) {
      f |= kValueNonzero;
      if (residues[i] != 0) f |= kViolation;
    }
    flags[i] = f;
  }
}

}  // namespace singmod::kernels::ref
