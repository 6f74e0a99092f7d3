#pragma once

// Data-parallel inner loops of the certificate scan and the Laplace operator.
//
// Every kernel has a scalar reference in `ref` and, on x86-64, an AVX2 variant
// in `avx2`. The dispatching entry points pick a variant at runtime; the
// variants are required to be bit-identical (see tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>

namespace singmod::kernels {

enum class Isa { scalar, avx2 };

/// Indices passed to disc_invariants must satisfy |N|, |R|, |M| <= kMaxIndex,
/// which keeps 4NM - R^2 inside int32.
inline constexpr std::int32_t kMaxIndex = 16383;

/// Flag bits written by residue_flags.
inline constexpr std::uint8_t kValueNonzero = 1;  // value != 0 (mod p)
inline constexpr std::uint8_t kViolation = 2;     // value != 0 and residue != 0

bool isa_available(Isa isa);
/// Best available ISA, overridable with SINGMOD_SIMD=scalar|avx2.
Isa active_isa();
const char* isa_name(Isa isa);

/// out[i] = 4 N[i] M[i] - R[i]^2.
void disc_invariants(std::span<const std::int32_t> n, std::span<const std::int32_t> r,
                     std::span<const std::int32_t> m, std::span<std::int32_t> out,
                     Isa isa = active_isa());

/// Per-lane flags from values (reduced mod p) and precomputed coefficient
/// residues. Requires 2 <= p < 2^31.
void residue_flags(std::span<const std::int32_t> values, std::span<const std::uint32_t> residues,
                   std::uint32_t p, std::span<std::uint8_t> flags, Isa isa = active_isa());

namespace ref {
void disc_invariants(const std::int32_t* n, const std::int32_t* r, const std::int32_t* m,
                     std::int32_t* out, std::size_t count);
void residue_flags(const std::int32_t* values, const std::uint32_t* residues, std::uint32_t p,
                   std::uint8_t* flags, std::size_t count);
}  // namespace ref

namespace avx2 {
void disc_invariants(const std::int32_t* n, const std::int32_t* r, const std::int32_t* m,
                     std::int32_t* out, std::size_t count);
void residue_flags(const std::int32_t* values, const std::uint32_t* residues, std::uint32_t p,
                   std::uint8_t* flags, std::size_t count);
}  // namespace avx2

}  // namespace singmod::kernels
