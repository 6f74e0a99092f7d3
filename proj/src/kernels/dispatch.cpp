#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "singmod/kernels/scan.hpp"

namespace singmod::kernels {

#ifndef SINGMOD_HAVE_AVX2
namespace avx2 {
void disc_invariants(const std::int32_t*, const std::int32_t*, const std::int32_t*, std::int32_t*,
                     std::size_t) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
void residue_flags(const std::int32_t*, const std::uint32_t*, std::uint32_t, std::uint8_t*,
                   std::size_t) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
}  // namespace avx2
#endif

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SINGMOD_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("SINGMOD_SIMD")) {
    std::string_view v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa chosen = detect();
  return chosen;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void disc_invariants(std::span<const std::int32_t> n, std::span<const std::int32_t> r,
                     std::span<const std::int32_t> m, std::span<std::int32_t> out, Isa isa) {
  const std::size_t count = out.size();
  if (n.size() != count || r.size() != count || m.size() != count)
    throw std::invalid_argument("disc_invariants: length mismatch");
  for (std::size_t i = 0; i < count; ++i) {
    if (n[i] > kMaxIndex || n[i] < -kMaxIndex || r[i] > kMaxIndex || r[i] < -kMaxIndex ||
        m[i] > kMaxIndex || m[i] < -kMaxIndex)
      throw std::out_of_range("disc_invariants: index exceeds kernel range");
  }
  if (isa == Isa::avx2 && isa_available(Isa::avx2))
    avx2::disc_invariants(n.data(), r.data(), m.data(), out.data(), count);
  else
    ref::disc_invariants(n.data(), r.data(), m.data(), out.data(), count);
}

void residue_flags(std::span<const std::int32_t> values, std::span<const std::uint32_t> residues,
                   std::uint32_t p, std::span<std::uint8_t> flags, Isa isa) {
  const std::size_t count = flags.size();
  if (values.size() != count || residues.size() != count)
    throw std::invalid_argument("residue_flags: length mismatch");
  if (p < 2 || p >= (1u << 31)) throw std::out_of_range("residue_flags: modulus out of range");
  if (isa == Isa::avx2 && isa_available(Isa::avx2))
    avx2::residue_flags(values.data(), residues.data(), p, flags.data(), count);
  else
    ref::residue_flags(values.data(), residues.data(), p, flags.data(), count);
}

}  // namespace singmod::kernels
