#include <immintrin.h>

#include "singmod/kernels/scan.hpp"

namespace singmod::kernels::avx2 {

void disc_invariants(const std::int32_t* n, const std::int32_t* r, const std::int32_t* m,
                     std::int32_t* out, std::size_t count) {
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i vn = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(n + i));
    const __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(r + i));
    const __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i four_nm = _mm256_slli_epi32(_mm256_mullo_epi32(vn, vm), 2);
    const __m256i rr = _mm256_mullo_epi32(vr, vr);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi32(four_nm, rr));
  }
  ref::disc_invariants(n + i, r + i, m + i, out + i, count - i);
}

namespace {

// x - p*floor(x/p). Exact: |x| < 2^31 and p < 2^31, so the correctly rounded
// quotient never crosses an integer boundary and every product fits in 53 bits.
inline __m256d remainder_pd(__m256d x, __m256d p) {
  const __m256d q = _mm256_floor_pd(_mm256_div_pd(x, p));
  return _mm256_sub_pd(x, _mm256_mul_pd(q, p));
}

}  // namespace

void residue_flags(const std::int32_t* values, const std::uint32_t* residues, std::uint32_t p,
                   std::uint8_t* flags, std::size_t count) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d zero_pd = _mm256_setzero_pd();
  const __m256i zero_si = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i));
    const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(v));
    const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(v, 1));
    const int nz_lo = _mm256_movemask_pd(_mm256_cmp_pd(remainder_pd(lo, vp), zero_pd, _CMP_NEQ_OQ));
    const int nz_hi = _mm256_movemask_pd(_mm256_cmp_pd(remainder_pd(hi, vp), zero_pd, _CMP_NEQ_OQ));
    const unsigned value_nz = static_cast<unsigned>(nz_lo | (nz_hi << 4));

    const __m256i res = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(residues + i));
    const unsigned res_zero = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(res, zero_si))));
    const unsigned viol = value_nz & ~res_zero & 0xffu;

    for (int lane = 0; lane < 8; ++lane) {
      flags[i + lane] = static_cast<std::uint8_t>(((value_nz >> lane) & 1u) |
                                                  (((viol >> lane) & 1u) << 1));
    }
  }
  ref::residue_flags(values + i, residues + i, p, flags + i, count - i);
}

}  // namespace singmod::kernels::avx2
