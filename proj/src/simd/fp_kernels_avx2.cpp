#include "macaulay/simd/fp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace macaulay::simd::detail {

namespace {

// Shoup multiplication: with cs = floor(c * 2^32 / p), q = hi32(s * cs) is the quotient
// of s * c / p or one less, so s * c - q * p lies in [0, 2p) and fits in 32 bits.
__attribute__((target("avx2"))) inline __m256i mulmod(__m256i s, __m256i c, __m256i cs, __m256i p) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(s, cs), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), cs);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(s, c), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t shoup_constant(std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
}

}  // namespace

__attribute__((target("avx2"))) void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                                                 std::uint32_t c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i t = _mm256_sub_epi32(d, mulmod(s, vc, vcs, vp));
    t = _mm256_min_epu32(t, _mm256_add_epi32(t, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  if (i < n) submul_scalar(dst + i, src + i, n - i, c, p);
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcs = _mm256_set1_epi32(static_cast<int>(shoup_constant(c, p)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mulmod(d, vc, vcs, vp));
  }
  if (i < n) scale_scalar(dst + i, n - i, c, p);
}

}  // namespace macaulay::simd::detail

#endif
