#include "macaulay/simd/fp_kernels.hpp"

namespace macaulay::simd::detail {

void submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t prod = static_cast<std::uint64_t>(c) * src[i] % p;
    dst[i] = static_cast<std::uint32_t>((dst[i] + p - prod) % p);
  }
}

void scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
  }
}

}  // namespace macaulay::simd::detail
