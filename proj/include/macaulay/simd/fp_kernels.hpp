#pragma once

#include <cstddef>
#include <cstdint>

// Row kernels for dense elimination over F_p (p < 2^31). Every entry passed in must
// already be reduced into [0, p).
namespace macaulay::simd {

enum class Isa { Scalar, Avx2 };

using SubmulFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                          std::uint32_t p);
using ScaleFn = void (*)(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);

struct FpKernels {
  Isa isa;
  const char* name;
  // dst[i] = dst[i] - c * src[i] mod p
  SubmulFn submul;
  // dst[i] = c * dst[i] mod p
  ScaleFn scale;
};

bool supported(Isa isa);
// Best kernel set the CPU supports; MACAULAY_ISA=scalar forces the reference kernels.
Isa detect();

// Throws UsageError when the CPU lacks the instruction set.
const FpKernels& kernels(Isa isa);
const FpKernels& active();
void set_active(Isa isa);

namespace detail {
void submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
#if defined(__x86_64__) || defined(__i386__)
void submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
#endif
}  // namespace detail

}  // namespace macaulay::simd
