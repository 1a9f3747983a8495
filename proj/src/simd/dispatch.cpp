#include <atomic>
#include <cstdlib>
#include <string_view>

#include "macaulay/error.hpp"
#include "macaulay/simd/fp_kernels.hpp"

namespace macaulay::simd {

namespace {

const FpKernels kScalar{Isa::Scalar, "scalar", detail::submul_scalar, detail::scale_scalar};
#if defined(__x86_64__) || defined(__i386__)
const FpKernels kAvx2{Isa::Avx2, "avx2", detail::submul_avx2, detail::scale_avx2};
#endif

std::atomic<const FpKernels*>& current() {
  static std::atomic<const FpKernels*> ptr{&kernels(detect())};
  return ptr;
}

}  // namespace

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect() {
  if (const char* env = std::getenv("MACAULAY_ISA"); env && std::string_view(env) == "scalar") return Isa::Scalar;
  return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

const FpKernels& kernels(Isa isa) {
  if (!supported(isa)) throw UsageError("instruction set not supported on this CPU");
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const FpKernels& active() { return *current().load(std::memory_order_relaxed); }

void set_active(Isa isa) { current().store(&kernels(isa), std::memory_order_relaxed); }

}  // namespace macaulay::simd
