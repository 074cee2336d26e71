#include <atomic>
#include <cstdlib>
#include <string_view>

#include "facering/simd/kernels.hpp"

namespace facering::simd {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, "scalar", &detail::axpy_scalar, &detail::scale_scalar,
                              &detail::dot_scalar};

#if defined(FACERING_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, "avx2", &detail::axpy_avx2, &detail::scale_avx2,
                            &detail::dot_avx2};

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const KernelTable* initial_choice() {
  const KernelTable* best = avx2_kernels();
  if (const char* env = std::getenv("FACERING_SIMD")) {
    if (std::string_view(env) == "scalar") return &kScalar;
  }
  return best != nullptr ? best : &kScalar;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_choice()};
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(FACERING_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

bool select_kernels(Isa isa) {
  const KernelTable* table = isa == Isa::Scalar ? &kScalar : avx2_kernels();
  if (table == nullptr) return false;
  active_slot().store(table, std::memory_order_release);
  return true;
}

}  // namespace facering::simd
