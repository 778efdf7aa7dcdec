#include <cstdlib>
#include <cstring>

#include "singtuple/kernels.h"

namespace singtuple::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar, &detail::matvec_scalar,
                                 &detail::max_abs_scalar};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelTable table{Isa::kAvx2, &detail::matvec_avx2,
                                 &detail::max_abs_avx2};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* forced = std::getenv("SINGTUPLE_ISA");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0)
      return &scalar_kernels();
    const KernelTable* avx2 = avx2_kernels();
    return avx2 != nullptr ? avx2 : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace singtuple::kernels
