// Kernel variant selection. The scalar table is always present; SIMD tables
// register here when their translation units are part of the build and the
// CPU supports them.

#include "conic/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "conic/fields.hpp"

namespace conic::kern {

FieldParams params_of(const BinaryField& f) {
  return {f.degree(), f.modulus(), f.trace_mask()};
}

#if defined(CONIC_HAVE_AVX2_UNIT)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

std::vector<const Ops*> available_ops() {
  std::vector<const Ops*> v{&scalar_ops()};
#if defined(CONIC_HAVE_AVX2_UNIT)
  if (__builtin_cpu_supports("avx2")) v.push_back(&avx2_ops());
#endif
#if defined(__aarch64__)
  v.push_back(&neon_ops());
#endif
  return v;
}

const Ops& active_ops() {
  static const Ops* chosen = [] {
    const auto avail = available_ops();
    if (const char* want = std::getenv("CONIC_SCHEMES_KERNEL")) {
      for (const Ops* o : avail) {
        if (std::strcmp(o->name, want) == 0) return o;
      }
      return avail.front();  // unknown or unavailable name: scalar
    }
    return avail.back();  // variants are listed in increasing preference
  }();
  return *chosen;
}

}  // namespace conic::kern
