#include <atomic>
#include <cstdlib>
#include <string>

#include "jcalc/errors.hpp"
#include "jcalc/simd/kernels.hpp"

namespace jcalc::simd {

namespace {

bool cpu_has(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(JCALC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(JCALC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Kernels* best_available() {
  if (const Kernels* k = kernels_for(Backend::Avx2)) return k;
  if (const Kernels* k = kernels_for(Backend::Neon)) return k;
  return &detail::scalar_kernels;
}

const Kernels* initial_choice() {
  const char* env = std::getenv("JCALC_SIMD");
  if (env != nullptr) {
    const std::string want(env);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (want == name(b)) {
        if (const Kernels* k = kernels_for(b)) return k;
      }
    }
  }
  return best_available();
}

std::atomic<const Kernels*>& active() {
  static std::atomic<const Kernels*> table{initial_choice()};
  return table;
}

}  // namespace

std::string_view name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

const Kernels* kernels_for(Backend backend) {
  if (!cpu_has(backend)) return nullptr;
  switch (backend) {
    case Backend::Scalar:
      return &detail::scalar_kernels;
    case Backend::Avx2:
#if defined(JCALC_HAVE_AVX2)
      return &detail::avx2_kernels;
#else
      return nullptr;
#endif
    case Backend::Neon:
#if defined(JCALC_HAVE_NEON)
      return &detail::neon_kernels;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon})
    if (kernels_for(b) != nullptr) out.push_back(b);
  return out;
}

const Kernels& kernels() { return *active().load(std::memory_order_acquire); }

void set_backend(Backend backend) {
  const Kernels* k = kernels_for(backend);
  if (k == nullptr) throw Error("SIMD backend " + std::string(name(backend)) + " is not available on this host");
  active().store(k, std::memory_order_release);
}

}  // namespace jcalc::simd
