#pragma once

// Data-parallel kernels over int64 coefficient blocks. The truncated Magnus
// series stores each degree as a dense block, so left multiplication by a
// generator and series products reduce to the block operations below.
//
// Every backend must agree bit-for-bit with the scalar reference; the
// equivalence suite checks this for each backend the host can run.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace jcalc::simd {

enum class Backend { Scalar, Avx2, Neon };

struct Kernels {
  Backend backend;
  // dst[i] += src[i]
  void (*add)(std::span<std::int64_t> dst, std::span<const std::int64_t> src);
  // dst[i] -= src[i]
  void (*sub)(std::span<std::int64_t> dst, std::span<const std::int64_t> src);
  // dst[i] += a * src[i]  (wrapping; callers guarantee no overflow)
  void (*axpy)(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t a);
  // max |src[i]|, saturating at INT64_MAX for INT64_MIN
  std::int64_t (*max_abs)(std::span<const std::int64_t> src);
  bool (*all_zero)(std::span<const std::int64_t> src);
};

// The active table. Chosen on first use from CPU features, overridable with
// the JCALC_SIMD environment variable (scalar | avx2 | neon | auto).
const Kernels& kernels();

// nullptr when the backend was not compiled in or the CPU lacks it.
const Kernels* kernels_for(Backend backend);
std::vector<Backend> available_backends();

// Throws jcalc::Error when the backend is unavailable.
void set_backend(Backend backend);

std::string_view name(Backend backend);

namespace detail {
extern const Kernels scalar_kernels;
#if defined(JCALC_HAVE_AVX2)
extern const Kernels avx2_kernels;
#endif
#if defined(JCALC_HAVE_NEON)
extern const Kernels neon_kernels;
#endif
}  // namespace detail

}  // namespace jcalc::simd
