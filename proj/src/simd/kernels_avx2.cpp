// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <limits>

#include "jcalc/simd/kernels.hpp"

namespace jcalc::simd::detail {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const std::int64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::int64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Low 64 bits of a 64x64 product; AVX2 has no 64-bit mullo.
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void add(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(&dst[i], _mm256_add_epi64(load(&dst[i]), load(&src[i])));
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(src[i]));
}

void sub(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(&dst[i], _mm256_sub_epi64(load(&dst[i]), load(&src[i])));
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) - static_cast<std::uint64_t>(src[i]));
}

void axpy(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t a) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  if (a == 1) {
    add(dst, src);
    return;
  }
  if (a == -1) {
    sub(dst, src);
    return;
  }
  const __m256i va = _mm256_set1_epi64x(a);
  for (; i + kLanes <= n; i += kLanes) {
    store(&dst[i], _mm256_add_epi64(load(&dst[i]), mullo64(load(&src[i]), va)));
  }
  const auto ua = static_cast<std::uint64_t>(a);
  for (; i < n; ++i) {
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       ua * static_cast<std::uint64_t>(src[i]));
  }
}

std::int64_t max_abs(std::span<const std::int64_t> src) {
  const std::size_t n = src.size();
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  const __m256i int_max = _mm256_set1_epi64x(std::numeric_limits<std::int64_t>::max());
  __m256i best = zero;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = load(&src[i]);
    const __m256i neg = _mm256_cmpgt_epi64(zero, v);
    __m256i a = _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
    // |INT64_MIN| wraps to INT64_MIN; saturate it.
    a = _mm256_blendv_epi8(a, int_max, _mm256_cmpgt_epi64(zero, a));
    best = _mm256_blendv_epi8(best, a, _mm256_cmpgt_epi64(a, best));
  }
  alignas(32) std::int64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  std::int64_t result = 0;
  for (std::int64_t v : lanes) result = v > result ? v : result;
  for (; i < n; ++i) {
    const std::int64_t v = src[i];
    const std::int64_t a = v == std::numeric_limits<std::int64_t>::min() ? std::numeric_limits<std::int64_t>::max()
                                                                         : (v < 0 ? -v : v);
    if (a > result) result = a;
  }
  return result;
}

bool all_zero(std::span<const std::int64_t> src) {
  const std::size_t n = src.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_or_si256(acc, load(&src[i]));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < n; ++i)
    if (src[i] != 0) return false;
  return true;
}

}  // namespace

const Kernels avx2_kernels{Backend::Avx2, add, sub, axpy, max_abs, all_zero};

}  // namespace jcalc::simd::detail
