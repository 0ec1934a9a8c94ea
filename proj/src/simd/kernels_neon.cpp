#include <arm_neon.h>

#include <limits>

#include "jcalc/simd/kernels.hpp"

namespace jcalc::simd::detail {

namespace {

constexpr std::size_t kLanes = 2;

void add(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_s64(&dst[i], vaddq_s64(vld1q_s64(&dst[i]), vld1q_s64(&src[i])));
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(src[i]));
}

void sub(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_s64(&dst[i], vsubq_s64(vld1q_s64(&dst[i]), vld1q_s64(&src[i])));
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) - static_cast<std::uint64_t>(src[i]));
}

// NEON has no 64-bit lane multiply; the product stays scalar.
void axpy(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t a) {
  if (a == 1) return add(dst, src);
  if (a == -1) return sub(dst, src);
  const auto ua = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       ua * static_cast<std::uint64_t>(src[i]));
  }
}

std::int64_t max_abs(std::span<const std::int64_t> src) {
  const std::size_t n = src.size();
  std::size_t i = 0;
  uint64x2_t best = vdupq_n_u64(0);
  for (; i + kLanes <= n; i += kLanes) {
    // vqabsq saturates INT64_MIN to INT64_MAX.
    const uint64x2_t a = vreinterpretq_u64_s64(vqabsq_s64(vld1q_s64(&src[i])));
    best = vbslq_u64(vcgtq_u64(a, best), a, best);
  }
  std::int64_t result = static_cast<std::int64_t>(vgetq_lane_u64(best, 0));
  const auto second = static_cast<std::int64_t>(vgetq_lane_u64(best, 1));
  if (second > result) result = second;
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
  int64x2_t acc = vdupq_n_s64(0);
  for (; i + kLanes <= n; i += kLanes) acc = vorrq_s64(acc, vld1q_s64(&src[i]));
  if ((vgetq_lane_s64(acc, 0) | vgetq_lane_s64(acc, 1)) != 0) return false;
  for (; i < n; ++i)
    if (src[i] != 0) return false;
  return true;
}

}  // namespace

const Kernels neon_kernels{Backend::Neon, add, sub, axpy, max_abs, all_zero};

}  // namespace jcalc::simd::detail
