#include <limits>

#include "jcalc/simd/kernels.hpp"

namespace jcalc::simd::detail {

namespace {

void add(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(src[i]));
}

void sub(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) - static_cast<std::uint64_t>(src[i]));
}

void axpy(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t a) {
  // Unsigned arithmetic gives the wrapping product the vector backends compute.
  const auto ua = static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       ua * static_cast<std::uint64_t>(src[i]));
  }
}

std::int64_t max_abs(std::span<const std::int64_t> src) {
  std::int64_t best = 0;
  for (std::int64_t v : src) {
    const std::int64_t a = v == std::numeric_limits<std::int64_t>::min() ? std::numeric_limits<std::int64_t>::max()
                                                                         : (v < 0 ? -v : v);
    if (a > best) best = a;
  }
  return best;
}

bool all_zero(std::span<const std::int64_t> src) {
  for (std::int64_t v : src)
    if (v != 0) return false;
  return true;
}

}  // namespace

const Kernels scalar_kernels{Backend::Scalar, add, sub, axpy, max_abs, all_zero};

}  // namespace jcalc::simd::detail
