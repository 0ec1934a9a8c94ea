#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "jcalc/magnus.hpp"
#include "jcalc/simd/kernels.hpp"
#include "support.hpp"

using namespace jcalc;
using simd::Backend;
using simd::Kernels;

namespace {

std::vector<std::int64_t> random_block(std::mt19937_64& rng, std::size_t n, bool extreme) {
  std::vector<std::int64_t> out(n);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> any(std::numeric_limits<std::int64_t>::min(),
                                                  std::numeric_limits<std::int64_t>::max());
  for (auto& x : out) x = extreme ? any(rng) : small(rng);
  if (extreme && n > 0) out[n / 2] = std::numeric_limits<std::int64_t>::min();
  return out;
}

struct Restore {
  Backend previous = simd::kernels().backend;
  ~Restore() { simd::set_backend(previous); }
};

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(simd::kernels_for(Backend::Scalar) != nullptr);
  const auto backends = simd::available_backends();
  CHECK(std::find(backends.begin(), backends.end(), Backend::Scalar) != backends.end());
  MESSAGE("active backend: " << simd::name(simd::kernels().backend));
}

TEST_CASE("every backend matches the scalar reference") {
  const Kernels& ref = *simd::kernels_for(Backend::Scalar);
  std::mt19937_64 rng(107);
  for (Backend b : simd::available_backends()) {
    const Kernels& k = *simd::kernels_for(b);
    CAPTURE(simd::name(b));
    for (std::size_t n = 0; n <= 37; ++n)
      for (int rep = 0; rep < 6; ++rep) {
        const bool extreme = rep % 2 == 1;
        const auto src = random_block(rng, n, extreme);
        const auto base = random_block(rng, n, extreme);
        const std::int64_t a = extreme ? static_cast<std::int64_t>(rng()) : std::int64_t{-7} + rep;

        auto d1 = base, d2 = base;
        ref.add(d1, src);
        k.add(d2, src);
        CHECK(d1 == d2);
        d1 = base, d2 = base;
        ref.sub(d1, src);
        k.sub(d2, src);
        CHECK(d1 == d2);
        d1 = base, d2 = base;
        ref.axpy(d1, src, a);
        k.axpy(d2, src, a);
        CHECK(d1 == d2);
        CHECK(ref.max_abs(src) == k.max_abs(src));
        CHECK(ref.all_zero(src) == k.all_zero(src));
        const std::vector<std::int64_t> zeros(n, 0);
        CHECK(k.all_zero(zeros));
      }
  }
}

TEST_CASE("series results do not depend on the backend") {
  Restore restore;
  std::mt19937_64 rng(109);
  std::vector<Word> words;
  for (int t = 0; t < 40; ++t) words.push_back(support::random_word(rng, 3, 16));
  simd::set_backend(Backend::Scalar);
  std::vector<TruncSeries> reference;
  for (const Word& w : words) reference.push_back(magnus(w, 5) * magnus(w.inverse() * w * w, 5));
  for (Backend b : simd::available_backends()) {
    simd::set_backend(b);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(magnus(words[i], 5) * magnus(words[i].inverse() * words[i] * words[i], 5) == reference[i]);
    }
  }
  for (Backend b : {Backend::Avx2, Backend::Neon})
    if (simd::kernels_for(b) == nullptr) CHECK_THROWS_AS(simd::set_backend(b), Error);
}
