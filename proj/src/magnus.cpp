#include "jcalc/magnus.hpp"

#include <limits>

#include "jcalc/simd/kernels.hpp"

namespace jcalc {

namespace {

constexpr std::size_t kMaxCoefficients = std::size_t{1} << 24;
// Headroom kept below INT64_MAX so that one more step cannot wrap.
constexpr std::int64_t kSafeMagnitude = std::int64_t{1} << 60;

}  // namespace

TruncSeries::TruncSeries(int rank, int bound) : rank_(rank), bound_(bound) {
  if (rank < 1) throw PreconditionError("series rank must be >= 1, got " + std::to_string(rank));
  if (bound < 0) throw PreconditionError("series bound must be >= 0, got " + std::to_string(bound));
  std::size_t total = 0;
  std::size_t power = 1;
  for (int d = 0; d <= bound; ++d) {
    powers_.push_back(power);
    offsets_.push_back(total);
    total += power;
    if (total > kMaxCoefficients) {
      throw PreconditionError("series of rank " + std::to_string(rank) + " and bound " + std::to_string(bound) +
                              " exceeds the dense storage limit");
    }
    power *= static_cast<std::size_t>(rank);
  }
  coeffs_.assign(total, 0);
}

TruncSeries TruncSeries::one(int rank, int bound) {
  TruncSeries s(rank, bound);
  s.coeffs_[0] = 1;
  return s;
}

std::size_t TruncSeries::index_of(std::span<const int> monomial) const {
  if (monomial.size() > static_cast<std::size_t>(bound_)) {
    throw PreconditionError("monomial degree " + std::to_string(monomial.size()) + " above bound " +
                            std::to_string(bound_));
  }
  std::size_t idx = 0;
  for (int g : monomial) {
    if (g < 1 || g > rank_) throw Error("monomial letter " + std::to_string(g) + " outside rank");
    idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g - 1);
  }
  return offsets_[monomial.size()] + idx;
}

std::int64_t TruncSeries::coefficient(std::span<const int> monomial) const {
  if (monomial.size() > static_cast<std::size_t>(bound_)) return 0;
  return coeffs_[index_of(monomial)];
}

void TruncSeries::set_coefficient(std::span<const int> monomial, std::int64_t value) {
  coeffs_[index_of(monomial)] = value;
}

std::span<const std::int64_t> TruncSeries::degree_block(int d) const {
  return std::span<const std::int64_t>(coeffs_).subspan(offsets_.at(static_cast<std::size_t>(d)), block_size(d));
}

std::span<std::int64_t> TruncSeries::degree_block(int d) {
  return std::span<std::int64_t>(coeffs_).subspan(offsets_.at(static_cast<std::size_t>(d)), block_size(d));
}

void TruncSeries::left_multiply(Letter letter) {
  if (letter.gen() < 1 || letter.gen() > rank_) throw Error("letter outside series rank");
  const auto& k = simd::kernels();
  const auto slot = static_cast<std::size_t>(letter.gen() - 1);
  // X_i * (degree d-1 block) lands in the i-th contiguous slice of degree d.
  auto slice = [&](int d) { return degree_block(d).subspan(slot * block_size(d - 1), block_size(d - 1)); };
  if (letter.sign() > 0) {
    for (int d = bound_; d >= 1; --d) k.add(slice(d), degree_block(d - 1));
  } else {
    // R = S - X_i R, solved upward in degree.
    for (int d = 1; d <= bound_; ++d) k.sub(slice(d), degree_block(d - 1));
  }
}

bool TruncSeries::is_one() const {
  if (coeffs_[0] != 1) return false;
  return simd::kernels().all_zero(std::span<const std::int64_t>(coeffs_).subspan(1));
}

int TruncSeries::lowest_positive_degree() const {
  const auto& k = simd::kernels();
  for (int d = 1; d <= bound_; ++d)
    if (!k.all_zero(degree_block(d))) return d;
  return 0;
}

TruncSeries TruncSeries::truncated(int bound) const {
  if (bound > bound_) throw PreconditionError("cannot raise a truncation bound");
  TruncSeries out(rank_, bound);
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(out.coeffs_.size()), out.coeffs_.begin());
  return out;
}

std::vector<std::pair<TruncSeries::Monomial, std::int64_t>> TruncSeries::terms() const {
  std::vector<std::pair<Monomial, std::int64_t>> out;
  for (int d = 0; d <= bound_; ++d) {
    auto block = degree_block(d);
    for (std::size_t idx = 0; idx < block.size(); ++idx) {
      if (block[idx] == 0) continue;
      Monomial m(static_cast<std::size_t>(d));
      std::size_t rest = idx;
      for (int pos = d - 1; pos >= 0; --pos) {
        m[static_cast<std::size_t>(pos)] = static_cast<int>(rest % static_cast<std::size_t>(rank_)) + 1;
        rest /= static_cast<std::size_t>(rank_);
      }
      out.emplace_back(std::move(m), block[idx]);
    }
  }
  return out;
}

namespace {

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  check_same_rank(a.rank(), b.rank());
  if (a.bound() != b.bound()) {
    throw PreconditionError("series bounds differ: " + std::to_string(a.bound()) + " vs " + std::to_string(b.bound()));
  }
}

std::span<const std::int64_t> all_coefficients(const TruncSeries& s) {
  auto first = s.degree_block(0);
  auto last = s.degree_block(s.bound());
  return {first.data(), static_cast<std::size_t>(last.data() + last.size() - first.data())};
}

void check_sum_headroom(const TruncSeries& a, const TruncSeries& b) {
  const auto& k = simd::kernels();
  if (k.max_abs(all_coefficients(a)) >= kSafeMagnitude || k.max_abs(all_coefficients(b)) >= kSafeMagnitude) {
    throw OverflowError("series coefficients exceed 2^60");
  }
}

}  // namespace

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  check_compatible(*this, other);
  check_sum_headroom(*this, other);
  simd::kernels().add(coeffs_, other.coeffs_);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  check_compatible(*this, other);
  check_sum_headroom(*this, other);
  simd::kernels().sub(coeffs_, other.coeffs_);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  const auto& k = simd::kernels();
  const __int128 ma = k.max_abs(all_coefficients(a));
  const __int128 mb = k.max_abs(all_coefficients(b));
  // Each output coefficient sums at most bound+1 products.
  if (ma * mb * (a.bound() + 1) >= kSafeMagnitude) throw OverflowError("series product may exceed 2^60");
  TruncSeries out(a.rank(), a.bound());
  for (int d = 0; d <= a.bound(); ++d) {
    auto dst = out.degree_block(d);
    for (int e = 0; e <= d; ++e) {
      auto left = a.degree_block(e);
      auto right = b.degree_block(d - e);
      for (std::size_t idx = 0; idx < left.size(); ++idx) {
        if (left[idx] == 0) continue;
        k.axpy(dst.subspan(idx * right.size(), right.size()), right, left[idx]);
      }
    }
  }
  return out;
}

std::string to_string(const TruncSeries& s) {
  auto terms = s.terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const std::string magnitude =
        c == std::numeric_limits<std::int64_t>::min() ? "9223372036854775808" : std::to_string(negative ? -c : c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (int g : m) {
      if (!body.empty()) body += ' ';
      body += "X" + std::to_string(g);
    }
    if (body.empty()) {
      out += magnitude;
    } else if (magnitude == "1") {
      out += body;
    } else {
      out += magnitude + "*" + body;
    }
  }
  return out;
}

TruncSeries magnus(const Word& w, int bound) {
  if (bound < 1) throw PreconditionError("magnus bound must be >= 1, got " + std::to_string(bound));
  TruncSeries s = TruncSeries::one(w.rank(), bound);
  // Upper bound on max |coefficient|; refreshed from the data when it grows large.
  __int128 estimate = 1;
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    estimate *= it->sign() > 0 ? 2 : bound + 1;
    if (estimate >= kSafeMagnitude) {
      estimate = static_cast<__int128>(simd::kernels().max_abs(all_coefficients(s))) * (it->sign() > 0 ? 2 : bound + 1);
      if (estimate >= kSafeMagnitude) {
        throw OverflowError("Magnus coefficients of a word of length " + std::to_string(w.length()) +
                            " exceed 2^60 at bound " + std::to_string(bound));
      }
    }
    s.left_multiply(*it);
  }
  return s;
}

std::string to_string(const LcsDegree& d) {
  switch (d.kind) {
    case LcsDegree::Kind::Finite:
      return std::to_string(d.degree);
    case LcsDegree::Kind::AboveBound:
      return ">= " + std::to_string(d.degree);
    case LcsDegree::Kind::Infinite:
      return "infinite";
  }
  return "?";
}

LcsDegree lcs_degree(const Word& w, int bound) {
  if (bound < 1) throw PreconditionError("lcs_degree bound must be >= 1, got " + std::to_string(bound));
  if (w.empty()) return {LcsDegree::Kind::Infinite, 0};
  const int d = magnus(w, bound).lowest_positive_degree();
  if (d == 0) return {LcsDegree::Kind::AboveBound, bound + 1};
  return {LcsDegree::Kind::Finite, d};
}

bool in_gamma(const Word& w, int k, int bound) {
  if (k < 1) throw PreconditionError("lower central series level must be >= 1, got " + std::to_string(k));
  if (bound < k) {
    throw PreconditionError("in_gamma needs bound >= k (k=" + std::to_string(k) + ", bound=" + std::to_string(bound) +
                            ")");
  }
  if (k == 1) return true;
  return lcs_degree(w, bound).at_least(k);
}

TruncSeries coset_series(const Word& w, int k, int m) {
  if (k < 1 || m <= k) {
    throw PreconditionError("coset_series needs 1 <= k < m (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  TruncSeries s = magnus(w, m - 1);
  const int low = s.lowest_positive_degree();
  if (low != 0 && low < k) {
    throw PreconditionError("word is not in Gamma^" + std::to_string(k) + ": lcs degree " + std::to_string(low));
  }
  return s;
}

}  // namespace jcalc
