#include "jcalc/lyndon.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "jcalc/simd/kernels.hpp"

namespace jcalc {

namespace {

void check_shape(int n, int j) {
  if (n < 1 || j < 1) {
    throw PreconditionError("Lyndon words need n >= 1 and j >= 1 (n=" + std::to_string(n) + ", j=" +
                            std::to_string(j) + ")");
  }
}

bool is_lyndon(std::span<const int> w) {
  const std::size_t len = w.size();
  if (len == 0) return false;
  for (std::size_t r = 1; r < len; ++r) {
    // Compare w with its rotation starting at r.
    for (std::size_t i = 0; i < len; ++i) {
      const int a = w[i];
      const int b = w[(r + i) % len];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == len) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

int mobius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

std::vector<std::int64_t> concat_product(std::span<const std::int64_t> p, std::span<const std::int64_t> q) {
  std::vector<std::int64_t> out(p.size() * q.size(), 0);
  const auto& k = simd::kernels();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    k.axpy(std::span<std::int64_t>(out).subspan(i * q.size(), q.size()), q, p[i]);
  }
  return out;
}

// Homogeneous expansion of the standard bracketing of w.
std::vector<std::int64_t> expand(const LetterSeq& w, int n) {
  if (w.size() == 1) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    out[static_cast<std::size_t>(w[0] - 1)] = 1;
    return out;
  }
  auto [u, v] = standard_factorization(w);
  const auto pu = expand(u, n);
  const auto pv = expand(v, n);
  auto out = concat_product(pu, pv);
  simd::kernels().sub(out, concat_product(pv, pu));
  return out;
}

}  // namespace

std::vector<LetterSeq> lyndon_words(int n, int j) {
  check_shape(n, j);
  std::vector<LetterSeq> out;
  LetterSeq w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == j) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < j) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::int64_t witt_rank(int n, int j) {
  check_shape(n, j);
  std::int64_t total = 0;
  for (int d = 1; d <= j; ++d) {
    if (j % d != 0) continue;
    std::int64_t p = 1;
    for (int e = 0; e < j / d; ++e) p *= n;
    total += mobius(d) * p;
  }
  return total / j;
}

std::pair<LetterSeq, LetterSeq> standard_factorization(const LetterSeq& lyndon) {
  if (lyndon.size() < 2 || !is_lyndon(lyndon)) {
    throw PreconditionError("standard factorization needs a Lyndon word of length >= 2, got " + lyndon_label(lyndon));
  }
  for (std::size_t i = 1; i < lyndon.size(); ++i) {
    std::span<const int> suffix(lyndon.data() + i, lyndon.size() - i);
    if (is_lyndon(suffix)) {
      return {LetterSeq(lyndon.begin(), lyndon.begin() + static_cast<std::ptrdiff_t>(i)),
              LetterSeq(suffix.begin(), suffix.end())};
    }
  }
  throw InvariantViolation("Lyndon word without a Lyndon suffix");
}

Word bracket_word(const LetterSeq& lyndon, int rank) {
  if (lyndon.size() == 1) return Word::generator(rank, lyndon[0]);
  auto [u, v] = standard_factorization(lyndon);
  return commutator(bracket_word(u, rank), bracket_word(v, rank));
}

LyndonBasis::LyndonBasis(int n, int j) : n_(n), j_(j), block_(1), words_(lyndon_words(n, j)) {
  for (int d = 0; d < j; ++d) block_ *= static_cast<std::size_t>(n);
  expansions_.reserve(words_.size() * block_);
  for (const LetterSeq& w : words_) {
    const auto p = expand(w, n);
    const std::size_t lead = monomial_index(w);
    for (std::size_t idx = 0; idx < lead; ++idx) {
      if (p[idx] != 0) {
        throw InvariantViolation("Lyndon expansion of " + lyndon_label(w) + " has a term below its leading word");
      }
    }
    if (p[lead] != 1) throw InvariantViolation("Lyndon expansion of " + lyndon_label(w) + " is not monic");
    expansions_.insert(expansions_.end(), p.begin(), p.end());
  }
  if (static_cast<std::int64_t>(words_.size()) != witt_rank(n, j)) {
    throw InvariantViolation("Lyndon basis size differs from the Witt number");
  }
}

const LyndonBasis& LyndonBasis::get(int n, int j) {
  check_shape(n, j);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<LyndonBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, j}];
  if (!slot) slot = std::make_unique<LyndonBasis>(n, j);
  return *slot;
}

std::size_t LyndonBasis::monomial_index(const LetterSeq& monomial) const {
  if (static_cast<int>(monomial.size()) != j_) throw Error("monomial degree differs from basis degree");
  std::size_t idx = 0;
  for (int g : monomial) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(g - 1);
  return idx;
}

std::span<const std::int64_t> LyndonBasis::expansion(std::size_t basis_index) const {
  return std::span<const std::int64_t>(expansions_).subspan(basis_index * block_, block_);
}

LieVector LieVector::zero(int rank, int degree) {
  return {rank, degree, std::vector<std::int64_t>(LyndonBasis::get(rank, degree).size(), 0)};
}

bool LieVector::is_zero() const {
  for (auto c : coords)
    if (c != 0) return false;
  return true;
}

LieVector& LieVector::operator+=(const LieVector& other) {
  check_same_rank(rank, other.rank);
  if (degree != other.degree) throw Error("Lie vectors of different degree");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

LieVector operator-(const LieVector& a) {
  LieVector out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

std::string lyndon_label(const LetterSeq& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] > 9) s += '.';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::string to_string(const LieVector& v) {
  std::string out;
  const auto& words = v.basis();
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    const std::int64_t c = v.coords[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += lyndon_label(words[i]);
  }
  return out.empty() ? "0" : out;
}

LieVector lie_coordinates_of_block(std::span<const std::int64_t> block, int n, int k) {
  const LyndonBasis& basis = LyndonBasis::get(n, k);
  std::vector<std::int64_t> residual(block.begin(), block.end());
  LieVector out = LieVector::zero(n, k);
  const auto& kern = simd::kernels();
  // Lyndon words in increasing order: each P_w only touches monomials >= w.
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const std::int64_t c = residual[basis.monomial_index(basis.words()[b])];
    if (c == 0) continue;
    out.coords[b] = c;
    kern.axpy(residual, basis.expansion(b), -c);
  }
  if (!kern.all_zero(residual)) {
    throw InvariantViolation("degree-" + std::to_string(k) + " component is not a Lie element");
  }
  return out;
}

LieVector lie_coordinates(const Word& w, int k) {
  if (k < 1) throw PreconditionError("Lie degree must be >= 1, got " + std::to_string(k));
  if (w.empty()) return LieVector::zero(w.rank(), k);
  const TruncSeries s = magnus(w, k);
  const int low = s.lowest_positive_degree();
  if (low != 0 && low < k) {
    throw PreconditionError("word " + to_string(w) + " is not in Gamma^" + std::to_string(k) + " (lcs degree " +
                            std::to_string(low) + ")");
  }
  return lie_coordinates_of_block(s.degree_block(k), w.rank(), k);
}

Word lie_word(const LieVector& v) {
  Word out(v.rank);
  const auto& words = v.basis();
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i] == 0) continue;
    out *= power(bracket_word(words[i], v.rank), static_cast<int>(v.coords[i]));
  }
  return out;
}

}  // namespace jcalc
