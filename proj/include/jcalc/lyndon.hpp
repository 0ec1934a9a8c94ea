#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jcalc/magnus.hpp"
#include "jcalc/words.hpp"

namespace jcalc {

// A word over the letters 1..n (generator indices, no inverses).
using LetterSeq = std::vector<int>;

// All Lyndon words of length j over {1..n}, in lexicographic order (Duval).
std::vector<LetterSeq> lyndon_words(int n, int j);

// (1/j) sum_{d | j} mu(d) n^{j/d}.
std::int64_t witt_rank(int n, int j);

// w = u v with v the longest proper Lyndon suffix.
std::pair<LetterSeq, LetterSeq> standard_factorization(const LetterSeq& lyndon);

// Group commutator [u, v] = u v u^-1 v^-1 following the standard bracketing.
// Its Magnus expansion is 1 + P_w + (higher degrees).
Word bracket_word(const LetterSeq& lyndon, int rank);

// Lyndon basis of the degree-j part of the free Lie ring on n generators,
// with each basis element's expansion as a homogeneous dense polynomial.
// Construction asserts the expansion matrix is unitriangular: P_w has
// coefficient 1 on w and vanishes on every monomial lexicographically below w.
class LyndonBasis {
 public:
  // Memoized per (n, j); safe to call concurrently.
  static const LyndonBasis& get(int n, int j);

  int rank() const { return n_; }
  int degree() const { return j_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<LetterSeq>& words() const { return words_; }
  // Dense index of a degree-j monomial (base-n digits, first letter high).
  std::size_t monomial_index(const LetterSeq& monomial) const;
  std::span<const std::int64_t> expansion(std::size_t basis_index) const;

  LyndonBasis(int n, int j);

 private:
  int n_;
  int j_;
  std::size_t block_;
  std::vector<LetterSeq> words_;
  std::vector<std::int64_t> expansions_;  // size() * block_
};

// Integer coordinates of a homogeneous Lie element over the Lyndon basis.
struct LieVector {
  int rank = 0;
  int degree = 0;
  std::vector<std::int64_t> coords;

  static LieVector zero(int rank, int degree);
  bool is_zero() const;
  const std::vector<LetterSeq>& basis() const { return LyndonBasis::get(rank, degree).words(); }

  LieVector& operator+=(const LieVector& other);
  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend LieVector operator-(const LieVector& a);
  friend bool operator==(const LieVector&, const LieVector&) = default;
};

// `2*[112] - [122]`, or `0`.
std::string to_string(const LieVector& v);
std::string lyndon_label(const LetterSeq& w);

// Coordinates of a homogeneous degree-k block (length n^k) that lies in the
// Lie span. Throws InvariantViolation if it does not.
LieVector lie_coordinates_of_block(std::span<const std::int64_t> block, int n, int k);

// Class of w in Gamma^k / Gamma^{k+1}. Throws PreconditionError naming the
// actual lcs degree when w is not in Gamma^k.
LieVector lie_coordinates(const Word& w, int k);

// A word whose class in Gamma^k / Gamma^{k+1} has the given coordinates:
// the ordered product of bracket words raised to their coordinates.
Word lie_word(const LieVector& v);

}  // namespace jcalc
