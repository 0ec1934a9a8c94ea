#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jcalc/words.hpp"

namespace jcalc {

// Truncated power series in non-commuting X_1..X_n with int64 coefficients,
// keeping total degrees 0..bound. Degree d is stored densely as n^d
// coefficients, monomial X_{i1}...X_{id} at index sum (i_k - 1) n^{d-k}, so
// index order within a degree is lexicographic order on monomials.
class TruncSeries {
 public:
  using Monomial = std::vector<int>;

  TruncSeries(int rank, int bound);
  static TruncSeries one(int rank, int bound);

  int rank() const { return rank_; }
  int bound() const { return bound_; }

  std::int64_t coefficient(std::span<const int> monomial) const;
  void set_coefficient(std::span<const int> monomial, std::int64_t value);

  std::span<const std::int64_t> degree_block(int d) const;
  std::span<std::int64_t> degree_block(int d);

  // this <- (1 + X_i)^{+-1} * this, truncated.
  void left_multiply(Letter letter);

  bool is_one() const;
  // Smallest d >= 1 with a nonzero degree-d coefficient, or 0 if none.
  int lowest_positive_degree() const;
  TruncSeries truncated(int bound) const;

  // Nonzero (monomial, coefficient) pairs in graded-lex order.
  std::vector<std::pair<Monomial, std::int64_t>> terms() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::size_t block_size(int d) const { return powers_[static_cast<std::size_t>(d)]; }
  std::size_t index_of(std::span<const int> monomial) const;

  int rank_;
  int bound_;
  std::vector<std::size_t> powers_;   // n^d
  std::vector<std::size_t> offsets_;  // start of degree d in coeffs_
  std::vector<std::int64_t> coeffs_;
};

// `1 + 2*X1 X2 - X2 X1`; zero series prints as `0`.
std::string to_string(const TruncSeries& s);

// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ..., truncated at `bound`.
TruncSeries magnus(const Word& w, int bound);

// Position of w in the lower central series, as seen through degrees <= bound.
struct LcsDegree {
  enum class Kind { Finite, AboveBound, Infinite };

  Kind kind;
  // Finite: the exact degree. AboveBound: bound + 1.
  int degree;

  bool at_least(int k) const { return kind == Kind::Infinite || degree >= k; }
  friend bool operator==(const LcsDegree&, const LcsDegree&) = default;
};

std::string to_string(const LcsDegree& d);

LcsDegree lcs_degree(const Word& w, int bound);
// w in Gamma^k. Requires bound >= k.
bool in_gamma(const Word& w, int k, int bound);

// Magnus series truncated below degree m of w in Gamma^k; equal outputs iff
// equal cosets of Gamma^m.
TruncSeries coset_series(const Word& w, int k, int m);

}  // namespace jcalc
