#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jcalc/words.hpp"

namespace jcalc {

using Integer = boost::multiprecision::cpp_int;

// Element of the integral group ring Z F_n. Terms are kept in shortlex order
// and never carry a zero coefficient.
class GroupRingElem {
 public:
  using Terms = std::map<Word, Integer, ShortLex>;

  explicit GroupRingElem(int rank = 0) : rank_(rank) {}
  GroupRingElem(const Word& w, Integer coefficient = 1);
  static GroupRingElem constant(int rank, Integer c);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Word& w) const;

  void add_term(const Word& w, const Integer& c);

  GroupRingElem& operator+=(const GroupRingElem& other);
  GroupRingElem& operator-=(const GroupRingElem& other);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator-(const GroupRingElem& a);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const Integer& c, const GroupRingElem& a);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  int rank_;
  Terms terms_;
};

// Linear extension of w -> w^-1.
GroupRingElem bar(const GroupRingElem& a);
// Sum of coefficients.
Integer augmentation(const GroupRingElem& a);
// Linear extension of an endomorphism of F_n.
GroupRingElem apply(const Endomorphism& phi, const GroupRingElem& a);

std::string to_string(const GroupRingElem& a);
// (coefficient, word) pairs in canonical order.
std::vector<std::pair<Integer, Word>> structured_terms(const GroupRingElem& a);

// Exponent vector of a Laurent monomial in commuting x_1..x_n.
using Exponents = std::vector<int>;

// Terms print with the constant first, then by decreasing total degree
// sum |e_i|, then lexicographically.
struct LaurentOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Element of Z H_1(F_n) = Z[x_1^+-1, ..., x_n^+-1].
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Integer, LaurentOrder>;

  explicit LaurentPoly(int rank = 0) : rank_(rank) {}
  static LaurentPoly constant(int rank, Integer c);
  static LaurentPoly monomial(Exponents exponents, Integer c = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int rank_;
  Terms terms_;
};

LaurentPoly abelianize(const GroupRingElem& a);
Integer augmentation(const LaurentPoly& p);
// Units of Z[Z^n] are exactly +-monomials.
bool is_unit(const LaurentPoly& p);
// x_i -> x_i^-1.
LaurentPoly bar(const LaurentPoly& p);

std::string to_string(const LaurentPoly& p);
std::string monomial_to_string(const Exponents& e);

// Dense row-major matrix over a ring whose zero depends on the rank.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, int rank)
      : rows_(rows), cols_(cols), rank_(rank), entries_(rows * cols, T(rank)) {}

  static Matrix identity(std::size_t n, int rank) {
    Matrix m(n, n, rank);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T::constant(rank, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int rank() const { return rank_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(entries_.front()))>;
    Matrix<U> out(rows_, cols_, rank_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    check_same_rank(a.rank_, b.rank_);
    Matrix out(a.rows_, b.cols_, a.rank_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int rank_;
  std::vector<T> entries_;
};

using GRMatrix = Matrix<GroupRingElem>;
using LaurentMatrix = Matrix<LaurentPoly>;

// Cofactor expansion memoized over column subsets; exact over Z[Z^n].
LaurentPoly laurent_det(const LaurentMatrix& m);

// Fraction-free (Bareiss) determinant of an integer matrix.
Integer integer_det(const std::vector<std::vector<Integer>>& m);
Integer integer_det(const std::vector<std::vector<int>>& m);

// Rank over Q of an integer row set, by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

}  // namespace jcalc
