#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jcalc/errors.hpp"

namespace jcalc {

// A generator x_gen or its inverse. Generators are 1-indexed.
class Letter {
 public:
  constexpr Letter(int gen, int sign) : value_(sign < 0 ? -gen : gen) {}

  static constexpr Letter from_signed(int value) { return Letter(value < 0 ? -value : value, value < 0 ? -1 : 1); }

  constexpr int gen() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  // x1 < x1^-1 < x2 < x2^-1 < ...
  constexpr int order_key() const { return 2 * (gen() - 1) + (value_ < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  int value_;
};

// Freely reduced word in the free group of the given rank. Always reduced.
class Word {
 public:
  explicit Word(int rank = 0) : rank_(rank) {}
  // Reduces the given letter sequence.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<int> signed_letters);

  static Word generator(int rank, int gen, int exponent = 1);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  // Net exponent of each generator, index 0 for x1.
  std::vector<int> exponent_sums() const;

  // Appends one letter, cancelling against the last letter when possible.
  void push_back(Letter letter);

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  void check_letter(Letter letter) const;

  int rank_;
  std::vector<Letter> letters_;
};

// Shortlex on letters with x1 < x1^-1 < x2 < ...; the canonical term order.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const;
};

Word power(const Word& w, int exponent);
// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

// prod_{i=1}^{g} [x_i, x_{g+i}] in rank 2g. g = 0 gives the empty word.
Word boundary_word(int genus);

void check_same_rank(int a, int b);

// Generators of a parsed word: `x<i>` always, `g<i>` only when g_count > 0.
// Letters are numbered g1..gp first, then x1..xm, so a word over this
// alphabet is a Word of rank g_count + x_count.
struct Alphabet {
  int x_count = 0;
  int g_count = 0;

  int rank() const { return x_count + g_count; }
  int x_index(int i) const { return g_count + i; }
};

Word parse_word(std::string_view text, int rank);
Word parse_word(std::string_view text, const Alphabet& alphabet);

// "1" for the empty word; runs of equal letters print as powers.
std::string to_string(const Word& w);
std::string to_string(const Word& w, const Alphabet& alphabet);

class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images);
  static Endomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int gen) const { return images_.at(static_cast<std::size_t>(gen - 1)); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<Word> images_;
};

Word apply(const Endomorphism& phi, const Word& w);
// (phi o psi)(x_i) = phi(psi(x_i)).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

// Integer abelianization matrix: entry (i, j) is the exponent sum of x_i in phi(x_j).
std::vector<std::vector<int>> abelianization_matrix(const Endomorphism& phi);

// `x<i> -> <word>` per line, `#` comments. Rank is the number of generator lines.
Endomorphism parse_endomorphism(std::string_view text);
std::string to_string(const Endomorphism& phi);

}  // namespace jcalc
