#include "jcalc/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace jcalc {

void check_same_rank(int a, int b) {
  if (a != b) throw RankMismatch(a, b);
}

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_back(l);
}

Word::Word(int rank, std::initializer_list<int> signed_letters) : rank_(rank) {
  for (int v : signed_letters) push_back(Letter::from_signed(v));
}

Word Word::generator(int rank, int gen, int exponent) {
  Word w(rank);
  Letter l(gen, exponent < 0 ? -1 : 1);
  for (int e = std::abs(exponent); e > 0; --e) w.push_back(l);
  return w;
}

void Word::check_letter(Letter letter) const {
  if (letter.gen() < 1 || letter.gen() > rank_) {
    throw Error("generator index " + std::to_string(letter.gen()) + " outside rank " + std::to_string(rank_));
  }
}

void Word::push_back(Letter letter) {
  check_letter(letter);
  if (!letters_.empty() && letters_.back() == letter.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::vector<int> Word::exponent_sums() const {
  std::vector<int> sums(static_cast<std::size_t>(rank_), 0);
  for (Letter l : letters_) sums[static_cast<std::size_t>(l.gen() - 1)] += l.sign();
  return sums;
}

Word& Word::operator*=(const Word& other) {
  check_same_rank(rank_, other.rank_);
  for (Letter l : other.letters_) push_back(l);
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word result = a;
  result *= b;
  return result;
}

bool ShortLex::operator()(const Word& a, const Word& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  auto la = a.letters();
  auto lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return la[i].order_key() < lb[i].order_key();
  }
  return false;
}

Word power(const Word& w, int exponent) {
  Word base = exponent < 0 ? w.inverse() : w;
  Word result(w.rank());
  for (int e = std::abs(exponent); e > 0; --e) result *= base;
  return result;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word boundary_word(int genus) {
  if (genus < 0) throw PreconditionError("genus must be non-negative, got " + std::to_string(genus));
  const int rank = 2 * genus;
  Word zeta(rank);
  for (int i = 1; i <= genus; ++i) {
    zeta *= commutator(Word::generator(rank, i), Word::generator(rank, genus + i));
  }
  return zeta;
}

namespace {

// Recursive-descent parser for the shared word grammar.
class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_space();
    if (at_end()) throw ParseError("empty input", pos_);
    Word w = parse_word();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_item() const {
    char c = peek();
    return c == 'x' || c == 'g' || c == '[' || c == '(' || c == '1';
  }

  // word := item { sep item }
  Word parse_word() {
    Word result(alphabet_.rank());
    result *= parse_item();
    for (;;) {
      std::size_t save = pos_;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!starts_item()) throw ParseError("expected a factor after '*'", pos_);
      }
      if (!starts_item()) {
        pos_ = save;
        break;
      }
      result *= parse_item();
    }
    return result;
  }

  // item := atom [ "^" int ]
  Word parse_item() {
    Word atom = parse_atom();
    skip_space();
    if (peek() != '^') return atom;
    ++pos_;
    skip_space();
    return power(atom, parse_int());
  }

  Word parse_atom() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("bare integer is not a word", start);
      return Word(alphabet_.rank());
    }
    if (c == '(') {
      ++pos_;
      skip_space();
      Word inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      skip_space();
      Word a = parse_word();
      expect(',');
      skip_space();
      Word b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (c == 'x' || c == 'g') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected generator index", pos_);
      const int index = parse_digits();
      int gen = 0;
      if (c == 'x') {
        if (index < 1 || index > alphabet_.x_count) {
          throw ParseError("generator x" + std::to_string(index) + " exceeds rank " +
                               std::to_string(alphabet_.x_count),
                           start);
        }
        gen = alphabet_.x_index(index);
      } else {
        if (alphabet_.g_count == 0) throw ParseError("coefficient generator g" + std::to_string(index) +
                                                         " not allowed here",
                                                     start);
        if (index < 1 || index > alphabet_.g_count) {
          throw ParseError("coefficient generator g" + std::to_string(index) + " exceeds p=" +
                               std::to_string(alphabet_.g_count),
                           start);
        }
        gen = index;
      }
      return Word::generator(alphabet_.rank(), gen);
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""), pos_);
    }
    ++pos_;
  }

  int parse_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw ParseError("integer out of range", start);
    return value;
  }

  int parse_int() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", pos_);
    const int v = parse_digits();
    return negative ? -v : v;
  }

  std::string_view text_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) { return WordParser(text, alphabet).parse(); }

Word parse_word(std::string_view text, int rank) { return parse_word(text, Alphabet{rank, 0}); }

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const int run = static_cast<int>(j - i) * letters[i].sign();
    const int gen = letters[i].gen();
    if (!out.empty()) out += ' ';
    if (gen <= alphabet.g_count) {
      out += "g" + std::to_string(gen);
    } else {
      out += "x" + std::to_string(gen - alphabet.g_count);
    }
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string to_string(const Word& w) { return to_string(w, Alphabet{w.rank(), 0}); }

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
  for (const Word& w : images_) check_same_rank(static_cast<int>(images_.size()), w.rank());
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return Endomorphism(std::move(images));
}

Word apply(const Endomorphism& phi, const Word& w) {
  check_same_rank(phi.rank(), w.rank());
  Word result(w.rank());
  for (Letter l : w.letters()) {
    const Word& image = phi.image(l.gen());
    if (l.sign() > 0) {
      for (Letter m : image.letters()) result.push_back(m);
    } else {
      auto ls = image.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) result.push_back(it->inverse());
    }
  }
  return result;
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  check_same_rank(phi.rank(), psi.rank());
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const Word& w : psi.images()) images.push_back(apply(phi, w));
  return Endomorphism(std::move(images));
}

std::vector<std::vector<int>> abelianization_matrix(const Endomorphism& phi) {
  const auto n = static_cast<std::size_t>(phi.rank());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    auto sums = phi.images()[j].exponent_sums();
    for (std::size_t i = 0; i < n; ++i) m[i][j] = sums[i];
  }
  return m;
}

Endomorphism parse_endomorphism(std::string_view text) {
  struct Line {
    std::size_t number;
    int gen;
    std::string_view body;
    std::size_t body_column;
  };
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t col = 0;
    while (col < raw.size() && std::isspace(static_cast<unsigned char>(raw[col]))) ++col;
    if (col == raw.size()) {
      if (end == text.size()) break;
      continue;
    }
    if (raw[col] != 'x') throw ParseError("expected 'x<i> -> <word>'", col, line_no);
    std::size_t p = col + 1;
    const std::size_t digits = p;
    while (p < raw.size() && std::isdigit(static_cast<unsigned char>(raw[p]))) ++p;
    if (p == digits) throw ParseError("expected generator index", p, line_no);
    int gen = 0;
    std::from_chars(raw.data() + digits, raw.data() + p, gen);
    while (p < raw.size() && std::isspace(static_cast<unsigned char>(raw[p]))) ++p;
    if (raw.substr(p, 2) != "->") throw ParseError("expected '->'", p, line_no);
    p += 2;
    lines.push_back({line_no, gen, raw.substr(p), p});
    if (end == text.size()) break;
  }
  const int rank = static_cast<int>(lines.size());
  if (rank == 0) throw ParseError("no generator lines", 0, line_no);
  std::vector<Word> images(static_cast<std::size_t>(rank), Word(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  for (const Line& l : lines) {
    if (l.gen < 1 || l.gen > rank) {
      throw ParseError("generator x" + std::to_string(l.gen) + " outside 1.." + std::to_string(rank), 0, l.number);
    }
    auto idx = static_cast<std::size_t>(l.gen - 1);
    if (seen[idx]) throw ParseError("x" + std::to_string(l.gen) + " defined twice", 0, l.number);
    seen[idx] = true;
    try {
      images[idx] = parse_word(l.body, rank);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), l.body_column + e.position(), l.number);
    }
  }
  return Endomorphism(std::move(images));
}

std::string to_string(const Endomorphism& phi) {
  std::ostringstream out;
  for (int i = 1; i <= phi.rank(); ++i) out << 'x' << i << " -> " << to_string(phi.image(i)) << '\n';
  return out.str();
}

}  // namespace jcalc
