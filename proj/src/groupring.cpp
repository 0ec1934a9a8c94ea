#include "jcalc/groupring.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace jcalc {

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string signed_term(bool first, const Integer& c, const std::string& body) {
  std::string out;
  const bool negative = c < 0;
  const Integer magnitude = negative ? Integer(-c) : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += magnitude.str();
  } else if (magnitude == 1) {
    out += body;
  } else {
    out += magnitude.str() + "*" + body;
  }
  return out;
}

}  // namespace

GroupRingElem::GroupRingElem(const Word& w, Integer coefficient) : rank_(w.rank()) {
  accumulate(terms_, w, coefficient);
}

GroupRingElem GroupRingElem::constant(int rank, Integer c) { return GroupRingElem(Word(rank), std::move(c)); }

Integer GroupRingElem::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElem::add_term(const Word& w, const Integer& c) {
  check_same_rank(rank_, w.rank());
  accumulate(terms_, w, c);
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& other) {
  check_same_rank(rank_, other.rank_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& other) {
  check_same_rank(rank_, other.rank_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, Integer(-c));
  return *this;
}

GroupRingElem operator-(const GroupRingElem& a) {
  GroupRingElem out(a.rank_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  check_same_rank(a.rank_, b.rank_);
  GroupRingElem out(a.rank_);
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) accumulate(out.terms_, u * v, Integer(cu * cv));
  return out;
}

GroupRingElem operator*(const Integer& c, const GroupRingElem& a) {
  GroupRingElem out(a.rank_);
  if (c == 0) return out;
  for (const auto& [w, cw] : a.terms_) out.terms_.emplace(w, c * cw);
  return out;
}

GroupRingElem bar(const GroupRingElem& a) {
  GroupRingElem out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(w.inverse(), c);
  return out;
}

Integer augmentation(const GroupRingElem& a) {
  Integer sum = 0;
  for (const auto& [w, c] : a.terms()) sum += c;
  return sum;
}

GroupRingElem apply(const Endomorphism& phi, const GroupRingElem& a) {
  check_same_rank(phi.rank(), a.rank());
  GroupRingElem out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(apply(phi, w), c);
  return out;
}

std::string to_string(const GroupRingElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    out += signed_term(first, c, w.empty() ? std::string() : to_string(w));
    first = false;
  }
  return out;
}

std::vector<std::pair<Integer, Word>> structured_terms(const GroupRingElem& a) {
  std::vector<std::pair<Integer, Word>> out;
  for (const auto& [w, c] : a.terms()) out.emplace_back(c, w);
  return out;
}

bool LaurentOrder::operator()(const Exponents& a, const Exponents& b) const {
  auto degree = [](const Exponents& e) {
    long d = 0;
    for (int x : e) d += x < 0 ? -x : x;
    return d;
  };
  const long da = degree(a);
  const long db = degree(b);
  if ((da == 0) != (db == 0)) return da == 0;
  if (da != db) return da > db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(int rank, Integer c) {
  return monomial(Exponents(static_cast<std::size_t>(rank), 0), std::move(c));
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, Integer c) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  accumulate(p.terms_, exponents, c);
  return p;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  check_same_rank(rank_, static_cast<int>(e.size()));
  accumulate(terms_, e, c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_rank(rank_, other.rank_);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_rank(rank_, other.rank_);
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, Integer(-c));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out(a.rank_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_rank(a.rank_, b.rank_);
  LaurentPoly out(a.rank_);
  Exponents sum(static_cast<std::size_t>(a.rank_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      accumulate(out.terms_, sum, Integer(ca * cb));
    }
  return out;
}

LaurentPoly abelianize(const GroupRingElem& a) {
  LaurentPoly out(a.rank());
  for (const auto& [w, c] : a.terms()) out.add_term(w.exponent_sums(), c);
  return out;
}

Integer augmentation(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

bool is_unit(const LaurentPoly& p) {
  if (p.terms().size() != 1) return false;
  const Integer& c = p.terms().begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : p.terms()) {
    Exponents neg = e;
    for (int& x : neg) x = -x;
    out.add_term(neg, c);
  }
  return out;
}

std::string monomial_to_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += signed_term(first, c, monomial_to_string(e));
    first = false;
  }
  return out;
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.rank(), 1);
  if (n > 24) throw PreconditionError("laurent_det supports at most 24 rows");

  // minor(mask) = determinant of the trailing rows against the columns not in mask.
  std::unordered_map<std::uint32_t, LaurentPoly> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> LaurentPoly {
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) return LaurentPoly::constant(m.rank(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    LaurentPoly total(m.rank());
    int free_before = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (mask & bit) continue;
      const LaurentPoly& entry = m(row, j);
      if (!entry.is_zero()) {
        LaurentPoly term = entry * self(self, mask | bit);
        if (free_before % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++free_before;
    }
    memo.emplace(mask, total);
    return total;
  };
  return minor(minor, 0);
}

Integer integer_det(const std::vector<std::vector<Integer>>& input) {
  const std::size_t n = input.size();
  for (const auto& row : input) {
    if (row.size() != n) throw PreconditionError("determinant of a non-square integer matrix");
  }
  if (n == 0) return 1;
  auto a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer integer_det(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<Integer>> big;
  big.reserve(m.size());
  for (const auto& row : m) big.emplace_back(row.begin(), row.end());
  return integer_det(big);
}

std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Integer& p = rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Integer f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * p - f * rows[rank][j];
      // Keep entries small: divide each row by the gcd of its entries.
      Integer g = 0;
      for (std::size_t j = c; j < cols; ++j) g = boost::multiprecision::gcd(g, rows[r][j]);
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace jcalc
