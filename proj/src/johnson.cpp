#include "jcalc/johnson.hpp"

#include <algorithm>

#include "jcalc/foxrep.hpp"

namespace jcalc {

namespace {

Word defect(const Endomorphism& phi, int i) { return phi.image(i) * Word::generator(phi.rank(), i, -1); }

void check_k(int k) {
  if (k < 2) throw PreconditionError("Johnson level k must be >= 2, got " + std::to_string(k));
}

void require_level(const Endomorphism& phi, int k) {
  const int level = filtration_level(phi, k);
  if (level < k) {
    throw PreconditionError("endomorphism is not in Aut[" + std::to_string(k) + "]: filtration level " +
                            std::to_string(level));
  }
}

}  // namespace

bool JohnsonValue::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const LieVector& v) { return v.is_zero(); });
}

JohnsonValue& JohnsonValue::operator+=(const JohnsonValue& other) {
  check_same_rank(rank, other.rank);
  if (k != other.k) throw PreconditionError("Johnson values of different level");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += other.values[i];
  return *this;
}

bool RefinedJohnsonValue::is_zero() const {
  return std::all_of(cosets.begin(), cosets.end(), [](const TruncSeries& s) { return s.is_one(); });
}

int filtration_level(const Endomorphism& phi, int cap) {
  if (cap < 1) throw PreconditionError("filtration cap must be >= 1, got " + std::to_string(cap));
  const auto tc = two_connectedness(phi);
  if (!tc.two_connected) {
    throw PreconditionError("endomorphism is not 2-connected (abelianization determinant " + tc.determinant.str() +
                            ")");
  }
  int level = cap;
  for (int i = 1; i <= phi.rank(); ++i) {
    const LcsDegree d = lcs_degree(defect(phi, i), cap);
    if (d.kind == LcsDegree::Kind::Finite) level = std::min(level, d.degree);
  }
  return level;
}

JohnsonValue johnson(const Endomorphism& phi, int k) {
  check_k(k);
  require_level(phi, k);
  JohnsonValue out{phi.rank(), k, {}};
  for (int i = 1; i <= phi.rank(); ++i) out.values.push_back(lie_coordinates(defect(phi, i), k));
  return out;
}

RefinedJohnsonValue refined_johnson(const Endomorphism& phi, int k) {
  check_k(k);
  require_level(phi, k);
  RefinedJohnsonValue out{phi.rank(), k, {}};
  for (int i = 1; i <= phi.rank(); ++i) out.cosets.push_back(coset_series(defect(phi, i), k, 2 * k - 1));
  return out;
}

JohnsonValue first_projection(const RefinedJohnsonValue& value) {
  JohnsonValue out{value.rank, value.k, {}};
  for (const TruncSeries& s : value.cosets) {
    out.values.push_back(lie_coordinates_of_block(s.degree_block(value.k), value.rank, value.k));
  }
  return out;
}

RefinedJohnsonValue combine(const RefinedJohnsonValue& a, const RefinedJohnsonValue& b) {
  check_same_rank(a.rank, b.rank);
  if (a.k != b.k) throw PreconditionError("refined values of different level");
  RefinedJohnsonValue out{a.rank, a.k, {}};
  for (std::size_t i = 0; i < a.cosets.size(); ++i) out.cosets.push_back(a.cosets[i] * b.cosets[i]);
  return out;
}

bool check_action_trivial(const Endomorphism& phi, const Word& w, int k) {
  check_k(k);
  require_level(phi, k);
  check_same_rank(phi.rank(), w.rank());
  if (!in_gamma(w, k, k)) {
    throw PreconditionError("word is not in Gamma^" + std::to_string(k) + " (lcs degree " +
                            to_string(lcs_degree(w, k)) + ")");
  }
  const int target = 2 * k - 1;
  return in_gamma(apply(phi, w) * w.inverse(), target, target);
}

bool refined_kernel_level(const Endomorphism& phi, int k) {
  const bool vanishes = refined_johnson(phi, k).is_zero();
  const bool deep = filtration_level(phi, 2 * k - 1) >= 2 * k - 1;
  if (vanishes != deep) {
    throw InvariantViolation("refined Johnson kernel disagrees with filtration level " + std::to_string(2 * k - 1));
  }
  return vanishes;
}

std::vector<std::int64_t> flatten(const RefinedJohnsonValue& value) {
  std::vector<std::int64_t> out;
  for (const TruncSeries& s : value.cosets)
    for (int d = value.k; d <= 2 * value.k - 2; ++d) {
      auto block = s.degree_block(d);
      out.insert(out.end(), block.begin(), block.end());
    }
  return out;
}

RefinedJohnsonValue equivariant_prediction(const Endomorphism& alpha, const Endomorphism& alpha_inverse,
                                           const Endomorphism& phi, int k) {
  check_k(k);
  check_same_rank(alpha.rank(), phi.rank());
  const Endomorphism id = Endomorphism::identity(alpha.rank());
  if (compose(alpha, alpha_inverse) != id || compose(alpha_inverse, alpha) != id) {
    throw PreconditionError("alpha_inverse is not a two-sided inverse of alpha");
  }
  require_level(phi, k);
  const int n = phi.rank();
  std::vector<Word> defects;
  for (int i = 1; i <= n; ++i) defects.push_back(defect(phi, i));
  RefinedJohnsonValue out{n, k, {}};
  for (int i = 1; i <= n; ++i) {
    // f(alpha^-1(x_i)) with f the homomorphism x_j -> defect_j.
    Word value(n);
    for (Letter l : alpha_inverse.image(i).letters()) {
      const Word& d = defects[static_cast<std::size_t>(l.gen() - 1)];
      value *= l.sign() > 0 ? d : d.inverse();
    }
    out.cosets.push_back(coset_series(apply(alpha, value), k, 2 * k - 1));
  }
  return out;
}

std::string to_string(const JohnsonValue& v) {
  std::string out;
  for (std::size_t i = 0; i < v.values.size(); ++i) out += "x" + std::to_string(i + 1) + ": " + to_string(v.values[i]) + "\n";
  return out;
}

std::string to_string(const RefinedJohnsonValue& v) {
  std::string out;
  for (std::size_t i = 0; i < v.cosets.size(); ++i) out += "x" + std::to_string(i + 1) + ": " + to_string(v.cosets[i]) + "\n";
  return out;
}

}  // namespace jcalc
