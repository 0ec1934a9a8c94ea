#include "jcalc/foxrep.hpp"

namespace jcalc {

GroupRingElem fox_derivative(const Word& w, int i) {
  if (i < 1 || i > w.rank()) {
    throw PreconditionError("Fox derivative index " + std::to_string(i) + " outside 1.." + std::to_string(w.rank()));
  }
  GroupRingElem out(w.rank());
  Word prefix(w.rank());
  for (Letter l : w.letters()) {
    if (l.gen() == i && l.sign() > 0) out.add_term(prefix, 1);
    prefix.push_back(l);
    if (l.gen() == i && l.sign() < 0) out.add_term(prefix, -1);
  }
  return out;
}

GRMatrix fox_jacobian(const Endomorphism& phi) {
  const auto n = static_cast<std::size_t>(phi.rank());
  GRMatrix m(n, n, phi.rank());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = fox_derivative(phi.images()[j], static_cast<int>(i) + 1);
  return m;
}

GRMatrix magnus_rep(const Endomorphism& phi) {
  return fox_jacobian(phi).map([](const GroupRingElem& e) { return bar(e); });
}

GRMatrix transport(const Endomorphism& phi, const GRMatrix& m) {
  check_same_rank(phi.rank(), m.rank());
  return m.map([&](const GroupRingElem& e) { return apply(phi, e); });
}

bool crossed_check(const Endomorphism& phi, const Endomorphism& psi) {
  check_same_rank(phi.rank(), psi.rank());
  const GRMatrix lhs = magnus_rep(compose(phi, psi));
  const GRMatrix rhs = magnus_rep(phi) * transport(phi, magnus_rep(psi));
  return lhs == rhs;
}

TwoConnectedness two_connectedness(const Endomorphism& phi) {
  Integer det = integer_det(abelianization_matrix(phi));
  const bool unimodular = det == 1 || det == -1;
  return {unimodular, std::move(det)};
}

bool is_two_connected(const Endomorphism& phi) { return two_connectedness(phi).two_connected; }

AutomorphismObstruction automorphism_obstruction(const Endomorphism& phi) {
  const TwoConnectedness tc = two_connectedness(phi);
  if (!tc.two_connected) {
    throw PreconditionError("endomorphism is not 2-connected (abelianization determinant " + tc.determinant.str() +
                            ")");
  }
  LaurentMatrix ab = magnus_rep(phi).map([](const GroupRingElem& e) { return abelianize(e); });
  LaurentPoly det = laurent_det(ab);
  Integer aug = augmentation(det);
  const auto verdict = is_unit(det) ? AutomorphismObstruction::Verdict::Unit : AutomorphismObstruction::Verdict::NonUnit;
  return {verdict, std::move(ab), std::move(det), std::move(aug)};
}

namespace {

template <class M>
std::string matrix_to_string(const M& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace

std::string to_string(const GRMatrix& m) { return matrix_to_string(m); }
std::string to_string(const LaurentMatrix& m) { return matrix_to_string(m); }

}  // namespace jcalc
