#pragma once

#include <string>

#include "jcalc/groupring.hpp"
#include "jcalc/words.hpp"

namespace jcalc {

// Left Fox derivative: d(uv) = du + u dv, d x_j / d x_i = delta_ij.
// Satisfies w - 1 = sum_i (dw/dx_i)(x_i - 1).
GroupRingElem fox_derivative(const Word& w, int i);

// Entry (i, j) = d phi(x_j) / d x_i.
GRMatrix fox_jacobian(const Endomorphism& phi);

// Magnus representation r(phi): entry (i, j) = bar(d phi(x_j) / d x_i).
GRMatrix magnus_rep(const Endomorphism& phi);

// Entrywise image of a matrix under phi.
GRMatrix transport(const Endomorphism& phi, const GRMatrix& m);

// r(phi o psi) == r(phi) * transport(phi, r(psi)), both sides computed.
bool crossed_check(const Endomorphism& phi, const Endomorphism& psi);

struct TwoConnectedness {
  bool two_connected;
  Integer determinant;  // of the integer abelianization matrix
};

// For endomorphisms of F_n, H_2 vanishes, so 2-connected means the
// abelianization is unimodular.
TwoConnectedness two_connectedness(const Endomorphism& phi);
bool is_two_connected(const Endomorphism& phi);

struct AutomorphismObstruction {
  enum class Verdict {
    Unit,     // inconclusive
    NonUnit,  // certifiably not an automorphism of F_n
  };

  Verdict verdict;
  LaurentMatrix abelianized;  // r(phi) with entries reduced to Z H_1
  LaurentPoly determinant;
  Integer augmentation;
};

// Requires phi to be 2-connected.
AutomorphismObstruction automorphism_obstruction(const Endomorphism& phi);

// Row-major listing, one row per line: `[a, b]`.
std::string to_string(const GRMatrix& m);
std::string to_string(const LaurentMatrix& m);

}  // namespace jcalc
