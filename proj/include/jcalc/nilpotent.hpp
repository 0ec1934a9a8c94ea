#pragma once

#include <string>
#include <string_view>

#include "jcalc/words.hpp"

namespace jcalc {

// Element of N_k = F_n / Gamma^k F_n, carried by a word representative.
// Equality is coset equality.
struct NkElement {
  int k;
  Word rep;

  int rank() const { return rep.rank(); }
};

// a.rep * b.rep^-1 in Gamma^k.
bool nk_equal(const NkElement& a, const NkElement& b);

// Canonical representative of w's coset in N_k: the ordered product
// x_1^e_1 ... x_n^e_n * prod_{j=2}^{k-1} prod_{Lyndon w} [w]^{c_w}
// with [w] the bracket word of each Lyndon word of length j.
Word nk_normal_form(const Word& w, int k);

// Automorphism of N_k given by a lift to End F_n. The lift must be
// 2-connected (unimodular abelianization); that is exactly the condition
// for inducing an automorphism of N_k.
class AutNk {
 public:
  AutNk(Endomorphism lift, int k);
  static AutNk identity(int rank, int k);

  int rank() const { return lift_.rank(); }
  int level() const { return k_; }
  const Endomorphism& lift() const { return lift_; }
  NkElement image(int gen) const { return {k_, lift_.image(gen)}; }

  bool is_identity() const;
  // Generator images agree in N_k.
  friend bool operator==(const AutNk& a, const AutNk& b);

 private:
  Endomorphism lift_;
  int k_;
};

// The automorphism of N_k induced by a 2-connected endomorphism.
AutNk phi_k(const Endomorphism& phi, int k);
AutNk autnk_compose(const AutNk& a, const AutNk& b);
// Inverse lift built from the integer inverse on H_1, then corrected one
// lower-central degree at a time (k - 2 rounds).
AutNk autnk_invert(const AutNk& a);
// Natural map Aut N_{k'} -> Aut N_k for k <= k'.
AutNk project(const AutNk& a, int k);

// Whether the stored lift satisfies lift(zeta) zeta^-1 in Gamma^{k+1} for the
// surface word zeta of genus g. A true result certifies membership in Aut_0;
// false only says this lift is not a certificate.
bool is_aut0(const AutNk& a, int genus);

// The stored lift, as the 2-connected endomorphism realizing the target.
// Requires the is_aut0 certificate; verifies phi_k(result) == target.
Endomorphism realize_aut0(const AutNk& target, int genus);

// Endomorphism file preceded by `# level k=<k>`.
std::string to_string(const AutNk& a);
AutNk parse_autnk(std::string_view text);

}  // namespace jcalc
