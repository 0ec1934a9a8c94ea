#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jcalc/words.hpp"

namespace jcalc {

// The free nilpotent group N = F_p / Gamma^{c+1} F_p of class c, generated by
// g1..gp. Class c means Gamma^{c+1} N = 1, so c = 1 is free abelian.
struct CoefficientGroup {
  int p = 0;
  int nilpotency_class = 1;

  // Index of the lower central term that is trivial in N.
  int trivial_level() const { return nilpotency_class + 1; }
};

// A system x_i = w_i(g, x), i = 1..m. Equation words live in the free group
// on g1..gp, x1..xm (numbered in that order; see Alphabet).
class AcyclicSystem {
 public:
  // Throws PreconditionError naming the first equation that is not acyclic.
  AcyclicSystem(int variables, CoefficientGroup coefficients, std::vector<Word> equations);

  int variables() const { return m_; }
  const CoefficientGroup& coefficients() const { return coeff_; }
  const std::vector<Word>& equations() const { return equations_; }
  Alphabet alphabet() const { return Alphabet{m_, coeff_.p}; }

 private:
  int m_;
  CoefficientGroup coeff_;
  std::vector<Word> equations_;
};

// Every variable x_1..x_m has zero net exponent in w.
bool is_acyclic(const Word& w, const Alphabet& alphabet);

// Values of x_1..x_m as normal-form words over g1..gp (rank p).
struct NilpotentSolution {
  CoefficientGroup coefficients;
  std::vector<Word> values;
};

// Substitute `values` for the variables and reduce to normal form in N.
std::vector<Word> evaluate(const AcyclicSystem& system, const std::vector<Word>& values);

// Iterate x <- w(x) exactly `class` times from `seed`, then check the
// result is a fixed point. Throws NotStabilized otherwise.
NilpotentSolution iterate_from(const AcyclicSystem& system, const std::vector<Word>& seed);

// iterate_from with the all-trivial seed.
NilpotentSolution solve(const AcyclicSystem& system);

// Runs the iteration from `trials` random seeds and checks every run lands
// on the same solution as solve().
bool verify_uniqueness(const AcyclicSystem& system, int trials, std::uint64_t seed = 1);

// Header `vars m=<m> coeff p=<p> class=<c>` then `x<i> = <word>` lines.
AcyclicSystem parse_system(std::string_view text);

// `x1 = g1 g2` lines.
std::string to_string(const NilpotentSolution& solution);

}  // namespace jcalc
