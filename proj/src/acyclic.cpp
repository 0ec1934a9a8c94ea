#include "jcalc/acyclic.hpp"

#include <random>
#include <regex>

#include "jcalc/nilpotent.hpp"

namespace jcalc {

bool is_acyclic(const Word& w, const Alphabet& alphabet) {
  check_same_rank(w.rank(), alphabet.rank());
  const auto sums = w.exponent_sums();
  for (int j = 1; j <= alphabet.x_count; ++j)
    if (sums[static_cast<std::size_t>(alphabet.x_index(j) - 1)] != 0) return false;
  return true;
}

AcyclicSystem::AcyclicSystem(int variables, CoefficientGroup coefficients, std::vector<Word> equations)
    : m_(variables), coeff_(coefficients), equations_(std::move(equations)) {
  if (m_ < 0) throw PreconditionError("variable count must be >= 0");
  if (coeff_.p < 1) throw PreconditionError("coefficient group needs p >= 1 generators");
  if (coeff_.nilpotency_class < 1) {
    throw PreconditionError("nilpotency class must be >= 1 (class c means Gamma^{c+1} = 1), got " +
                            std::to_string(coeff_.nilpotency_class));
  }
  if (static_cast<int>(equations_.size()) != m_) {
    throw PreconditionError("expected " + std::to_string(m_) + " equations, got " + std::to_string(equations_.size()));
  }
  const Alphabet alpha = alphabet();
  for (std::size_t i = 0; i < equations_.size(); ++i) {
    check_same_rank(equations_[i].rank(), alpha.rank());
    if (!is_acyclic(equations_[i], alpha)) {
      throw PreconditionError("equation for x" + std::to_string(i + 1) + " is not acyclic: " +
                              to_string(equations_[i], alpha));
    }
  }
}

std::vector<Word> evaluate(const AcyclicSystem& system, const std::vector<Word>& values) {
  const int p = system.coefficients().p;
  if (static_cast<int>(values.size()) != system.variables()) throw PreconditionError("wrong number of values");
  for (const Word& v : values) check_same_rank(v.rank(), p);
  std::vector<Word> out;
  out.reserve(values.size());
  for (const Word& eq : system.equations()) {
    Word result(p);
    for (Letter l : eq.letters()) {
      if (l.gen() <= p) {
        result.push_back(l);
      } else {
        const Word& v = values[static_cast<std::size_t>(l.gen() - p - 1)];
        result *= l.sign() > 0 ? v : v.inverse();
      }
    }
    out.push_back(nk_normal_form(result, system.coefficients().trivial_level()));
  }
  return out;
}

NilpotentSolution iterate_from(const AcyclicSystem& system, const std::vector<Word>& seed) {
  const int level = system.coefficients().trivial_level();
  std::vector<Word> x;
  for (const Word& s : seed) x.push_back(nk_normal_form(s, level));
  for (int t = 0; t < system.coefficients().nilpotency_class; ++t) x = evaluate(system, x);
  // Normal forms are canonical, so the fixed-point test is word equality.
  if (evaluate(system, x) != x) {
    throw NotStabilized("iteration did not reach a fixed point after " +
                        std::to_string(system.coefficients().nilpotency_class) + " steps");
  }
  return {system.coefficients(), std::move(x)};
}

NilpotentSolution solve(const AcyclicSystem& system) {
  return iterate_from(system, std::vector<Word>(static_cast<std::size_t>(system.variables()),
                                                Word(system.coefficients().p)));
}

bool verify_uniqueness(const AcyclicSystem& system, int trials, std::uint64_t seed) {
  const NilpotentSolution reference = solve(system);
  const int p = system.coefficients().p;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(0, 6);
  std::uniform_int_distribution<int> gen(1, p);
  std::bernoulli_distribution positive(0.5);
  for (int t = 0; t < trials; ++t) {
    std::vector<Word> start;
    for (int i = 0; i < system.variables(); ++i) {
      Word w(p);
      for (int l = length(rng); l > 0; --l) w.push_back(Letter(gen(rng), positive(rng) ? 1 : -1));
      start.push_back(std::move(w));
    }
    if (iterate_from(system, start).values != reference.values) return false;
  }
  return true;
}

AcyclicSystem parse_system(std::string_view text) {
  static const std::regex header(R"(^\s*vars\s+m\s*=\s*(\d+)\s+coeff\s+p\s*=\s*(\d+)\s+class\s*=\s*(\d+)\s*$)");
  static const std::regex equation(R"(^\s*x(\d+)\s*=(.*)$)");
  std::string body(text);
  std::size_t start = 0;
  std::size_t line_no = 0;
  bool have_header = false;
  int m = 0;
  CoefficientGroup coeff;
  std::vector<Word> equations;
  std::vector<bool> seen;
  while (start <= body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    ++line_no;
    std::string line = body.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (end == body.size()) break;
      continue;
    }
    std::smatch match;
    if (!have_header) {
      if (!std::regex_match(line, match, header)) {
        throw ParseError("expected header 'vars m=<m> coeff p=<p> class=<c>'", 0, line_no);
      }
      m = std::stoi(match[1].str());
      coeff.p = std::stoi(match[2].str());
      coeff.nilpotency_class = std::stoi(match[3].str());
      equations.assign(static_cast<std::size_t>(m), Word(m + coeff.p));
      seen.assign(static_cast<std::size_t>(m), false);
      have_header = true;
    } else {
      if (!std::regex_match(line, match, equation)) throw ParseError("expected 'x<i> = <word>'", 0, line_no);
      const int i = std::stoi(match[1].str());
      if (i < 1 || i > m) throw ParseError("variable x" + std::to_string(i) + " outside 1.." + std::to_string(m), 0, line_no);
      if (seen[static_cast<std::size_t>(i - 1)]) throw ParseError("x" + std::to_string(i) + " defined twice", 0, line_no);
      seen[static_cast<std::size_t>(i - 1)] = true;
      const auto column = static_cast<std::size_t>(match.position(2));
      try {
        equations[static_cast<std::size_t>(i - 1)] = parse_word(match[2].str(), Alphabet{m, coeff.p});
      } catch (const ParseError& e) {
        throw ParseError(e.message(), column + e.position(), line_no);
      }
    }
    if (end == body.size()) break;
  }
  if (!have_header) throw ParseError("missing header", 0, line_no);
  for (int i = 0; i < m; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) throw ParseError("no equation for x" + std::to_string(i + 1), 0, line_no);
  }
  return AcyclicSystem(m, coeff, std::move(equations));
}

std::string to_string(const NilpotentSolution& solution) {
  std::string out;
  const Alphabet g_only{0, solution.coefficients.p};
  for (std::size_t i = 0; i < solution.values.size(); ++i) {
    out += "x" + std::to_string(i + 1) + " = " + to_string(solution.values[i], g_only) + "\n";
  }
  return out;
}

}  // namespace jcalc
