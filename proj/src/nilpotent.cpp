#include "jcalc/nilpotent.hpp"

#include <charconv>
#include <regex>

#include "jcalc/foxrep.hpp"
#include "jcalc/groupring.hpp"
#include "jcalc/lyndon.hpp"
#include "jcalc/magnus.hpp"

namespace jcalc {

namespace {

void check_level(int k) {
  if (k < 2) throw PreconditionError("nilpotent level k must be >= 2, got " + std::to_string(k));
}

// w in Gamma^k, decided from degrees below k.
bool in_gamma_k(const Word& w, int k) {
  if (k <= 1 || w.empty()) return true;
  return lcs_degree(w, k - 1).at_least(k);
}

void check_compatible(const AutNk& a, const AutNk& b) {
  check_same_rank(a.rank(), b.rank());
  if (a.level() != b.level()) {
    throw PreconditionError("nilpotent levels differ: " + std::to_string(a.level()) + " vs " +
                            std::to_string(b.level()));
  }
}

// Integer inverse of a unimodular matrix via the adjugate.
std::vector<std::vector<int>> unimodular_inverse(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  const Integer det = integer_det(a);
  if (det != 1 && det != -1) throw PreconditionError("matrix is not unimodular (det " + det.str() + ")");
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // inv[i][j] = (-1)^{i+j} det(a without row j, column i) / det
      std::vector<std::vector<int>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<int> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Integer cof = integer_det(minor) * det;  // dividing by +-1 is multiplying by it
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = static_cast<int>(cof);
    }
  return inv;
}

}  // namespace

bool nk_equal(const NkElement& a, const NkElement& b) {
  check_same_rank(a.rank(), b.rank());
  if (a.k != b.k) {
    throw PreconditionError("nilpotent levels differ: " + std::to_string(a.k) + " vs " + std::to_string(b.k));
  }
  return in_gamma_k(a.rep * b.rep.inverse(), a.k);
}

Word nk_normal_form(const Word& w, int k) {
  if (k < 1) throw PreconditionError("nilpotent level k must be >= 1, got " + std::to_string(k));
  const int n = w.rank();
  Word result(n);
  if (k == 1) return result;
  const auto sums = w.exponent_sums();
  for (int i = 1; i <= n; ++i) result *= Word::generator(n, i, sums[static_cast<std::size_t>(i - 1)]);
  Word residual = result.inverse() * w;
  for (int j = 2; j < k; ++j) {
    const Word layer = lie_word(lie_coordinates(residual, j));
    result *= layer;
    residual = layer.inverse() * residual;
  }
  return result;
}

AutNk::AutNk(Endomorphism lift, int k) : lift_(std::move(lift)), k_(k) {
  check_level(k);
  const auto tc = two_connectedness(lift_);
  if (!tc.two_connected) {
    throw PreconditionError("lift does not induce an automorphism of N_" + std::to_string(k) +
                            ": abelianization determinant " + tc.determinant.str());
  }
}

AutNk AutNk::identity(int rank, int k) { return AutNk(Endomorphism::identity(rank), k); }

bool AutNk::is_identity() const {
  for (int i = 1; i <= rank(); ++i) {
    if (!in_gamma_k(lift_.image(i) * Word::generator(rank(), i, -1), k_)) return false;
  }
  return true;
}

bool operator==(const AutNk& a, const AutNk& b) {
  check_compatible(a, b);
  for (int i = 1; i <= a.rank(); ++i)
    if (!nk_equal(a.image(i), b.image(i))) return false;
  return true;
}

AutNk phi_k(const Endomorphism& phi, int k) { return AutNk(phi, k); }

AutNk autnk_compose(const AutNk& a, const AutNk& b) {
  check_compatible(a, b);
  return AutNk(compose(a.lift(), b.lift()), a.level());
}

AutNk autnk_invert(const AutNk& a) {
  const int n = a.rank();
  const int k = a.level();
  const auto inverse_matrix = unimodular_inverse(abelianization_matrix(a.lift()));
  std::vector<Word> images;
  for (int j = 0; j < n; ++j) {
    Word w(n);
    for (int i = 0; i < n; ++i) {
      w *= Word::generator(n, i + 1, inverse_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    images.push_back(std::move(w));
  }
  Endomorphism candidate(std::move(images));

  int rounds = 0;
  for (int j = 2; j < k; ++j) {
    // a o candidate == id mod Gamma^j; push the defect into Gamma^{j+1}.
    const Endomorphism product = compose(a.lift(), candidate);
    std::vector<Word> corrected;
    for (int i = 1; i <= n; ++i) {
      const Word defect = product.image(i) * Word::generator(n, i, -1);
      const Word layer = lie_word(lie_coordinates(defect, j));
      const Word pulled = lie_word(lie_coordinates(apply(candidate, layer), j));
      corrected.push_back(pulled.inverse() * candidate.image(i));
    }
    candidate = Endomorphism(std::move(corrected));
    ++rounds;
  }
  if (rounds > std::max(k - 2, 0)) throw InvariantViolation("autnk_invert used more than k-2 correction rounds");
  AutNk result(candidate, k);
  if (!autnk_compose(a, result).is_identity()) throw InvariantViolation("autnk_invert failed to produce an inverse");
  return result;
}

AutNk project(const AutNk& a, int k) {
  if (k > a.level()) {
    throw PreconditionError("cannot project N_" + std::to_string(a.level()) + " data to level " + std::to_string(k));
  }
  return AutNk(a.lift(), k);
}

bool is_aut0(const AutNk& a, int genus) {
  if (a.rank() % 2 != 0) throw PreconditionError("Aut_0 needs even rank, got " + std::to_string(a.rank()));
  if (genus < 1 || 2 * genus != a.rank()) {
    throw PreconditionError("genus " + std::to_string(genus) + " does not match rank " + std::to_string(a.rank()));
  }
  const Word zeta = boundary_word(genus);
  return in_gamma_k(apply(a.lift(), zeta) * zeta.inverse(), a.level() + 1);
}

Endomorphism realize_aut0(const AutNk& target, int genus) {
  if (!is_aut0(target, genus)) {
    throw PreconditionError("boundary certificate fails for this lift: lift(zeta) zeta^-1 is not in Gamma^" +
                            std::to_string(target.level() + 1));
  }
  Endomorphism result = target.lift();
  if (!(phi_k(result, target.level()) == target)) throw InvariantViolation("realized lift does not map onto target");
  return result;
}

std::string to_string(const AutNk& a) { return "# level k=" + std::to_string(a.level()) + "\n" + to_string(a.lift()); }

AutNk parse_autnk(std::string_view text) {
  static const std::regex header(R"(^\s*#\s*level\s+k\s*=\s*(\d+)\s*$)");
  std::string body(text);
  std::smatch match;
  int k = 0;
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) end = body.size();
    const std::string line = body.substr(start, end - start);
    if (std::regex_match(line, match, header)) {
      k = std::stoi(match[1].str());
      break;
    }
    start = end + 1;
  }
  if (k == 0) throw ParseError("missing '# level k=<k>' header", 0, 1);
  return AutNk(parse_endomorphism(text), k);
}

}  // namespace jcalc
