#include "jcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jcalc/acyclic.hpp"
#include "jcalc/foxrep.hpp"
#include "jcalc/johnson.hpp"
#include "jcalc/lyndon.hpp"
#include "jcalc/magnus.hpp"
#include "jcalc/nilpotent.hpp"

namespace jcalc::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad flags, unreadable files: exit 2 like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> endo_files;
  std::string word;
  std::string system_file;
  int k = 0;
  int genus = 0;
  int rank = 0;
  int bound = 8;
  int trials = 20;
  std::uint64_t seed = 20240611;
  std::string format = "text";
};

struct Report {
  json inputs = json::object();
  json result = json::object();
  json diagnostics = json::array();
  std::string text;
  int exit_code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Endomorphism load_endo(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_endomorphism(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.position(), e.line());
  }
}

// Largest generator index mentioned, so `--word` works without `--rank`.
int infer_rank(const std::string& text) {
  static const std::regex gen(R"(x(\d+))");
  int rank = 1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), gen); it != std::sregex_iterator(); ++it) {
    rank = std::max(rank, std::stoi((*it)[1].str()));
  }
  return rank;
}

Word load_word(const Options& o, int fallback_rank) {
  const int rank = o.rank > 0 ? o.rank : fallback_rank > 0 ? fallback_rank : infer_rank(o.word);
  return parse_word(o.word, rank);
}

json to_json(const Integer& c) { return c.str(); }

json to_json(const GroupRingElem& a) {
  json terms = json::array();
  for (const auto& [c, w] : structured_terms(a)) terms.push_back({{"coefficient", to_json(c)}, {"word", to_string(w)}});
  return terms;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coefficient", to_json(c)}, {"exponents", e}});
  return terms;
}

template <class T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const LieVector& v) {
  json terms = json::array();
  const auto& basis = v.basis();
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i] != 0) terms.push_back({{"basis", lyndon_label(basis[i])}, {"coefficient", v.coords[i]}});
  }
  return {{"degree", v.degree}, {"terms", terms}};
}

json to_json(const TruncSeries& s) {
  json terms = json::array();
  for (const auto& [mono, c] : s.terms()) terms.push_back({{"monomial", mono}, {"coefficient", c}});
  return terms;
}

json to_json(const Endomorphism& phi) {
  json images = json::array();
  for (const Word& w : phi.images()) images.push_back(to_string(w));
  return images;
}

json to_json(const LcsDegree& d) {
  switch (d.kind) {
    case LcsDegree::Kind::Finite:
      return {{"kind", "finite"}, {"degree", d.degree}};
    case LcsDegree::Kind::AboveBound:
      return {{"kind", "above_bound"}, {"at_least", d.degree}};
    case LcsDegree::Kind::Infinite:
      break;
  }
  return {{"kind", "infinite"}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_endo(const Options& o, std::size_t count) {
  require(o.endo_files.size() == count,
          "expected " + std::to_string(count) + " --endo file" + (count == 1 ? "" : "s") + ", got " +
              std::to_string(o.endo_files.size()));
}

void require_k(const Options& o) { require(o.k > 0, "-k is required"); }

Report verb_parse(const Options& o) {
  Report r;
  require(o.endo_files.empty() != o.word.empty(), "parse takes exactly one of --endo or --word");
  if (!o.word.empty()) {
    const Word w = load_word(o, 0);
    r.inputs = {{"word", o.word}, {"rank", w.rank()}};
    r.result = {{"word", to_string(w)}, {"length", w.length()}};
    r.text = to_string(w) + "\n";
  } else {
    const Endomorphism phi = load_endo(o.endo_files[0]);
    r.inputs = {{"endo", o.endo_files[0]}};
    r.result = {{"rank", phi.rank()}, {"images", to_json(phi)}};
    r.text = to_string(phi);
  }
  return r;
}

Report verb_apply(const Options& o) {
  require_endo(o, 1);
  require(!o.word.empty(), "--word is required");
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const Word w = load_word(o, phi.rank());
  const Word image = apply(phi, w);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}, {"word", to_string(w)}};
  r.result = {{"word", to_string(image)}};
  r.text = to_string(image) + "\n";
  return r;
}

Report verb_compose(const Options& o) {
  require_endo(o, 2);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const Endomorphism psi = load_endo(o.endo_files[1]);
  const Endomorphism c = compose(phi, psi);
  Report r;
  r.inputs = {{"outer", o.endo_files[0]}, {"inner", o.endo_files[1]}};
  r.result = {{"rank", c.rank()}, {"images", to_json(c)}};
  r.text = to_string(c);
  return r;
}

Report verb_fox(const Options& o) {
  Report r;
  require(o.endo_files.empty() != o.word.empty(), "fox takes exactly one of --endo or --word");
  if (!o.word.empty()) {
    const Word w = load_word(o, 0);
    r.inputs = {{"word", to_string(w)}, {"rank", w.rank()}};
    json derivatives = json::array();
    for (int i = 1; i <= w.rank(); ++i) {
      const GroupRingElem d = fox_derivative(w, i);
      derivatives.push_back(to_json(d));
      r.text += "d/dx" + std::to_string(i) + ": " + to_string(d) + "\n";
    }
    r.result = {{"derivatives", derivatives}};
  } else {
    const Endomorphism phi = load_endo(o.endo_files[0]);
    const GRMatrix j = fox_jacobian(phi);
    r.inputs = {{"endo", o.endo_files[0]}};
    r.result = {{"jacobian", to_json(j)}};
    r.text = to_string(j);
  }
  return r;
}

Report verb_magnus_rep(const Options& o) {
  require_endo(o, 1);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const GRMatrix m = magnus_rep(phi);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}};
  r.result = {{"matrix", to_json(m)}};
  r.text = to_string(m);
  return r;
}

Report verb_abelian_det(const Options& o) {
  require_endo(o, 1);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const AutomorphismObstruction ob = automorphism_obstruction(phi);
  const bool unit = ob.verdict == AutomorphismObstruction::Verdict::Unit;
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}};
  r.result = {{"determinant", to_json(ob.determinant)},
              {"is_unit", unit},
              {"verdict", unit ? "inconclusive" : "not_an_automorphism"},
              {"augmentation", to_json(ob.augmentation)},
              {"abelianized", to_json(ob.abelianized)}};
  r.text = "det = " + to_string(ob.determinant) + "\n";
  r.text += unit ? "verdict: unit determinant (inconclusive)"
                 : "verdict: NOT a free-group automorphism (non-unit determinant)";
  r.text += "; augmentation = " + ob.augmentation.str() + "\n";
  return r;
}

Report verb_two_connected(const Options& o) {
  require_endo(o, 1);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const TwoConnectedness tc = two_connectedness(phi);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}};
  r.result = {{"two_connected", tc.two_connected}, {"determinant", to_json(tc.determinant)}};
  r.text = std::string("two-connected: ") + (tc.two_connected ? "yes" : "no") + "\n";
  r.text += "abelianization determinant = " + tc.determinant.str() + "\n";
  return r;
}

Report verb_lcs_degree(const Options& o) {
  require(!o.word.empty(), "--word is required");
  require(o.bound >= 1, "--bound must be >= 1");
  const Word w = load_word(o, 0);
  const LcsDegree d = lcs_degree(w, o.bound);
  Report r;
  r.inputs = {{"word", to_string(w)}, {"rank", w.rank()}, {"bound", o.bound}};
  r.result = to_json(d);
  r.text = "lcs degree: " + to_string(d) + "\n";
  return r;
}

Report verb_lie_coords(const Options& o) {
  require(!o.word.empty(), "--word is required");
  require_k(o);
  const Word w = load_word(o, 0);
  const LieVector v = lie_coordinates(w, o.k);
  Report r;
  r.inputs = {{"word", to_string(w)}, {"rank", w.rank()}, {"k", o.k}};
  r.result = to_json(v);
  r.text = to_string(v) + "\n";
  return r;
}

Report verb_johnson(const Options& o) {
  require_endo(o, 1);
  require_k(o);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const JohnsonValue v = johnson(phi, o.k);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}, {"k", o.k}};
  json values = json::array();
  for (const LieVector& x : v.values) values.push_back(to_json(x));
  r.result = {{"values", values}, {"is_zero", v.is_zero()}};
  r.text = to_string(v);
  return r;
}

Report verb_refined_johnson(const Options& o) {
  require_endo(o, 1);
  require_k(o);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const RefinedJohnsonValue v = refined_johnson(phi, o.k);
  const JohnsonValue p1 = first_projection(v);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}, {"k", o.k}};
  json cosets = json::array();
  for (const TruncSeries& s : v.cosets) cosets.push_back(to_json(s));
  json projection = json::array();
  for (const LieVector& x : p1.values) projection.push_back(to_json(x));
  r.result = {{"cosets", cosets}, {"first_projection", projection}, {"is_zero", v.is_zero()}};
  r.text = to_string(v);
  return r;
}

Report verb_phi(const Options& o) {
  require_endo(o, 1);
  require_k(o);
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const AutNk a = phi_k(phi, o.k);
  std::vector<Word> normal;
  for (int i = 1; i <= a.rank(); ++i) normal.push_back(nk_normal_form(a.lift().image(i), o.k));
  const AutNk canonical(Endomorphism(normal), o.k);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}, {"k", o.k}};
  r.result = {{"k", o.k}, {"images", to_json(canonical.lift())}, {"is_identity", canonical.is_identity()}};
  r.text = to_string(canonical);
  return r;
}

Report verb_aut0(const Options& o) {
  require_endo(o, 1);
  require_k(o);
  require(o.genus > 0, "-g is required");
  const Endomorphism phi = load_endo(o.endo_files[0]);
  const AutNk a = phi_k(phi, o.k);
  const bool certified = is_aut0(a, o.genus);
  const Word zeta = boundary_word(o.genus);
  const LcsDegree d = lcs_degree(apply(phi, zeta) * zeta.inverse(), o.k + 1);
  Report r;
  r.inputs = {{"endo", o.endo_files[0]}, {"k", o.k}, {"g", o.genus}};
  r.result = {{"certified", certified}, {"boundary_defect_lcs_degree", to_json(d)}};
  r.text = std::string("aut0 certificate: ") + (certified ? "yes" : "no") + "\n";
  r.text += "lcs degree of lift(zeta) zeta^-1: " + to_string(d) + "\n";
  if (!certified) r.diagnostics.push_back("this lift is not a certificate; other lifts of the same class may be");
  return r;
}

Report verb_solve_acyclic(const Options& o) {
  require(!o.system_file.empty(), "a system FILE is required");
  require(o.trials >= 0, "--trials must be >= 0");
  const std::string text = read_file(o.system_file);
  AcyclicSystem sys = [&] {
    try {
      return parse_system(text);
    } catch (const ParseError& e) {
      throw ParseError(o.system_file + ": " + e.message(), e.position(), e.line());
    }
  }();
  const NilpotentSolution sol = solve(sys);
  const bool unique = verify_uniqueness(sys, o.trials, o.seed);
  Report r;
  r.inputs = {{"system", o.system_file}, {"trials", o.trials}, {"seed", o.seed}};
  json values = json::array();
  const Alphabet g_only{0, sys.coefficients().p};
  for (const Word& v : sol.values) values.push_back(to_string(v, g_only));
  r.result = {{"class", sys.coefficients().nilpotency_class}, {"values", values}, {"unique", unique}};
  r.text = to_string(sol);
  r.text += "uniqueness: " + std::string(unique ? "confirmed" : "FAILED") + " over " + std::to_string(o.trials) +
            " random seeds\n";
  if (!unique) r.exit_code = kDomainError;
  return r;
}

Report verb_witt(const Options& o) {
  require(o.rank > 0, "--rank is required");
  require_k(o);
  const std::int64_t w = witt_rank(o.rank, o.k);
  Report r;
  r.inputs = {{"rank", o.rank}, {"k", o.k}};
  json labels = json::array();
  std::string listing;
  for (const LetterSeq& l : lyndon_words(o.rank, o.k)) {
    labels.push_back(lyndon_label(l));
    listing += (listing.empty() ? "" : " ") + lyndon_label(l);
  }
  r.result = {{"witt_rank", w}, {"lyndon_words", labels}};
  r.text = "witt rank: " + std::to_string(w) + "\n";
  if (!listing.empty()) r.text += "lyndon words: " + listing + "\n";
  return r;
}

GroupRingElem ring_element(int rank, std::initializer_list<std::pair<int, const char*>> terms) {
  GroupRingElem out(rank);
  for (const auto& [c, w] : terms) out.add_term(parse_word(w, rank), c);
  return out;
}

// The worked examples, checked against their published values.
std::vector<std::pair<std::string, std::function<bool()>>> golden_checks() {
  static const char* psi_text = "x1 -> x1 x2 x1 x2^-1 x1^-1\nx2 -> x2\n";
  return {
      {"magnus representation of psi",
       [] {
         const GRMatrix m = magnus_rep(parse_endomorphism(psi_text));
         return m(0, 0) == ring_element(2, {{1, "1"}, {1, "x2^-1 x1^-1"}, {-1, "x1 x2 x1^-1 x2^-1 x1^-1"}}) &&
                m(1, 0) == ring_element(2, {{1, "x1^-1"}, {-1, "x2 x1^-1 x2^-1 x1^-1"}}) && m(0, 1).is_zero() &&
                m(1, 1) == GroupRingElem::constant(2, 1);
       }},
      {"abelianized determinant of psi",
       [] {
         const auto ob = automorphism_obstruction(parse_endomorphism(psi_text));
         LaurentPoly expected = LaurentPoly::constant(2, 1);
         expected += LaurentPoly::monomial({-1, -1});
         expected -= LaurentPoly::monomial({-1, 0});
         return ob.determinant == expected && !is_unit(ob.determinant) &&
                ob.verdict == AutomorphismObstruction::Verdict::NonUnit;
       }},
      {"second Johnson homomorphism of psi",
       [] {
         const JohnsonValue v = johnson(parse_endomorphism(psi_text), 2);
         return v.values.size() == 2 && v.values[0].coords == std::vector<std::int64_t>{-1} &&
                v.values[1].is_zero();
       }},
      {"abelian acyclic system",
       [] {
         const AcyclicSystem sys =
             parse_system("vars m=2 coeff p=3 class=1\nx1 = g1 x1 g2 x2 x1^-1 x2^-1\nx2 = x1 g3 x1^-1\n");
         const NilpotentSolution sol = solve(sys);
         const Alphabet g_only{0, 3};
         return sol.values.size() == 2 && sol.values[0] == parse_word("g1 g2", g_only) &&
                sol.values[1] == parse_word("g3", g_only) && verify_uniqueness(sys, 20, 1);
       }},
      {"identity has vanishing Johnson value",
       [] { return johnson(Endomorphism::identity(2), 3).is_zero(); }},
  };
}

Report verb_selftest(const Options&) {
  Report r;
  json checks = json::array();
  bool all = true;
  for (const auto& [name, check] : golden_checks()) {
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    checks.push_back({{"name", name}, {"passed", ok}});
    r.text += (ok ? "PASS " : "FAIL ") + name + "\n";
    if (!error.empty()) r.diagnostics.push_back(name + ": " + error);
  }
  r.result = {{"checks", checks}, {"all_passed", all}};
  if (!all) r.exit_code = kDomainError;
  return r;
}

struct Verb {
  const char* name;
  const char* help;
  Report (*handler)(const Options&);
  unsigned flags;
};

enum : unsigned {
  kEndo = 1u << 0,
  kWord = 1u << 1,
  kRank = 1u << 2,
  kK = 1u << 3,
  kGenus = 1u << 4,
  kBound = 1u << 5,
  kSystem = 1u << 6,
  kTrials = 1u << 7,
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table = {
      {"parse", "Parse and print a word or endomorphism in canonical form", verb_parse, kEndo | kWord | kRank},
      {"apply", "Apply an endomorphism to a word", verb_apply, kEndo | kWord | kRank},
      {"compose", "Compose two endomorphisms (first after second)", verb_compose, kEndo},
      {"fox", "Fox derivatives of a word, or the Fox Jacobian of an endomorphism", verb_fox,
       kEndo | kWord | kRank},
      {"magnus-rep", "Magnus representation matrix over the group ring", verb_magnus_rep, kEndo},
      {"abelian-det", "Abelianized determinant of the Magnus representation", verb_abelian_det, kEndo},
      {"two-connected", "Whether the endomorphism is 2-connected", verb_two_connected, kEndo},
      {"lcs-degree", "Lower central series degree of a word", verb_lcs_degree, kWord | kRank | kBound},
      {"lie-coords", "Lyndon coordinates of a word in Gamma^k / Gamma^{k+1}", verb_lie_coords,
       kWord | kRank | kK},
      {"johnson", "Johnson homomorphism J_k", verb_johnson, kEndo | kK},
      {"refined-johnson", "Refined Johnson homomorphism with values mod Gamma^{2k-1}", verb_refined_johnson,
       kEndo | kK},
      {"phi", "Induced automorphism of the nilpotent quotient N_k", verb_phi, kEndo | kK},
      {"aut0", "Boundary-word certificate for Aut_0 N_k", verb_aut0, kEndo | kK | kGenus},
      {"solve-acyclic", "Solve an acyclic system over a free nilpotent group", verb_solve_acyclic,
       kSystem | kTrials},
      {"witt", "Witt rank and Lyndon words of a given length", verb_witt, kRank | kK},
      {"selftest", "Check the worked examples against their known values", verb_selftest, 0},
  };
  return table;
}

json error_document(const std::string& verb, const std::string& message) {
  return {{"verb", verb}, {"inputs", json::object()}, {"result", nullptr}, {"diagnostics", json::array({message})}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"jcalc: free-group endomorphisms, Fox calculus, Magnus expansions and Johnson homomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  std::map<const CLI::App*, const Verb*> by_app;
  for (const Verb& v : verbs()) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    by_app[sub] = &v;
    if (v.flags & kEndo) sub->add_option("--endo", o.endo_files, "Endomorphism file");
    if (v.flags & kWord) sub->add_option("--word", o.word, "Word, e.g. 'x1 x2^-1 [x1,x2]'");
    if (v.flags & kRank) sub->add_option("--rank", o.rank, "Free group rank");
    if (v.flags & kK) sub->add_option("-k", o.k, "Level k");
    if (v.flags & kGenus) sub->add_option("-g", o.genus, "Surface genus");
    if (v.flags & kBound) sub->add_option("--bound", o.bound, "Truncation degree");
    if (v.flags & kSystem) sub->add_option("FILE", o.system_file, "Acyclic system file");
    if (v.flags & kTrials) sub->add_option("--trials", o.trials, "Random seeds for the uniqueness check");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "jcalc: " << e.what() << "\n";
    return kUsageError;
  }

  const Verb* verb = by_app.at(app.get_subcommands().front());
  const bool structured = o.format == "structured";
  auto fail = [&](int code, const std::string& message) {
    if (structured) out << error_document(verb->name, message).dump(2) << "\n";
    err << "jcalc " << verb->name << ": " << message << "\n";
    return code;
  };

  Report report;
  try {
    report = verb->handler(o);
  } catch (const UsageError& e) {
    return fail(kUsageError, e.what());
  } catch (const ParseError& e) {
    return fail(kUsageError, e.what());
  } catch (const Error& e) {
    return fail(kDomainError, e.what());
  }

  if (structured) {
    json doc = {{"verb", verb->name},
                {"inputs", report.inputs},
                {"result", report.result},
                {"diagnostics", report.diagnostics}};
    out << doc.dump(2) << "\n";
  } else {
    out << report.text;
    for (const auto& d : report.diagnostics) err << "note: " << d.get<std::string>() << "\n";
  }
  return report.exit_code;
}

}  // namespace jcalc::cli
