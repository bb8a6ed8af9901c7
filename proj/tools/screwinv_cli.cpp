// screwinv: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 incomplete SAGBI basis,
// 3 invariance failure.

#include "screwinv/group.hpp"
#include "screwinv/poly.hpp"
#include "screwinv/reproduction.hpp"
#include "screwinv/sagbi.hpp"
#include "screwinv/screw.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

using namespace screwinv;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitNotInvariant = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_words(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Screw coordinates when every identifier is one, else identifiers sorted.
VarSetPtr infer_variables(const std::string& text) {
  static const std::regex ident("[A-Za-z][A-Za-z0-9]*");
  static const std::regex coord("[wv]([1-9])[1-3]");
  std::set<std::string> names;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator();
       ++it)
    names.insert(it->str());
  std::size_t m = 1;
  bool screw = true;
  for (const auto& n : names) {
    std::smatch match;
    if (!std::regex_match(n, match, coord)) {
      screw = false;
      break;
    }
    m = std::max<std::size_t>(m, std::stoul(match[1]));
  }
  if (screw) return screw_variables(m);
  return VariableSet::make({names.begin(), names.end()});
}

ActionKind parse_group(const std::string& g) {
  if (g == "se3") return ActionKind::FullAdjoint;
  if (g == "so3") return ActionKind::RotationSub;
  if (g == "t3") return ActionKind::TranslationSub;
  throw UsageError("unknown group '" + g + "'");
}

std::string describe_certificate_term(const CertificateTerm& t) {
  std::string s = to_string(t.coefficient);
  for (std::size_t i = 0; i < t.exponents.size(); ++i) {
    if (t.exponents[i] == 0) continue;
    s += " * g" + std::to_string(i + 1);
    if (t.exponents[i] > 1) s += "^" + std::to_string(t.exponents[i]);
  }
  return s;
}

struct Report {
  std::string command;
  json items = json::array();
  bool pass = true;
  std::string text;
  int code = kExitOk;
};

void emit(const Report& r, bool as_json) {
  if (as_json) {
    json j{{"command", r.command}, {"items", r.items}, {"pass", r.pass}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
}

// ---------------------------------------------------------------------------

struct PolyArgs {
  std::string eval;
  std::string format_text;
  std::string at;
  std::string vars;
};

Report cmd_poly(const PolyArgs& a) {
  Report r{"poly"};
  if (a.eval.empty() == a.format_text.empty())
    throw UsageError("poly: exactly one of --eval or --format is required");
  const std::string& text = a.eval.empty() ? a.format_text : a.eval;
  const VarSetPtr vars = a.vars.empty() ? infer_variables(text) : VariableSet::make(split_words(a.vars));
  const Polynomial f = parse(text, vars);
  const std::string canonical = format(f);
  if (!a.format_text.empty()) {
    r.items.push_back({{"polynomial", canonical}});
    r.text = canonical + "\n";
    return r;
  }
  std::map<std::string, Rational> point;
  for (const auto& assignment : split_words(a.at)) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw UsageError("poly: --at expects name=value pairs");
    point[assignment.substr(0, eq)] = parse_rational(assignment.substr(eq + 1));
  }
  const Rational value = evaluate(f, point);
  r.items.push_back({{"polynomial", canonical}, {"value", to_string(value)}});
  r.text = to_string(value) + "\n";
  return r;
}

Report cmd_subduct(const std::string& basis_path, const std::string& poly_text) {
  Report r{"subduct"};
  const BasisFile file = parse_basis_file(read_file(basis_path));
  const GeneratorSet basis(file.order, file.polynomials);
  const Polynomial f = parse(poly_text, file.order.variables());
  const SubductionResult s = subduct(f, basis);
  const bool member = s.remainder.is_zero();
  std::ostringstream out;
  out << "remainder: " << format(s.remainder, file.order) << "\n";
  out << "member: " << (member ? "true" : "false") << "\n";
  out << "certificate:\n";
  json cert = json::array();
  for (const auto& t : s.certificate) {
    out << "  " << describe_certificate_term(t) << "\n";
    cert.push_back({{"coefficient", to_string(t.coefficient)}, {"exponents", t.exponents}});
  }
  out << "generators:\n";
  json gens = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << "  g" << i + 1 << " = " << format(basis[i], file.order) << "\n";
    gens.push_back(format(basis[i], file.order));
  }
  r.items.push_back({{"remainder", format(s.remainder, file.order)},
                     {"member", member},
                     {"certificate", cert},
                     {"generators", gens}});
  r.text = out.str();
  return r;
}

Report cmd_sagbi(const std::string& path, int degree_bound, int max_iter, bool full) {
  Report r{"sagbi"};
  if (degree_bound < 1 || max_iter < 1) throw UsageError("sagbi: bounds must be >= 1");
  const BasisFile file = parse_basis_file(read_file(path));
  if (file.polynomials.empty()) throw UsageError("sagbi: generator file is empty");
  const SagbiResult result = sagbi_construct(GeneratorSet(file.order, file.polynomials),
                                             degree_bound, max_iter);
  std::string text = format_sagbi_result(result);
  json full_basis = json::array();
  for (const auto& g : result.basis.generators()) full_basis.push_back(format(g, result.basis.order()));
  json item{{"complete", result.complete},
            {"degree_bound", result.degree_bound},
            {"iterations", result.iterations},
            {"basis", full_basis}};
  if (!file.eliminate.empty()) {
    std::vector<std::string> rest;
    std::set<std::string> drop(file.eliminate.begin(), file.eliminate.end());
    for (const auto& n : file.order.variables()->names())
      if (!drop.count(n)) rest.push_back(n);
    const VarSetPtr target = VariableSet::make(rest);
    const auto invariants = eliminate(result.basis, file.eliminate, target);
    std::ostringstream out;
    out << TermOrder::lex(target).header() << "\n";
    out << "complete: " << (result.complete ? "true" : "false") << "\n";
    out << "degree_bound: " << result.degree_bound << "\n";
    out << "iterations: " << result.iterations << "\n";
    out << "# eliminated: " << result.basis.size() - invariants.size() << " of "
        << result.basis.size() << " generators\n";
    json inv = json::array();
    for (const auto& p : invariants) {
      out << format(p) << "\n";
      inv.push_back(format(p));
    }
    item["invariants"] = inv;
    text = full ? text + "\n" + out.str() : out.str();
  }
  r.items.push_back(item);
  r.pass = result.complete;
  r.code = result.complete ? kExitOk : kExitIncomplete;
  r.text = text;
  return r;
}

struct InvarianceArgs {
  std::string poly;
  std::string group = "se3";
  std::size_t screws = 1;
  std::string mode = "symbolic";
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSampleSeed;
};

Report cmd_invariance(const InvarianceArgs& a) {
  Report r{"invariance"};
  const ActionKind kind = parse_group(a.group);
  if (a.screws < 1 || a.screws > 9) throw UsageError("invariance: --screws must be in 1..9");
  const Polynomial f = parse(a.poly, screw_variables(a.screws));
  json item{{"polynomial", format(f)}, {"group", a.group}, {"screws", a.screws}, {"mode", a.mode}};
  std::ostringstream out;
  if (a.mode == "symbolic") {
    r.pass = check_invariant_symbolic(f, kind, a.screws);
  } else if (a.mode == "sample") {
    if (a.samples < 1) throw UsageError("invariance: --samples must be >= 1");
    const SampledCheck c = check_invariant_sampled(f, kind, a.screws, a.samples, a.seed);
    r.pass = c.invariant;
    item["samples"] = a.samples;
    item["seed"] = a.seed;
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      item["counterexample"] = {{"element", format_element(ce.element)},
                                {"point", format_multiscrew(ce.point)},
                                {"before", to_string(ce.before)},
                                {"after", to_string(ce.after)}};
      out << "counterexample:\n";
      out << "  element: " << format_element(ce.element) << "\n";
      out << "  point:\n";
      std::istringstream lines(format_multiscrew(ce.point));
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
      out << "  f(point): " << to_string(ce.before) << "\n";
      out << "  f(element . point): " << to_string(ce.after) << "\n";
    }
  } else {
    throw UsageError("invariance: --mode must be symbolic or sample");
  }
  item["pass"] = r.pass;
  r.items.push_back(item);
  r.text = std::string(r.pass ? "PASS" : "FAIL") + " " + a.group + " " + a.mode + ": " +
           format(f) + "\n" + out.str();
  r.code = r.pass ? kExitOk : kExitNotInvariant;
  return r;
}

Report cmd_catalog(std::size_t m, const std::string& which) {
  Report r{"catalog"};
  if (which == "t3-pullback") {
    if (m < 1 || m > 9) throw UsageError("catalog: --screws must be in 1..9");
    const PullbackSystem sys = pullback(ActionKind::TranslationSub, m);
    BasisFile file{sys.order, sys.group_variables, sys.images};
    for (const auto& p : sys.images) r.items.push_back({{"polynomial", format(p, sys.order)}});
    r.text = "# translation pullback, " + std::to_string(m) + " screw(s)\n" + format_basis_file(file);
    return r;
  }
  Catalog c = [&] {
    if (which == "se3") return se3_generator_catalog(m);
    if (which == "t3") return translation_sagbi_catalog(m);
    if (which == "so3") return so3_sagbi_catalog(m);
    throw UsageError("catalog: --which must be se3, t3, so3 or t3-pullback");
  }();
  for (const auto& e : c.entries) r.items.push_back({{"name", e.name}, {"polynomial", format(e.poly)}});
  r.text = format_catalog(c);
  return r;
}

Report cmd_dh(const std::string& path) {
  Report r{"dh"};
  const MultiScrew pair = parse_multiscrew(read_file(path));
  if (pair.size() != 2) throw UsageError("dh: pair file must hold exactly two twists");
  const DhPairReport d = dh_invariants(pair);
  auto ratio = [](const SqrtRatio& s) {
    json j{{"numerator", to_string(s.numerator)}, {"radicand", to_string(s.radicand)},
           {"float", s.approx()}};
    if (auto e = s.exact()) j["exact"] = to_string(*e);
    return j;
  };
  json item{{"omega11", to_string(d.omega11)},
            {"omega12", to_string(d.omega12)},
            {"omega22", to_string(d.omega22)},
            {"klein_cross", to_string(d.klein_cross)},
            {"cos_alpha", ratio(d.cos_alpha)},
            {"d_sin_alpha", ratio(d.d_sin_alpha)},
            {"alpha_float", d.alpha_float}};
  item["d"] = d.d ? ratio(*d.d) : json(nullptr);
  r.items.push_back(item);
  r.text = format_dh_report(d);
  return r;
}

Report cmd_verify(const std::string& suite, std::uint64_t seed) {
  Report r{"verify"};
  SuiteOptions opt;
  opt.seed = seed;
  std::vector<SuiteItem> items;
  try {
    items = run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  for (const auto& it : items) {
    r.pass = r.pass && it.pass;
    out << (it.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << it.id << "  " << it.description
        << "  [" << it.seconds << " s]\n";
    std::istringstream detail(it.detail);
    for (std::string line; std::getline(detail, line);) out << "          " << line << "\n";
    r.items.push_back({{"id", it.id},
                       {"description", it.description},
                       {"pass", it.pass},
                       {"detail", it.detail},
                       {"seconds", it.seconds}});
  }
  out << (r.pass ? "all items passed" : "some items failed") << "\n";
  r.text = out.str();
  r.code = r.pass ? kExitOk : kExitNotInvariant;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SE(3) invariants of multi-screws and SAGBI bases"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object");

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Format or evaluate a polynomial");
  poly->add_option("--format", poly_args.format_text, "Print in canonical form");
  poly->add_option("--eval", poly_args.eval, "Evaluate at --at");
  poly->add_option("--at", poly_args.at, "Assignments name=value, comma or space separated");
  poly->add_option("--vars", poly_args.vars, "Variable order, highest first");

  std::string basis_path, subduct_poly;
  auto* sub = app.add_subcommand("subduct", "Subduct a polynomial against a basis file");
  sub->add_option("--basis", basis_path, "Basis file")->required();
  sub->add_option("--poly", subduct_poly, "Polynomial")->required();

  std::string sagbi_path;
  int degree_bound = kDefaultDegreeBound, max_iter = kDefaultMaxIterations;
  bool full = false;
  auto* sagbi = app.add_subcommand("sagbi", "Complete a generator file to a SAGBI basis");
  sagbi->add_option("file", sagbi_path, "Generator file")->required();
  sagbi->add_option("--degree-bound", degree_bound, "Tete-a-tete degree bound")
      ->capture_default_str();
  sagbi->add_option("--max-iter", max_iter, "Maximum passes")->capture_default_str();
  sagbi->add_flag("--full", full, "Also print the basis before elimination");

  InvarianceArgs inv_args;
  auto* inv = app.add_subcommand("invariance", "Check invariance of a polynomial");
  inv->add_option("--poly", inv_args.poly, "Polynomial over w11..vm3")->required();
  inv->add_option("--group", inv_args.group, "se3, so3 or t3")->capture_default_str();
  inv->add_option("--screws", inv_args.screws, "Number of screws")->capture_default_str();
  inv->add_option("--mode", inv_args.mode, "symbolic or sample")->capture_default_str();
  inv->add_option("--samples", inv_args.samples, "Sample count")->capture_default_str();
  inv->add_option("--seed", inv_args.seed, "Sampling seed")->capture_default_str();

  std::size_t catalog_m = 1;
  std::string which = "se3";
  auto* cat = app.add_subcommand("catalog", "Print a generator catalog");
  cat->add_option("--screws", catalog_m, "Number of screws")->capture_default_str();
  cat->add_option("--which", which, "se3, t3, so3 or t3-pullback")->capture_default_str();

  std::string pair_path;
  auto* dh = app.add_subcommand("dh", "Twist angle and displacement of a screw pair");
  dh->add_option("--pair", pair_path, "Screw file with two twists")->required();

  std::string suite;
  std::uint64_t verify_seed = kDefaultSampleSeed;
  auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
  verify->add_option("--suite", suite, "Suite name (paper)")->required();
  verify->add_option("--seed", verify_seed, "Sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Report r;
    if (*poly) r = cmd_poly(poly_args);
    else if (*sub) r = cmd_subduct(basis_path, subduct_poly);
    else if (*sagbi) r = cmd_sagbi(sagbi_path, degree_bound, max_iter, full);
    else if (*inv) r = cmd_invariance(inv_args);
    else if (*cat) r = cmd_catalog(catalog_m, which);
    else if (*dh) r = cmd_dh(pair_path);
    else r = cmd_verify(suite, verify_seed);
    emit(r, as_json);
    return r.code;
  } catch (const BasisFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: parse error at position " << e.position() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
