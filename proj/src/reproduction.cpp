#include "screwinv/reproduction.hpp"

#include "screwinv/sagbi.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace screwinv {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Collects sub-checks; the item passes iff every sub-check does.
class Checklist {
 public:
  Checklist(std::string id, std::string description) {
    item_.id = std::move(id);
    item_.description = std::move(description);
  }

  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      note("FAILED: " + what);
    }
    return ok;
  }
  void note(const std::string& line) {
    if (!item_.detail.empty()) item_.detail += "\n";
    item_.detail += line;
  }

  SuiteItem finish() {
    item_.pass = failures_ == 0;
    item_.seconds = timer_.seconds();
    return item_;
  }

 private:
  SuiteItem item_;
  int failures_ = 0;
  Timer timer_;
};

std::set<std::string> leading_monomials_text(const std::vector<Polynomial>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) {
    const TermOrder order = TermOrder::lex(p.variables());
    out.insert(format(Polynomial::monomial(p.variables(), leading_monomial(p, order))));
  }
  return out;
}

std::vector<Polynomial> translation_invariant_basis(std::size_t m, SagbiResult& result) {
  const PullbackSystem system = pullback(ActionKind::TranslationSub, m);
  result = sagbi_construct(sagbi_seed(system), kDefaultDegreeBound, kDefaultMaxIterations);
  return eliminate(result.basis, system.group_variables, system.space());
}

bool contains(const std::vector<Polynomial>& list, const Polynomial& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

Polynomial printed_two_screw_cubic() {
  // w11 (w22 v22 + w23 v23) - w21 (w12 v22 + w21 v23 + w21 v11 + w22 v12 + w23 v13)
  return parse("w11*w22*v22 + w11*w23*v23 - w21*w12*v22 - w21^2*v23 - w21^2*v11"
               " - w21*w22*v12 - w21*w23*v13",
               screw_variables(2));
}

// ---------------------------------------------------------------------------

SuiteItem check_single_screw_translation_basis(const SuiteOptions&) {
  Checklist c("1", "single-screw translation SAGBI basis");
  SagbiResult result{GeneratorSet(TermOrder::lex(screw_variables(1))), false, 0, 0};
  const auto basis = translation_invariant_basis(1, result);
  c.expect(result.complete, "construction completes within degree bound 4");
  c.expect(basis.size() == 4, "four invariant generators (got " + std::to_string(basis.size()) + ")");
  c.expect(leading_monomials_text(basis) ==
               std::set<std::string>{"w11", "w12", "w13", "w11*v11"},
           "leading monomials {w11, w12, w13, w11*v11}");
  const Polynomial klein = parse("w11*v11 + w12*v12 + w13*v13", screw_variables(1));
  c.expect(basis.size() == 4 && basis[3] == klein, "fourth element is w1.v1");
  c.note("iterations: " + std::to_string(result.iterations) +
         ", full basis size: " + std::to_string(result.basis.size()));
  for (const auto& p : basis) c.note("  " + format(p));
  return c.finish();
}

SuiteItem check_two_screw_translation_basis(const SuiteOptions&) {
  Checklist c("2", "two-screw translation SAGBI basis");
  SagbiResult result{GeneratorSet(TermOrder::lex(screw_variables(2))), false, 0, 0};
  const auto basis = translation_invariant_basis(2, result);
  const VarSetPtr vars = screw_variables(2);
  c.expect(result.complete, "construction completes within degree bound 4");
  c.expect(basis.size() == 10, "ten invariant generators (got " + std::to_string(basis.size()) + ")");
  for (const char* w : {"w11", "w12", "w13", "w21", "w22", "w23"})
    c.expect(contains(basis, Polynomial::variable(vars, w)), std::string("coordinate ") + w);
  c.expect(contains(basis, parse("w11*v11 + w12*v12 + w13*v13", vars)), "w1.v1");
  c.expect(contains(basis, parse("w21*v21 + w22*v22 + w23*v23", vars)), "w2.v2");
  c.expect(contains(basis, parse("w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13", vars)),
           "w1.v2 + w2.v1");
  const Polynomial cubic = two_screw_cubic();
  c.expect(contains(basis, cubic), "cubic equals the subduction remainder of the tete-a-tete");
  c.expect(check_invariant_symbolic(cubic, ActionKind::TranslationSub, 2),
           "cubic is a translation invariant");
  const Polynomial printed = printed_two_screw_cubic();
  c.note("recomputed cubic: " + format(cubic));
  c.note("printed cubic:    " + format(printed));
  c.note(std::string("printed cubic differs from recomputed: ") + (printed != cubic ? "yes" : "no") +
         "; printed cubic translation invariant: " +
         (check_invariant_symbolic(printed, ActionKind::TranslationSub, 2) ? "yes" : "no"));
  return c.finish();
}

SuiteItem check_se3_catalog_invariance(const SuiteOptions&) {
  Checklist c("3", "SE(3) invariance of the generator catalogs, m = 1, 2, 3");
  std::size_t total = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    const Catalog cat = se3_generator_catalog(m);
    for (const auto& e : cat.entries) {
      ++total;
      c.expect(check_invariant_symbolic(e.poly, ActionKind::FullAdjoint, m),
               "m=" + std::to_string(m) + " " + e.name + " is SE(3) invariant");
    }
  }
  c.expect(total == 22, "22 catalog identities (got " + std::to_string(total) + ")");
  c.note(std::to_string(total) + " exact identities checked");
  return c.finish();
}

SuiteItem check_three_screw_translation_list(const SuiteOptions&) {
  Checklist c("4", "three-screw translation invariants");
  const Catalog cat = translation_sagbi_catalog(3);
  c.expect(cat.entries.size() == 21, "21 listed elements");
  for (const auto& e : cat.entries)
    c.expect(check_invariant_symbolic(e.poly, ActionKind::TranslationSub, 3),
             e.name + " is a translation invariant");
  c.expect(!check_invariant_symbolic(z_poly(1, 2, 1), ActionKind::TranslationSub, 3),
           "z_121 alone is not a translation invariant");
  c.expect(!check_invariant_symbolic(z_poly(3, 2, 3), ActionKind::TranslationSub, 3),
           "z_323 alone is not a translation invariant");
  // The coordinates and the six z-terms are not rotation invariant.
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i];
    const bool tail = i >= 15;
    if (e.name.starts_with("w") || tail)
      c.expect(!check_invariant_symbolic(e.poly, ActionKind::FullAdjoint, 3),
               e.name + " is not SE(3) invariant");
  }
  return c.finish();
}

SuiteItem check_bracket_sum_identity(const SuiteOptions& opt) {
  Checklist c("5", "bracket-sum identity z_123 + z_231 + z_312");
  const VarSetPtr vars = screw_variables(3);
  const auto w1 = omega_vector(1, vars), w2 = omega_vector(2, vars), w3 = omega_vector(3, vars);
  const auto v1 = vee_vector(1, vars), v2 = vee_vector(2, vars), v3 = vee_vector(3, vars);
  const Polynomial zsum = opt.z(1, 2, 3) + opt.z(2, 3, 1) + opt.z(3, 1, 2);
  const Polynomial brackets = bracket(v1, w2, w3) + bracket(w1, v2, w3) + bracket(w1, w2, v3);
  const Polynomial diff = zsum - brackets;
  c.expect(diff.is_zero(), "difference expands to zero");
  if (!diff.is_zero()) c.note("difference: " + format(diff));
  return c.finish();
}

SuiteItem check_gram_syzygy(const SuiteOptions& opt) {
  Checklist c("6", "4x4 Gram minor syzygy");
  const std::vector<std::size_t> all{1, 2, 3, 4};
  const Polynomial abstract = gram_minor_abstract(all, all, 4);
  c.expect(!abstract.is_zero(), "abstract minor is a nonzero polynomial");
  c.expect(dot_substitution(abstract, 4).is_zero(), "dot-product substitution gives zero");
  c.expect(gram_minor(all, all, 4).is_zero(), "direct expansion in coordinates gives zero");
  // A mixed-index minor from the same family.
  c.expect(gram_minor({1, 2, 3, 4}, {2, 3, 4, 1}, 4).is_zero(), "f^{1234}_{2341} vanishes");

  const VarSetPtr dots = dot_variables(4);
  int zero_count = 0;
  for (int s = 0; s < opt.syzygy_evaluations; ++s) {
    auto rng = sample_rng(opt.seed, 1000 + static_cast<std::uint64_t>(s));
    const MultiScrew vecs = random_multiscrew(4, rng);
    std::map<std::string, Rational> point;
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = i; j <= 4; ++j)
        point["p" + std::to_string(i) + std::to_string(j)] =
            vecs[i - 1].omega.dot(vecs[j - 1].omega);
    if (evaluate(abstract, point) == 0) ++zero_count;
  }
  c.expect(zero_count == opt.syzygy_evaluations,
           std::to_string(zero_count) + "/" + std::to_string(opt.syzygy_evaluations) +
               " random evaluations vanish");
  c.note(std::to_string(abstract.size()) + " terms in the abstract minor");
  return c.finish();
}

SuiteItem check_dh_formulas(const SuiteOptions& opt) {
  Checklist c("7", "twist angle and displacement formulas");
  const Twist a{Vector3q(0, 0, 1), Vector3q::Zero()};
  const Vector3q w2(Rational(0), Rational(3, 5), Rational(4, 5));
  const Vector3q p(2, 0, 0);
  const Twist b{w2, p.cross(w2)};
  const MultiScrew pair{a, b};
  const DhPairReport r = dh_invariants(pair);
  c.expect(r.cos_alpha.exact() == Rational(4, 5), "cos alpha = 4/5");
  c.expect(r.d_sin_alpha.exact() == Rational(6, 5), "d sin alpha = 6/5");
  c.expect(r.d && r.d->exact() == Rational(2), "d = 2");
  int unchanged = 0;
  for (int s = 0; s < opt.adjoint_samples; ++s) {
    auto rng = sample_rng(opt.seed, 2000 + static_cast<std::uint64_t>(s));
    const DhPairReport moved = dh_invariants(apply_adjoint(random_element(ActionKind::FullAdjoint, rng), pair));
    if (moved.cos_alpha.numerator == r.cos_alpha.numerator &&
        moved.cos_alpha.radicand == r.cos_alpha.radicand &&
        moved.d_sin_alpha.numerator == r.d_sin_alpha.numerator &&
        moved.d_sin_alpha.radicand == r.d_sin_alpha.radicand)
      ++unchanged;
  }
  c.expect(unchanged == opt.adjoint_samples,
           std::to_string(unchanged) + "/" + std::to_string(opt.adjoint_samples) +
               " adjoint images leave the report unchanged");
  return c.finish();
}

SuiteItem check_joint_classification(const SuiteOptions& opt) {
  Checklist c("8", "pitch and joint classification");
  const Twist revolute{Vector3q(0, 0, 1), Vector3q::Zero()};
  const Twist prismatic{Vector3q::Zero(), Vector3q(1, 0, 0)};
  const Twist helical{Vector3q(0, 0, 1), Vector3q(0, 0, 3)};
  c.expect(joint_type(revolute) == JointType::R, "pure rotation is R");
  c.expect(joint_type(prismatic) == JointType::P, "pure translation is P");
  c.expect(joint_type(helical) == JointType::H, "helical twist is H");
  c.expect(pitch(helical) == Pitch::finite(3), "helical pitch is 3");
  int stable = 0;
  for (int s = 0; s < opt.adjoint_samples; ++s) {
    auto rng = sample_rng(opt.seed, 3000 + static_cast<std::uint64_t>(s));
    const EuclideanElement g = random_element(ActionKind::FullAdjoint, rng);
    bool ok = true;
    for (const Twist& t : {revolute, prismatic, helical})
      ok = ok && joint_type(apply_adjoint(g, t)) == joint_type(t) && pitch_invariance_check(g, t);
    if (ok) ++stable;
  }
  c.expect(stable == opt.adjoint_samples,
           std::to_string(stable) + "/" + std::to_string(opt.adjoint_samples) +
               " adjoint images keep all three classifications");
  return c.finish();
}

SuiteItem check_membership_oracle(const SuiteOptions& opt) {
  Checklist c("9", "membership oracle agrees with sampled invariance");
  const Catalog cat = se3_generator_catalog(2);
  const GeneratorSet seed(TermOrder::lex(screw_variables(2)), cat.polynomials());
  const SagbiResult completed = sagbi_construct(seed, kDefaultDegreeBound, kDefaultMaxIterations);
  c.note("completed basis: " + std::to_string(completed.basis.size()) + " generators, complete=" +
         (completed.complete ? "true" : "false"));
  const Polynomial mixed = cat.at("klein_12");
  const Membership in = is_member(mixed, completed);
  c.expect(in.member, "w1.v2 + w2.v1 subducts to zero");
  c.expect(evaluate_certificate(in.subduction.certificate, completed.basis) == mixed,
           "certificate reproduces w1.v2 + w2.v1");
  const Polynomial half = parse("w11*v21 + w12*v22 + w13*v23", screw_variables(2));
  const Membership out = is_member(half, completed);
  c.expect(!out.member, "w1.v2 alone leaves a nonzero remainder");
  const SampledCheck sampled = check_invariant_sampled(half, ActionKind::FullAdjoint, 2,
                                                       kDefaultSamples, opt.seed);
  c.expect(!sampled.invariant && sampled.counterexample.has_value(),
           "w1.v2 alone fails sampled invariance with a counterexample");
  c.expect(!check_invariant_symbolic(half, ActionKind::FullAdjoint, 2),
           "w1.v2 alone fails symbolic invariance");
  c.expect(check_invariant_sampled(mixed, ActionKind::FullAdjoint, 2, kDefaultSamples, opt.seed)
               .invariant,
           "w1.v2 + w2.v1 passes sampled invariance");
  return c.finish();
}

SuiteItem check_property_suites(const SuiteOptions& opt) {
  Checklist c("10", "property suites");
  const int n = opt.property_cases;
  const VarSetPtr vars = VariableSet::make({"x", "y", "z", "u"});

  int ring_fail = 0, order_fail = 0, lt_fail = 0, round_fail = 0, ad_fail = 0, orth_fail = 0;
  for (int i = 0; i < n; ++i) {
    auto rng = sample_rng(opt.seed, 10000 + static_cast<std::uint64_t>(i));
    const Polynomial f = random_polynomial(vars, rng);
    const Polynomial g = random_polynomial(vars, rng);
    const Polynomial h = random_polynomial(vars, rng);
    if ((f + g) + h != f + (g + h) || (f * g) * h != f * (g * h) || f * (g + h) != f * g + f * h ||
        f + g != g + f || f * g != g * f || f - f != Polynomial(vars))
      ++ring_fail;

    const TermOrder order = random_lex_order(vars, rng);
    const Monomial a = random_monomial(vars->size(), rng);
    const Monomial b = random_monomial(vars->size(), rng);
    const Monomial m = random_monomial(vars->size(), rng);
    const auto ab = order.compare(a, b);
    if (order.compare(a * m, b * m) != ab || order.less(a, Monomial::unit(vars->size())))
      ++order_fail;

    if (!f.is_zero() && !g.is_zero()) {
      const Term lf = leading_term(f, order), lg = leading_term(g, order);
      const Term lfg = leading_term(f * g, order);
      if (lfg.monomial != lf.monomial * lg.monomial ||
          lfg.coefficient != lf.coefficient * lg.coefficient)
        ++lt_fail;
    }

    if (parse(format(f, order), vars) != f) ++round_fail;

    const EuclideanElement p = random_element(ActionKind::FullAdjoint, rng);
    const EuclideanElement q = random_element(ActionKind::FullAdjoint, rng);
    if (adjoint_matrix(p * q) != adjoint_matrix(p) * adjoint_matrix(q)) ++ad_fail;

    const Matrix3q& R = p.rotation().matrix();
    if (R.transpose() * R != Matrix3q::Identity() || R.determinant() != 1) ++orth_fail;
  }
  const std::string cases = " of " + std::to_string(n) + " cases";
  c.expect(ring_fail == 0, "ring axioms: " + std::to_string(ring_fail) + " failures" + cases);
  c.expect(order_fail == 0,
           "order multiplicativity: " + std::to_string(order_fail) + " failures" + cases);
  c.expect(lt_fail == 0,
           "leading term of products: " + std::to_string(lt_fail) + " failures" + cases);
  c.expect(round_fail == 0,
           "parse/format round trip: " + std::to_string(round_fail) + " failures" + cases);
  c.expect(ad_fail == 0, "Ad homomorphism: " + std::to_string(ad_fail) + " failures" + cases);
  c.expect(orth_fail == 0,
           "rotation orthogonality: " + std::to_string(orth_fail) + " failures" + cases);
  c.note(std::to_string(n) + " cases per property");
  return c.finish();
}

SuiteItem check_conjecture_flags(const SuiteOptions&) {
  Checklist c("11", "three-screw outputs carry their status flags");
  const Catalog se3 = se3_generator_catalog(3);
  const Catalog t3 = translation_sagbi_catalog(3);
  c.expect(se3.entries.size() == 14, "14 conjectured SE(3) generators");
  c.expect(se3.conjectural, "SE(3) three-screw list flagged conjectural");
  c.expect(t3.completeness == Completeness::Unknown,
           "translation three-screw list flagged completeness unknown");
  c.expect(format_catalog(se3).find("# conjectural: true") != std::string::npos,
           "catalog dump states the conjecture");
  c.expect(!se3_generator_catalog(2).conjectural, "two-screw list is not conjectural");
  return c.finish();
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper"};
  return names;
}

std::vector<SuiteItem> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name != "paper") throw std::invalid_argument("unknown suite '" + name + "'");
  return {check_single_screw_translation_basis(opt),
          check_two_screw_translation_basis(opt),
          check_se3_catalog_invariance(opt),
          check_three_screw_translation_list(opt),
          check_bracket_sum_identity(opt),
          check_gram_syzygy(opt),
          check_dh_formulas(opt),
          check_joint_classification(opt),
          check_membership_oracle(opt),
          check_property_suites(opt),
          check_conjecture_flags(opt)};
}

// ---------------------------------------------------------------------------

Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Monomial m(nvars);
  const int d = deg(rng);
  for (int k = 0; k < d; ++k) ++m[var(rng)];
  return m;
}

Polynomial random_polynomial(const VarSetPtr& vars, std::mt19937_64& rng, int max_terms,
                             int max_degree, int max_coefficient) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> num(-max_coefficient, max_coefficient);
  std::uniform_int_distribution<int> den(1, max_coefficient);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int p = num(rng);
    terms.push_back({random_monomial(vars->size(), rng, max_degree), Rational(p, den(rng))});
  }
  return Polynomial(vars, std::move(terms));
}

TermOrder random_lex_order(const VarSetPtr& vars, std::mt19937_64& rng) {
  std::vector<std::string> names = vars->names();
  std::shuffle(names.begin(), names.end(), rng);
  return TermOrder::lex(vars, names);
}

}  // namespace screwinv
