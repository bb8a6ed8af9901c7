#include "screwinv/group.hpp"
#include "screwinv/reproduction.hpp"
#include "screwinv/sagbi.hpp"
#include "screwinv/screw.hpp"

#include "doctest.h"

using namespace screwinv;

namespace {

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const VarSetPtr& vars) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse(t, vars));
  return out;
}

}  // namespace

TEST_CASE("generator sets are monic with distinct leading monomials") {
  const auto vars = VariableSet::make({"x", "y"});
  const GeneratorSet g(TermOrder::lex(vars), parse_all({"2*x + y", "x", "3"}, vars));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == parse("x + 1/2*y", vars));
  // x subducts to -1/2*y against the first generator
  CHECK(g[1] == parse("y", vars));
}

TEST_CASE("tete-a-tetes") {
  SUBCASE("free monoid") {
    const auto vars = VariableSet::make({"x", "y"});
    const GeneratorSet g(TermOrder::lex(vars), parse_all({"x", "y"}, vars));
    CHECK(tete_a_tetes(g, 8).empty());
  }
  SUBCASE("cusp") {
    const auto vars = VariableSet::make({"x"});
    const GeneratorSet g(TermOrder::lex(vars), parse_all({"x^2", "x^3"}, vars));
    CHECK(tete_a_tetes(g, 5).empty());
    const auto t = tete_a_tetes(g, 6);
    REQUIRE(t.size() == 1);
    const bool forward = t[0].a == GeneratorExponents{3, 0} && t[0].b == GeneratorExponents{0, 2};
    const bool backward = t[0].b == GeneratorExponents{3, 0} && t[0].a == GeneratorExponents{0, 2};
    CHECK((forward || backward));
    CHECK(tete_a_tete_polynomial(t[0], g).is_zero());
  }
  SUBCASE("two-screw pair behind the cubic") {
    const auto vars = screw_variables(2);
    const GeneratorSet g(TermOrder::lex(vars),
                         parse_all({"w11", "w21", "w21*v21 + w22*v22 + w23*v23",
                                    "w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13"},
                                   vars));
    REQUIRE(g.size() == 4);
    bool found = false;
    for (const auto& t : tete_a_tetes(g, 4)) {
      const GeneratorExponents a{1, 0, 1, 0}, b{0, 1, 0, 1};
      if ((t.a == a && t.b == b) || (t.a == b && t.b == a)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("subduction") {
  const auto vars = screw_variables(1);
  const GeneratorSet g(TermOrder::lex(vars),
                       parse_all({"w11^2 + w12^2 + w13^2", "w11*v11 + w12*v12 + w13*v13"}, vars));

  const SubductionResult self = subduct(g[0], g);
  CHECK(self.remainder.is_zero());
  REQUIRE(self.certificate.size() == 1);
  CHECK(self.certificate[0].exponents == GeneratorExponents{1, 0});

  const SubductionResult prod = subduct(g[1] * g[0], g);
  CHECK(prod.remainder.is_zero());

  const SubductionResult w = subduct(Polynomial::variable(vars, "w11"), g);
  CHECK(w.remainder == Polynomial::variable(vars, "w11"));
  CHECK(w.certificate.empty());

  const SubductionResult zero = subduct(Polynomial(vars), g);
  CHECK(zero.remainder.is_zero());
  CHECK(zero.certificate.empty());
}

TEST_CASE("subduction is sound and exhaustive on random input") {
  const auto vars = VariableSet::make({"a", "b", "c", "d"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const TermOrder order = random_lex_order(vars, rng);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(vars, rng, 3, 2, 5));
    const GeneratorSet basis(order, gens);
    Polynomial f = random_polynomial(vars, rng, 4, 3, 5);
    if (!basis.empty()) f += basis[0] * basis[basis.size() - 1];
    const SubductionResult s = subduct(f, basis);
    REQUIRE(f == s.remainder + evaluate_certificate(s.certificate, basis));
    if (!s.remainder.is_zero() && !s.remainder.is_constant())
      REQUIRE_FALSE(basis.factor(leading_monomial(s.remainder, order)).has_value());
  }
}

TEST_CASE("construction") {
  SUBCASE("independent seed is already complete") {
    const auto vars = VariableSet::make({"x", "y"});
    const auto r = sagbi_construct(GeneratorSet(TermOrder::lex(vars), parse_all({"x", "y"}, vars)));
    CHECK(r.complete);
    CHECK(r.basis.generators() == parse_all({"x", "y"}, vars));
  }
  SUBCASE("symmetric polynomials in two variables") {
    // x + y, x*y is a SAGBI basis; x + y, x^2 + y^2 is not and picks up x*y.
    const auto vars = VariableSet::make({"x", "y"});
    const auto r = sagbi_construct(
        GeneratorSet(TermOrder::lex(vars), parse_all({"x + y", "x^2 + y^2"}, vars)));
    CHECK(r.complete);
    REQUIRE(r.basis.size() == 2);
    CHECK(r.basis[1] == parse("x*y", vars));
  }
  SUBCASE("single-screw translation pullback") {
    const auto sys = pullback(ActionKind::TranslationSub, 1);
    const auto r = sagbi_construct(sagbi_seed(sys), 4);
    REQUIRE(r.complete);
    const auto inv = eliminate(r.basis, sys.group_variables, sys.space());
    CHECK(inv == parse_all({"w11", "w12", "w13", "w11*v11 + w12*v12 + w13*v13"}, sys.space()));
  }
  SUBCASE("a tiny bound reports incompleteness") {
    const auto sys = pullback(ActionKind::TranslationSub, 2);
    const auto r = sagbi_construct(sagbi_seed(sys), 4, 1);
    CHECK_FALSE(r.complete);
    CHECK(r.iterations == 1);
  }
}

TEST_CASE("membership and closure") {
  const auto vars = screw_variables(1);
  const auto killing = parse("w11^2 + w12^2 + w13^2", vars);
  const auto klein = parse("w11*v11 + w12*v12 + w13*v13", vars);
  const auto r = sagbi_construct(GeneratorSet(TermOrder::lex(vars), {killing, klein}));
  REQUIRE(r.complete);

  const Membership yes = is_member(klein.pow(2) * killing, r);
  CHECK(yes.member);
  CHECK(yes.definitive);
  CHECK(evaluate_certificate(yes.subduction.certificate, r.basis) == klein.pow(2) * killing);

  const Membership no = is_member(Polynomial::variable(vars, "w11"), r);
  CHECK_FALSE(no.member);
  CHECK(no.definitive);

  CHECK(verify_sagbi(r.basis, {klein * killing - killing.pow(2).scaled(Rational(3)), klein + Polynomial(vars, Rational(7))}));
  const auto xy = VariableSet::make({"x", "y"});
  const auto s = parse("x + y", xy);
  CHECK(verify_sagbi(GeneratorSet(TermOrder::lex(xy), {s}), {s.pow(2)}));
  CHECK_FALSE(verify_sagbi(GeneratorSet(TermOrder::lex(xy), {s}), {parse("x*y", xy)}));
}

TEST_CASE("two-screw SE(3) catalog closure") {
  const Catalog c = se3_generator_catalog(2);
  const auto vars = screw_variables(2);
  const auto r = sagbi_construct(GeneratorSet(TermOrder::lex(vars), c.polynomials()));
  REQUIRE(r.complete);
  CHECK(is_member(c.at("klein_12"), r).member);
  const auto lone = parse("w11*v21 + w12*v22 + w13*v23", vars);
  const Membership m = is_member(lone, r);
  CHECK_FALSE(m.member);
  CHECK(m.definitive);
  std::mt19937_64 rng(11);
  std::vector<Polynomial> witnesses;
  for (int i = 0; i < 10; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, c.entries.size() - 1);
    witnesses.push_back(c.entries[pick(rng)].poly * c.entries[pick(rng)].poly);
  }
  CHECK(verify_sagbi(r.basis, witnesses));
}

TEST_CASE("basis files") {
  const std::string text =
      "# comment\n"
      "order: lex t1 w11 v11\n"
      "eliminate: t1\n"
      "\n"
      "w11\n"
      "v11 + t1*w11\n";
  const BasisFile f = parse_basis_file(text);
  CHECK(f.eliminate == std::vector<std::string>{"t1"});
  REQUIRE(f.polynomials.size() == 2);
  CHECK(format_basis_file(f) == "order: lex t1 w11 v11\neliminate: t1\nw11\nt1*w11 + v11\n");
  CHECK(parse_basis_file(format_basis_file(f)).polynomials == f.polynomials);

  try {
    parse_basis_file("order: lex x y\nx + \n");
    FAIL("expected an error");
  } catch (const BasisFileError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_basis_file("x + y\n"), BasisFileError);
  CHECK_THROWS_AS(parse_basis_file("order: grevlex x\n"), BasisFileError);
  CHECK_THROWS_AS(parse_basis_file("order: lex x\neliminate: y\n"), BasisFileError);
}
