#include "screwinv/group.hpp"
#include "screwinv/poly.hpp"
#include "screwinv/reproduction.hpp"

#include "doctest.h"

using namespace screwinv;

namespace {

VarSetPtr xyz() { return VariableSet::make({"x", "y", "z"}); }

Polynomial klein1() { return parse("w11*v11 + w12*v12 + w13*v13", screw_variables(1)); }

}  // namespace

TEST_CASE("rationals stay reduced") {
  const Rational r = parse_rational("-6/4");
  CHECK(to_string(r) == "-3/2");
  CHECK(denominator_of(r) > 0);
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
}

TEST_CASE("parse and format") {
  const auto vars = screw_variables(1);
  CHECK(format(klein1()) == "w11*v11 + w12*v12 + w13*v13");
  CHECK(parse("0", vars).is_zero());
  CHECK(parse("3/2*w11^2 - 3/2*w11^2", vars).is_zero());
  CHECK(format(parse("-v11 + 2", vars)) == "-v11 + 2");
  CHECK(format(parse("1", vars)) == "1");
  CHECK(format(parse("  w11 *w11\t- 1/3 * v13", vars)) == "w11^2 - 1/3*v13");
  CHECK(format(Polynomial(vars)) == "0");
}

TEST_CASE("parse errors carry a position") {
  const auto vars = xyz();
  CHECK_THROWS_AS(parse("x + w", vars), ParseError);
  try {
    parse("x + y^", vars);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse("x +", vars), ParseError);
  CHECK_THROWS_AS(parse("2/0*x", vars), ParseError);
  CHECK_THROWS_AS(parse("x y", vars), ParseError);
}

TEST_CASE("format follows the requested order") {
  const auto vars = xyz();
  const Polynomial f = parse("x + y^2 + z^3", vars);
  CHECK(format(f) == "x + y^2 + z^3");
  CHECK(format(f, TermOrder::lex(vars, {"z", "y", "x"})) == "z^3 + y^2 + x");
  CHECK(TermOrder::lex(vars, {"z", "y", "x"}).header() == "order: lex z y x");
}

TEST_CASE("ring operations") {
  const auto vars = xyz();
  const Polynomial x = Polynomial::variable(vars, "x");
  const Polynomial y = Polynomial::variable(vars, "y");
  CHECK(add(x, -x).is_zero());
  CHECK(mul(x, Polynomial(vars, Rational(1))) == x);
  CHECK(pow(x + y, 2) == parse("x^2 + 2*x*y + y^2", vars));
  CHECK(scale(x + y, Rational(-1, 2)) == parse("-1/2*x - 1/2*y", vars));
  CHECK(pow(x - y, 0) == Polynomial(vars, Rational(1)));
  CHECK_THROWS_AS(x + Polynomial::variable(screw_variables(1), "w11"), VariableMismatch);
}

TEST_CASE("leading term") {
  const auto vars = screw_variables(1);
  const Term lt = leading_term(klein1(), TermOrder::lex(vars));
  CHECK(lt.monomial == Monomial::variable(vars->size(), vars->index_of("w11")) *
                           Monomial::variable(vars->size(), vars->index_of("v11")));
  CHECK(lt.coefficient == 1);
  const Term c = leading_term(Polynomial(vars, Rational(5)), TermOrder::lex(vars));
  CHECK(c.monomial.is_unit());
  CHECK(c.coefficient == 5);
  CHECK_THROWS_AS(leading_term(Polynomial(vars), TermOrder::lex(vars)), std::domain_error);

  // w11 (w2 . v2) under the order with the second screw first: the
  // w11*w21*v21 term is the only one using w21, which outranks everything.
  const auto two = screw_variables(2);
  const Polynomial tat = parse("w11*w21*v21 + w11*w22*v22 + w11*w23*v23", two);
  const TermOrder second_first =
      TermOrder::lex(two, {"w21", "w22", "w23", "w11", "w12", "w13", "v21", "v22", "v23", "v11",
                           "v12", "v13"});
  CHECK(format(Polynomial::monomial(two, leading_monomial(tat, second_first))) == "w11*w21*v21");
}

TEST_CASE("substitute") {
  const auto vars = xyz();
  std::map<std::string, Polynomial> id{{"x", Polynomial::variable(vars, "x")},
                                       {"y", Polynomial::variable(vars, "y")},
                                       {"z", Polynomial::variable(vars, "z")}};
  const Polynomial f = parse("x*y + y - 3*z^2", vars);
  CHECK(substitute(f, id, vars) == f);

  std::map<std::string, Polynomial> kill_x = id;
  kill_x.at("x") = Polynomial(vars);
  CHECK(substitute(parse("x*y + y", vars), kill_x, vars) == parse("y", vars));

  std::map<std::string, Polynomial> partial{{"x", Polynomial::variable(vars, "x")}};
  CHECK_THROWS_AS(substitute(f, partial, vars), std::invalid_argument);

  // v -> v + t x w leaves the Klein form unchanged.
  const auto sys = pullback(ActionKind::TranslationSub, 1);
  std::map<std::string, Polynomial> images;
  const auto names = screw_coordinate_names(1);
  for (std::size_t i = 0; i < names.size(); ++i) images.emplace(names[i], sys.images[i]);
  const Polynomial moved = substitute(klein1(), images, sys.variables);
  CHECK(moved == change_variables(klein1(), sys.variables));
}

TEST_CASE("evaluate") {
  std::map<std::string, Rational> p{{"w11", 0}, {"w12", 0}, {"w13", 1},
                                    {"v11", 0}, {"v12", 0}, {"v13", 3}};
  CHECK(evaluate(klein1(), p) == 3);
  const Polynomial killing = parse("w11^2 + w12^2 + w13^2", screw_variables(1));
  CHECK(evaluate(killing, p) == 1);
  p.erase("v13");
  CHECK_THROWS_AS(evaluate(klein1(), p), std::invalid_argument);

  // Standard basis triple with zero v: the last row of the determinant vanishes.
  std::map<std::string, Rational> basis;
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t n = 1; n <= 3; ++n) {
      basis[omega_name(i, n)] = Rational(i == n ? 1 : 0);
      basis[vee_name(i, n)] = Rational(0);
    }
  CHECK(evaluate(z_poly(1, 2, 3), basis) == 0);
}

TEST_CASE("homogeneous components") {
  const auto vars = xyz();
  const Polynomial f = parse("x^2*y + x*z + y + 4", vars);
  const auto parts = homogeneous_components(f, {true, false, false});
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(2) == parse("x^2*y", vars));
  CHECK(parts.at(1) == parse("x*z", vars));
  CHECK(parts.at(0) == parse("y + 4", vars));
}

TEST_CASE("fuzz: round trip, ring axioms, order, valuation") {
  const auto vars = VariableSet::make({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(20261018);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial f = random_polynomial(vars, rng);
    const Polynomial g = random_polynomial(vars, rng);
    const Polynomial h = random_polynomial(vars, rng);
    REQUIRE(parse(format(f), vars) == f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE(f * g == g * f);

    const TermOrder order = random_lex_order(vars, rng);
    REQUIRE(parse(format(f, order), vars) == f);
    const Monomial a = random_monomial(vars->size(), rng);
    const Monomial b = random_monomial(vars->size(), rng);
    const Monomial c = random_monomial(vars->size(), rng);
    if (order.less(a, b)) REQUIRE(order.less(a * c, b * c));
    if (!f.is_zero() && !g.is_zero()) {
      const Term lf = leading_term(f, order), lg = leading_term(g, order);
      const Term lfg = leading_term(f * g, order);
      REQUIRE(lfg.monomial == lf.monomial * lg.monomial);
      REQUIRE(lfg.coefficient == lf.coefficient * lg.coefficient);
    }
  }
}
