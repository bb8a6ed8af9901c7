#include "screwinv/group.hpp"
#include "screwinv/screw.hpp"

#include "doctest.h"

using namespace screwinv;

namespace {

Vector3q vec(Rational a, Rational b, Rational c) { return Vector3q(a, b, c); }

}  // namespace

TEST_CASE("quaternion rotations") {
  CHECK(Rotation(RationalQuaternion{1, 0, 0, 0}).matrix() == Matrix3q::Identity());

  Matrix3q quarter_x;
  quarter_x << 1, 0, 0,
               0, 0, -1,
               0, 1, 0;
  CHECK(Rotation(RationalQuaternion{1, 1, 0, 0}).matrix() == quarter_x);
  // Non-unit quaternions are normalized exactly.
  CHECK(Rotation(RationalQuaternion{3, 3, 0, 0}).matrix() == quarter_x);
  CHECK_THROWS_AS(Rotation(RationalQuaternion{0, 0, 0, 0}), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Matrix3q R = random_element(ActionKind::RotationSub, rng).rotation().matrix();
    REQUIRE(R.transpose() * R == Matrix3q::Identity());
    REQUIRE(R.determinant() == 1);
  }
}

TEST_CASE("element text form") {
  const EuclideanElement g(Rotation(RationalQuaternion{1, 2, 3, 4}), vec(5, Rational(-1, 2), 0));
  const std::string text = format_element(g);
  CHECK(text == "q: 1 2 3 4; t: 5 -1/2 0");
  const EuclideanElement back = parse_element(text);
  CHECK(back.rotation().matrix() == g.rotation().matrix());
  CHECK(back.translation() == g.translation());
  CHECK_THROWS(parse_element("q: 1 2 3; t: 0 0 0"));
}

TEST_CASE("adjoint matrix") {
  using Matrix6 = Matrix6q;
  CHECK(adjoint_matrix(EuclideanElement::identity()) == Matrix6::Identity());

  const auto shift_x = EuclideanElement::pure_translation(vec(1, 0, 0));
  const Twist spin_z{vec(0, 0, 1), Vector3q::Zero()};
  CHECK(apply_adjoint(shift_x, spin_z) == Twist{vec(0, 0, 1), vec(0, -1, 0)});

  const auto shift_z = EuclideanElement::pure_translation(vec(0, 0, 1));
  CHECK(apply_adjoint(shift_z, spin_z) == spin_z);

  const MultiScrew s{spin_z, Twist{vec(1, 2, 3), vec(4, 5, 6)}};
  CHECK(apply_adjoint(EuclideanElement::identity(), s) == s);

  // Ad(g) Ad(h) == Ad(g h)
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const EuclideanElement g = random_element(ActionKind::FullAdjoint, rng);
    const EuclideanElement h = random_element(ActionKind::FullAdjoint, rng);
    REQUIRE(adjoint_matrix(g * h) == adjoint_matrix(g) * adjoint_matrix(h));
  }
}

TEST_CASE("pullback images") {
  const auto sys = pullback(ActionKind::TranslationSub, 1);
  CHECK(sys.group_variables == std::vector<std::string>{"t1", "t2", "t3"});
  REQUIRE(sys.images.size() == 6);
  CHECK(sys.images[3] == parse("t2*w13 - t3*w12 + v11", sys.variables));

  // Setting the group variables to the identity recovers the coordinates.
  for (ActionKind kind : {ActionKind::TranslationSub, ActionKind::RotationSub, ActionKind::FullAdjoint}) {
    const auto p = pullback(kind, 2);
    std::vector<std::optional<Polynomial>> identity;
    for (const auto& name : p.variables->names()) {
      if (name == "q0") identity.emplace_back(Polynomial(p.space(), Rational(1)));
      else if (name[0] == 'q' || name[0] == 't') identity.emplace_back(Polynomial(p.space()));
      else identity.emplace_back(Polynomial::variable(p.space(), name));
    }
    const auto names = screw_coordinate_names(2);
    for (std::size_t i = 0; i < names.size(); ++i)
      CHECK(substitute(p.images[i], identity, p.space()) == Polynomial::variable(p.space(), names[i]));
  }
  CHECK_THROWS_AS(sagbi_seed(pullback(ActionKind::FullAdjoint, 1)), std::invalid_argument);
}

TEST_CASE("symbolic invariance") {
  const auto one = screw_variables(1);
  const auto two = screw_variables(2);
  CHECK(check_invariant_symbolic(parse("w11*v11 + w12*v12 + w13*v13", one), ActionKind::FullAdjoint, 1));
  CHECK(check_invariant_symbolic(
      parse("w11*v21 + w12*v22 + w13*v23 + w21*v11 + w22*v12 + w23*v13", two), ActionKind::FullAdjoint, 2));
  CHECK_FALSE(check_invariant_symbolic(parse("w11*v21 + w12*v22 + w13*v23", two),
                                       ActionKind::TranslationSub, 2));
  CHECK_FALSE(check_invariant_symbolic(parse("v11", one), ActionKind::FullAdjoint, 1));
  // Rotation-only invariant that translations break.
  const auto vv = parse("v11^2 + v12^2 + v13^2", one);
  CHECK(check_invariant_symbolic(vv, ActionKind::RotationSub, 1));
  CHECK_FALSE(check_invariant_symbolic(vv, ActionKind::FullAdjoint, 1));
  // Mixed degrees: constant plus invariant.
  CHECK(check_invariant_symbolic(parse("w11^2 + w12^2 + w13^2 + 5", one), ActionKind::FullAdjoint, 1));
}

TEST_CASE("sampled invariance agrees with symbolic") {
  const auto one = screw_variables(1);
  const auto killing = parse("w11^2 + w12^2 + w13^2", one);
  CHECK(check_invariant_sampled(killing, ActionKind::FullAdjoint, 1, 100).invariant);

  const SampledCheck bare = check_invariant_sampled(parse("v11", one), ActionKind::FullAdjoint, 1);
  CHECK_FALSE(bare.invariant);
  REQUIRE(bare.counterexample);
  CHECK(bare.counterexample->before != bare.counterexample->after);
  // The counterexample reproduces.
  const auto moved = apply_adjoint(bare.counterexample->element, bare.counterexample->point);
  CHECK(moved[0].vee(0) == bare.counterexample->after);

  const Catalog three = se3_generator_catalog(3);
  for (const auto& e : three.entries)
    CHECK_MESSAGE(check_invariant_sampled(e.poly, ActionKind::FullAdjoint, 3, 100).invariant, e.name);

  // Subgroup consistency and symbolic/sampled agreement on a small mixed family.
  const auto two = screw_variables(2);
  const std::vector<std::string> family{
      "w11", "v11^2 + v12^2 + v13^2", "w11*v21 + w12*v22 + w13*v23",
      "w11*w21 + w12*w22 + w13*w23", "w21*v21 + w22*v22 + w23*v23",
      "w11*w22*v22 + w11*w23*v23 - w12*w21*v22 - w13*w21*v23 - w21^2*v11 - w21*w22*v12 - w21*w23*v13"};
  for (const auto& text : family) {
    const Polynomial f = parse(text, two);
    bool full = false;
    for (ActionKind kind : {ActionKind::FullAdjoint, ActionKind::RotationSub, ActionKind::TranslationSub}) {
      const bool sym = check_invariant_symbolic(f, kind, 2);
      CHECK_MESSAGE(sym == check_invariant_sampled(f, kind, 2).invariant, text);
      if (kind == ActionKind::FullAdjoint) full = sym;
      else if (full) CHECK_MESSAGE(sym, text);
    }
  }
}

TEST_CASE("sampling is reproducible") {
  auto a = sample_rng(kDefaultSampleSeed, 17);
  auto b = sample_rng(kDefaultSampleSeed, 17);
  const auto ga = random_element(ActionKind::FullAdjoint, a);
  const auto gb = random_element(ActionKind::FullAdjoint, b);
  CHECK(format_element(ga) == format_element(gb));
  CHECK(random_multiscrew(2, a) == random_multiscrew(2, b));
}
