#include "screwinv/group.hpp"
#include "screwinv/screw.hpp"

#include "doctest.h"

#include <Eigen/LU>

using namespace screwinv;

namespace {

Vector3q vec(Rational a, Rational b, Rational c) { return Vector3q(a, b, c); }

const Twist kRevolute{vec(0, 0, 1), Vector3q::Zero()};
const Twist kPrismatic{Vector3q::Zero(), vec(1, 0, 0)};
const Twist kHelical{vec(0, 0, 1), vec(0, 0, 3)};

}  // namespace

TEST_CASE("pitch and joint type") {
  CHECK(pitch(kRevolute) == Pitch::finite(0));
  CHECK(pitch(kPrismatic) == Pitch::infinite());
  CHECK(pitch(kHelical) == Pitch::finite(3));
  CHECK(pitch(Twist{}) == Pitch::undefined());
  CHECK(joint_type(kRevolute) == JointType::R);
  CHECK(joint_type(kPrismatic) == JointType::P);
  CHECK(joint_type(kHelical) == JointType::H);
  CHECK_THROWS_AS(joint_type(Twist{}), std::invalid_argument);
  CHECK(to_string(pitch(kHelical)) == "3");
  CHECK(to_string(pitch(kPrismatic)) == "infinite");

  CHECK(pitch_invariance_check(EuclideanElement::identity(), kHelical));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_element(ActionKind::FullAdjoint, rng);
    REQUIRE(pitch_invariance_check(g, kHelical));
    REQUIRE(pitch(apply_adjoint(g, kPrismatic)) == Pitch::infinite());
    REQUIRE(joint_type(apply_adjoint(g, kRevolute)) == JointType::R);
  }
}

TEST_CASE("SO(3) vector invariants") {
  CHECK(so3_vector_invariants(1).size() == 1);
  CHECK(so3_vector_invariants(2).size() == 3);
  const auto three = so3_vector_invariants(3);
  CHECK(three.size() == 7);
  CHECK(three.back().name == "bracket_123");

  const auto x1 = x_vector(1, vector_variables(1));
  CHECK(gram_minor({1}, {1}) == dot(x1, x1));

  std::map<std::string, Rational> e12{{"x11", 1}, {"x12", 0}, {"x13", 0},
                                      {"x21", 0}, {"x22", 1}, {"x23", 0}};
  CHECK(evaluate(gram_minor({1, 2}, {1, 2}), e12) == 1);

  CHECK(so3_sagbi_catalog(1).entries.size() == 1);
  CHECK(so3_sagbi_catalog(2).entries.size() == 4);
}

TEST_CASE("Gram syzygy") {
  const Polynomial abstract = gram_minor_abstract({1, 2, 3, 4}, {1, 2, 3, 4}, 4);
  CHECK_FALSE(abstract.is_zero());
  CHECK(dot_substitution(abstract, 4).is_zero());
  CHECK(gram_minor({1, 2, 3, 4}, {1, 2, 3, 4}).is_zero());
  // A 3x3 minor need not vanish.
  CHECK_FALSE(gram_minor({1, 2, 3}, {1, 2, 3}).is_zero());
}

TEST_CASE("catalogs") {
  CHECK(se3_generator_catalog(1).entries.size() == 2);
  CHECK(se3_generator_catalog(2).entries.size() == 6);
  const Catalog se3 = se3_generator_catalog(3);
  CHECK(se3.entries.size() == 14);
  CHECK(se3.conjectural);
  CHECK_FALSE(se3_generator_catalog(2).conjectural);

  const Catalog t1 = translation_sagbi_catalog(1);
  REQUIRE(t1.entries.size() == 4);
  CHECK(t1.entries[3].poly == parse("w11*v11 + w12*v12 + w13*v13", screw_variables(1)));
  CHECK(translation_sagbi_catalog(2).entries.size() == 10);
  const Catalog t3 = translation_sagbi_catalog(3);
  CHECK(t3.entries.size() == 21);
  CHECK(t3.completeness == Completeness::Unknown);

  const std::string dump = format_catalog(se3);
  CHECK(dump.find("# conjectural: true") != std::string::npos);
  CHECK(dump.find("# count: 14") != std::string::npos);
  CHECK_THROWS(se3_generator_catalog(4));
}

TEST_CASE("z polynomials") {
  for (std::size_t k = 1; k <= 3; ++k) CHECK(z_poly(1, 1, k).is_zero());

  // Independent oracle: a direct 3x3 determinant at omega_i = v_i = e_i.
  MultiScrew s;
  std::vector<Twist> twists;
  for (int i = 0; i < 3; ++i) {
    Vector3q e = Vector3q::Zero();
    e(i) = 1;
    twists.push_back({e, e});
  }
  s = MultiScrew(twists);
  const auto names = screw_coordinate_names(3);
  const auto point = screw_point(s);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      for (std::size_t k = 1; k <= 3; ++k) {
        Matrix3q m;
        for (int a = 0; a < 3; ++a) {
          m(0, a) = s[a].omega(i - 1);
          m(1, a) = s[a].omega(j - 1);
          m(2, a) = s[a].vee(k - 1);
        }
        REQUIRE(evaluate(z_poly(i, j, k), point) == m.determinant());
      }
  CHECK(evaluate(z_poly(1, 2, 3), point) == 1);
}

TEST_CASE("two-screw cubic") {
  const Polynomial c = two_screw_cubic();
  CHECK(format(c) ==
        "w11*w22*v22 + w11*w23*v23 - w12*w21*v22 - w13*w21*v23 - w21^2*v11 - w21*w22*v12 - "
        "w21*w23*v13");
  CHECK(check_invariant_symbolic(c, ActionKind::TranslationSub, 2));
}

TEST_CASE("twist angle and displacement") {
  const Vector3q w2 = vec(0, Rational(3, 5), Rational(4, 5));
  const MultiScrew pair{kRevolute, Twist{w2, vec(2, 0, 0).cross(w2)}};
  CHECK(pair[1].vee == vec(0, Rational(-8, 5), Rational(6, 5)));
  const DhPairReport r = dh_invariants(pair);
  CHECK(r.cos_alpha.exact() == Rational(4, 5));
  CHECK(r.d_sin_alpha.exact() == Rational(6, 5));
  REQUIRE(r.d);
  CHECK(r.d->exact() == Rational(2));
  CHECK(r.alpha_float == doctest::Approx(std::acos(0.8)));

  const DhPairReport same = dh_invariants(MultiScrew{kRevolute, kRevolute});
  CHECK(same.cos_alpha.exact() == Rational(1));
  CHECK(same.d_sin_alpha.exact() == Rational(0));
  CHECK_FALSE(same.d.has_value());

  // The mixed Klein form also carries the pitches: 2p for a repeated helix.
  const DhPairReport helix = dh_invariants(MultiScrew{kHelical, kHelical});
  CHECK(helix.cos_alpha.exact() == Rational(1));
  CHECK(helix.d_sin_alpha.exact() == Rational(6));

  // Irrational cosine stays exact as a square-root ratio.
  const DhPairReport skew = dh_invariants(MultiScrew{kRevolute, Twist{vec(1, 0, 1), Vector3q::Zero()}});
  CHECK_FALSE(skew.cos_alpha.exact().has_value());
  CHECK(skew.cos_alpha.numerator * skew.cos_alpha.numerator / skew.cos_alpha.radicand == Rational(1, 2));

  CHECK_THROWS_AS(dh_invariants(MultiScrew{kPrismatic, kRevolute}), std::invalid_argument);
}

TEST_CASE("screw files") {
  const MultiScrew s = parse_multiscrew("# pair\n0 0 1 0 0 0\n\n1/2 0 0 0 -3 0  # trailing\n");
  REQUIRE(s.size() == 2);
  CHECK(s[1].omega(0) == Rational(1, 2));
  CHECK(parse_multiscrew(format_multiscrew(s)) == s);
  CHECK_THROWS(parse_multiscrew("0 0 1 0 0\n"));
}
