#pragma once

// Exact SE(3): rotations from rational quaternions, the adjoint action on
// multi-screws, pullback systems for invariant subalgebras, and symbolic or
// sampled invariance checks.

#include "screwinv/poly.hpp"
#include "screwinv/sagbi.hpp"
#include "screwinv/twist.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace screwinv {

struct RationalQuaternion {
  Rational w{1}, x{0}, y{0}, z{0};

  Rational norm2() const { return w * w + x * x + y * y + z * z; }
  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  /// Hamilton product.
  RationalQuaternion operator*(const RationalQuaternion& o) const;
  bool operator==(const RationalQuaternion&) const = default;
};

/// ||q||^2 * R(q), entrywise homogeneous quadratic in (q0, q1, q2, q3).
/// Works for any commutative ring type, so the same formula drives the exact
/// rotation and the symbolic invariance check.
template <typename T>
std::array<std::array<T, 3>, 3> quaternion_numerator(const T& q0, const T& q1, const T& q2,
                                                     const T& q3) {
  const T two_q1q2 = (q1 * q2) + (q1 * q2);
  const T two_q0q3 = (q0 * q3) + (q0 * q3);
  const T two_q1q3 = (q1 * q3) + (q1 * q3);
  const T two_q0q2 = (q0 * q2) + (q0 * q2);
  const T two_q2q3 = (q2 * q3) + (q2 * q3);
  const T two_q0q1 = (q0 * q1) + (q0 * q1);
  const T s0 = q0 * q0, s1 = q1 * q1, s2 = q2 * q2, s3 = q3 * q3;
  return {{{s0 + s1 - s2 - s3, two_q1q2 - two_q0q3, two_q1q3 + two_q0q2},
           {two_q1q2 + two_q0q3, s0 - s1 + s2 - s3, two_q2q3 - two_q0q1},
           {two_q1q3 - two_q0q2, two_q2q3 + two_q0q1, s0 - s1 - s2 + s3}}};
}

/// Exact element of SO(3). Construction asserts R^T R = I and det R = 1.
class Rotation {
 public:
  Rotation() : Rotation(RationalQuaternion{}) {}
  /// Throws std::invalid_argument for the zero quaternion.
  explicit Rotation(const RationalQuaternion& q);

  static Rotation identity() { return Rotation(); }

  const Matrix3q& matrix() const { return matrix_; }
  const RationalQuaternion& quaternion() const { return quaternion_; }

  Rotation operator*(const Rotation& other) const {
    return Rotation(quaternion_ * other.quaternion_);
  }

 private:
  RationalQuaternion quaternion_;
  Matrix3q matrix_;
};

inline Rotation rotation_from_quaternion(const RationalQuaternion& q) { return Rotation(q); }

/// (R, r) acting on points by x -> R x + r.
class EuclideanElement {
 public:
  EuclideanElement() : translation_(Vector3q::Zero()) {}
  EuclideanElement(Rotation rotation, Vector3q translation)
      : rotation_(std::move(rotation)), translation_(std::move(translation)) {}

  static EuclideanElement identity() { return {}; }
  static EuclideanElement pure_translation(const Vector3q& r) { return {Rotation(), r}; }
  static EuclideanElement pure_rotation(const Rotation& R) { return {R, Vector3q::Zero()}; }

  const Rotation& rotation() const { return rotation_; }
  const Vector3q& translation() const { return translation_; }

  /// (R2, r2) * (R1, r1) = (R2 R1, R2 r1 + r2).
  EuclideanElement operator*(const EuclideanElement& first) const {
    return {rotation_ * first.rotation_,
            Vector3q(rotation_.matrix() * first.translation_ + translation_)};
  }

 private:
  Rotation rotation_;
  Vector3q translation_;
};

/// `q: a b c d; t: x y z`
std::string format_element(const EuclideanElement& g);
EuclideanElement parse_element(const std::string& text);

enum class ActionKind { FullAdjoint, RotationSub, TranslationSub };

std::string to_string(ActionKind kind);

/// [[R, 0], [T R, R]] with T = skew(r).
Matrix6q adjoint_matrix(const EuclideanElement& g);

/// (omega, v) -> (R omega, T R omega + R v).
Twist apply_adjoint(const EuclideanElement& g, const Twist& t);
MultiScrew apply_adjoint(const EuclideanElement& g, const MultiScrew& s);

/// Variable set w11..wm3, v11..vm3 of an m-screw.
VarSetPtr screw_variables(std::size_t m);

/// Images of the screw coordinates under a generic group element, as
/// polynomials in group and screw variables.
///
/// Rotations use the quaternion numerator, so images[i] equals
/// scale * (g . x)_i with scale = q0^2 + q1^2 + q2^2 + q3^2 (1 for pure
/// translations). Substituting the identity (q = (1,0,0,0), t = 0) maps each
/// image to its coordinate.
struct PullbackSystem {
  ActionKind kind;
  std::size_t screws;
  VarSetPtr variables;  ///< group variables first, then screw coordinates
  std::vector<std::string> group_variables;
  std::vector<Polynomial> images;  ///< one per screw coordinate, in order
  Polynomial scale;
  TermOrder order;  ///< lex; group variables form the elimination block

  VarSetPtr space() const { return screw_variables(screws); }
};

PullbackSystem pullback(ActionKind kind, std::size_t m);

/// The images as a SAGBI seed. Only translation pullbacks are polynomial
/// actions; other kinds throw std::invalid_argument.
GeneratorSet sagbi_seed(const PullbackSystem& system);

/// Exact test of f(g . x) == f(x) with a generic symbolic g. Each homogeneous
/// component f_d (degree d in screw coordinates) is checked as
/// f_d(images) == scale^d * f_d.
bool check_invariant_symbolic(const Polynomial& f, ActionKind kind, std::size_t m);

struct Counterexample {
  EuclideanElement element;
  MultiScrew point;
  Rational before;
  Rational after;
};

struct SampledCheck {
  bool invariant = true;
  std::optional<Counterexample> counterexample;
};

inline constexpr std::uint64_t kDefaultSampleSeed = 0xC0FFEE;
inline constexpr int kDefaultSamples = 32;

/// Random group element of the given kind: integer quaternion in
/// [-100,100]^4 \ {0}, integer translation in [-1000,1000]^3.
EuclideanElement random_element(ActionKind kind, std::mt19937_64& rng);
/// m twists with rational coordinates p/q, |p| <= 50, 1 <= q <= 20.
MultiScrew random_multiscrew(std::size_t m, std::mt19937_64& rng);
/// Generator for sample `index`; independent of evaluation order.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Probabilistic test of f(g . s) == f(s) at n_samples random (g, s).
SampledCheck check_invariant_sampled(const Polynomial& f, ActionKind kind, std::size_t m,
                                     int n_samples = kDefaultSamples,
                                     std::uint64_t seed = kDefaultSampleSeed);

}  // namespace screwinv
