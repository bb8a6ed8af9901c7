#pragma once

// Screw-level invariants: pitch and joint type, SO(3) vector invariants and
// Gram minors, the SE(3) and translation generator catalogs for up to three
// screws, and the twist angle / displacement of a screw pair.

#include "screwinv/group.hpp"
#include "screwinv/poly.hpp"
#include "screwinv/twist.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace screwinv {

// ---------------------------------------------------------------------------
// Pitch and joint type

class Pitch {
 public:
  enum class Kind { Finite, Infinite, UndefinedZeroTwist };

  static Pitch finite(Rational p) { return Pitch(Kind::Finite, std::move(p)); }
  static Pitch infinite() { return Pitch(Kind::Infinite, Rational(0)); }
  static Pitch undefined() { return Pitch(Kind::UndefinedZeroTwist, Rational(0)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  bool operator==(const Pitch&) const = default;

 private:
  Pitch(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

std::string to_string(const Pitch& p);

enum class JointType { R, P, H };

std::string to_string(JointType j);

/// (omega . v) / (omega . omega); infinite for a pure translation.
Pitch pitch(const Twist& t);
/// Throws std::invalid_argument for the zero twist.
JointType joint_type(const Twist& t);
bool pitch_invariance_check(const EuclideanElement& g, const Twist& t);

// ---------------------------------------------------------------------------
// Polynomial building blocks

using PolyVector = std::array<Polynomial, 3>;

PolyVector omega_vector(std::size_t screw, const VarSetPtr& vars);
PolyVector vee_vector(std::size_t screw, const VarSetPtr& vars);
Polynomial dot(const PolyVector& a, const PolyVector& b);
/// Determinant of the 3x3 matrix with columns a, b, c.
Polynomial bracket(const PolyVector& a, const PolyVector& b, const PolyVector& c);

struct NamedPolynomial {
  std::string name;
  Polynomial poly;
};

enum class Completeness { Complete, Unknown };

struct Catalog {
  std::string title;
  std::vector<NamedPolynomial> entries;
  /// The generating claim is a conjecture.
  bool conjectural = false;
  Completeness completeness = Completeness::Complete;

  std::vector<Polynomial> polynomials() const;
  const Polynomial& at(const std::string& name) const;
};

/// Comment header, then `# name` before each polynomial line.
std::string format_catalog(const Catalog& catalog);

// ---------------------------------------------------------------------------
// SO(3) vector invariants

/// x11 > x12 > ... > xm3 for m vectors in 3-space.
VarSetPtr vector_variables(std::size_t m);
PolyVector x_vector(std::size_t i, const VarSetPtr& vars);

/// x_i . x_j for i <= j, then [x_i, x_j, x_k] for i < j < k.
std::vector<NamedPolynomial> so3_vector_invariants(std::size_t m);

/// Symbols p_ij (i <= j) standing for the scalar products x_i . x_j.
VarSetPtr dot_variables(std::size_t m);
/// k x k minor of the Gram matrix in the abstract symbols p_ij.
Polynomial gram_minor_abstract(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols, std::size_t m);
/// The same minor expanded in x coordinates (m defaults to the largest index).
Polynomial gram_minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                      std::size_t m = 0);
/// p_ij -> x_i . x_j.
Polynomial dot_substitution(const Polynomial& abstract, std::size_t m);

/// 1x1 and 2x2 Gram minors plus all 3-brackets, ordered lex.
Catalog so3_sagbi_catalog(std::size_t m);

// ---------------------------------------------------------------------------
// SE(3) and translation catalogs

/// m = 1, 2, 3; the m = 3 list is conjectural.
Catalog se3_generator_catalog(std::size_t m);
/// m = 1, 2, 3; completeness is unknown for m = 3.
Catalog translation_sagbi_catalog(std::size_t m);

/// Determinant with rows (w1i, w2i, w3i), (w1j, w2j, w3j), (v1k, v2k, v3k)
/// over the three-screw coordinates; i, j, k index vector components.
Polynomial z_poly(std::size_t i, std::size_t j, std::size_t k);

/// The two-screw cubic translation invariant: the subduction remainder of
/// w11 (w2 . v2) - w21 (w1 . v2 + w2 . v1) against the coordinates, the
/// diagonal Klein forms and the mixed Klein form.
Polynomial two_screw_cubic();

// ---------------------------------------------------------------------------
// Twist angle and displacement

/// numerator / sqrt(radicand), radicand > 0.
struct SqrtRatio {
  Rational numerator;
  Rational radicand;

  /// The value when the radicand is a rational square.
  std::optional<Rational> exact() const;
  double approx() const;
};

struct DhPairReport {
  Rational omega11;  ///< w1 . w1
  Rational omega12;  ///< w1 . w2
  Rational omega22;  ///< w2 . w2
  Rational klein_cross;  ///< w1 . v2 + w2 . v1
  SqrtRatio cos_alpha;
  SqrtRatio d_sin_alpha;
  /// d exactly; absent for parallel axes (sin alpha = 0).
  std::optional<SqrtRatio> d;
  double alpha_float = 0;
  std::optional<double> d_float;
};

/// Requires nonzero omega on both screws; throws std::invalid_argument.
/// klein_cross includes the pitch terms, so d is the displacement only for
/// zero-pitch axes.
DhPairReport dh_invariants(const MultiScrew& pair);

/// Labeled rationals plus floats to 15 significant digits.
std::string format_dh_report(const DhPairReport& r);

}  // namespace screwinv
