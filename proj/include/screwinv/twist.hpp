#pragma once

#include "screwinv/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace screwinv {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;
template <typename Scalar>
using Matrix6 = Eigen::Matrix<Scalar, 6, 6>;

using Vector3q = Vector3<Rational>;
using Matrix3q = Matrix3<Rational>;
using Vector6q = Vector6<Rational>;
using Matrix6q = Matrix6<Rational>;

/// Skew matrix with skew(a) * b == a.cross(b).
template <typename Scalar>
Matrix3<Scalar> skew(const Vector3<Scalar>& a) {
  Matrix3<Scalar> s;
  s << Scalar(0), -a(2), a(1),
       a(2), Scalar(0), -a(0),
       -a(1), a(0), Scalar(0);
  return s;
}

/// Pluecker coordinates (omega, v) of a twist. The zero twist is allowed.
struct Twist {
  Vector3q omega = Vector3q::Zero();
  Vector3q vee = Vector3q::Zero();

  Twist() = default;
  Twist(Vector3q w, Vector3q v) : omega(std::move(w)), vee(std::move(v)) {}

  Vector6q coordinates() const {
    Vector6q x;
    x << omega, vee;
    return x;
  }
  static Twist from_coordinates(const Vector6q& x) { return {x.head<3>(), x.tail<3>()}; }

  bool operator==(const Twist& other) const {
    return omega == other.omega && vee == other.vee;
  }
};

/// Ordered screws 1..m, acted on diagonally.
class MultiScrew {
 public:
  MultiScrew() = default;
  MultiScrew(std::initializer_list<Twist> twists) : twists_(twists) {}
  explicit MultiScrew(std::vector<Twist> twists) : twists_(std::move(twists)) {}

  std::size_t size() const { return twists_.size(); }
  const Twist& operator[](std::size_t i) const { return twists_[i]; }
  Twist& operator[](std::size_t i) { return twists_[i]; }
  const std::vector<Twist>& twists() const { return twists_; }

  bool operator==(const MultiScrew&) const = default;

 private:
  std::vector<Twist> twists_;
};

/// Canonical coordinate names: w{i}{n} and v{i}{n} for screw i, component n.
std::string omega_name(std::size_t screw, std::size_t component);
std::string vee_name(std::size_t screw, std::size_t component);

/// Names in the chain w11 > w12 > ... > wm3 > v11 > ... > vm3.
std::vector<std::string> screw_coordinate_names(std::size_t m);

/// One value per name of screw_coordinate_names(m).
std::vector<Rational> screw_point(const MultiScrew& s);

/// `w1 w2 w3 v1 v2 v3` with rationals as p/q.
std::string format_twist(const Twist& t);
Twist parse_twist(const std::string& line);
/// m nonblank lines, one twist per line; `#` starts a comment.
MultiScrew parse_multiscrew(const std::string& text);
std::string format_multiscrew(const MultiScrew& s);

}  // namespace screwinv
