#include "screwinv/group.hpp"

#include "parallel.hpp"

#include <Eigen/LU>

#include <sstream>
#include <stdexcept>

namespace screwinv {

RationalQuaternion RationalQuaternion::operator*(const RationalQuaternion& o) const {
  return {w * o.w - x * o.x - y * o.y - z * o.z,
          w * o.x + x * o.w + y * o.z - z * o.y,
          w * o.y - x * o.z + y * o.w + z * o.x,
          w * o.z + x * o.y - y * o.x + z * o.w};
}

Rotation::Rotation(const RationalQuaternion& q) : quaternion_(q) {
  if (q.is_zero()) throw std::invalid_argument("zero quaternion has no rotation");
  const Rational n = q.norm2();
  const auto num = quaternion_numerator(q.w, q.x, q.y, q.z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) matrix_(i, j) = num[i][j] / n;
  if (matrix_.transpose() * matrix_ != Matrix3q::Identity() || matrix_.determinant() != 1)
    throw std::logic_error("quaternion produced a non-orthogonal matrix");
}

std::string format_element(const EuclideanElement& g) {
  const auto& q = g.rotation().quaternion();
  const auto& t = g.translation();
  return "q: " + to_string(q.w) + " " + to_string(q.x) + " " + to_string(q.y) + " " +
         to_string(q.z) + "; t: " + to_string(t(0)) + " " + to_string(t(1)) + " " +
         to_string(t(2));
}

EuclideanElement parse_element(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("expected 'q: ...; t: ...'");
  auto values = [](std::string part, const std::string& label, std::size_t count) {
    const auto colon = part.find(':');
    std::istringstream head(part.substr(0, colon));
    std::string tag;
    head >> tag;
    if (colon == std::string::npos || tag != label)
      throw std::invalid_argument("expected '" + label + ":' section");
    std::istringstream in(part.substr(colon + 1));
    std::vector<Rational> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_rational(tok));
    if (out.size() != count)
      throw std::invalid_argument("section '" + label + "' needs " + std::to_string(count) +
                                  " rationals");
    return out;
  };
  const auto q = values(text.substr(0, semi), "q", 4);
  const auto t = values(text.substr(semi + 1), "t", 3);
  return {Rotation(RationalQuaternion{q[0], q[1], q[2], q[3]}), Vector3q(t[0], t[1], t[2])};
}

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::FullAdjoint: return "se3";
    case ActionKind::RotationSub: return "so3";
    case ActionKind::TranslationSub: return "t3";
  }
  return "?";
}

Matrix6q adjoint_matrix(const EuclideanElement& g) {
  const Matrix3q& R = g.rotation().matrix();
  Matrix6q ad = Matrix6q::Zero();
  ad.topLeftCorner<3, 3>() = R;
  ad.bottomLeftCorner<3, 3>() = skew(g.translation()) * R;
  ad.bottomRightCorner<3, 3>() = R;
  return ad;
}

Twist apply_adjoint(const EuclideanElement& g, const Twist& t) {
  return Twist::from_coordinates(adjoint_matrix(g) * t.coordinates());
}

MultiScrew apply_adjoint(const EuclideanElement& g, const MultiScrew& s) {
  const Matrix6q ad = adjoint_matrix(g);
  std::vector<Twist> out;
  out.reserve(s.size());
  for (const auto& t : s.twists()) out.push_back(Twist::from_coordinates(ad * t.coordinates()));
  return MultiScrew(std::move(out));
}

VarSetPtr screw_variables(std::size_t m) {
  if (m < 1 || m > 9) throw std::invalid_argument("number of screws must be in 1..9");
  return VariableSet::make(screw_coordinate_names(m));
}

// ---------------------------------------------------------------------------
// Pullbacks

PullbackSystem pullback(ActionKind kind, std::size_t m) {
  const bool rotates = kind != ActionKind::TranslationSub;
  const bool translates = kind != ActionKind::RotationSub;

  std::vector<std::string> group;
  if (rotates) group.insert(group.end(), {"q0", "q1", "q2", "q3"});
  if (translates) group.insert(group.end(), {"t1", "t2", "t3"});
  std::vector<std::string> names = group;
  for (auto& n : screw_coordinate_names(m)) names.push_back(std::move(n));
  const VarSetPtr vars = VariableSet::make(names);
  auto var = [&vars](const std::string& n) { return Polynomial::variable(vars, n); };
  const Polynomial zero(vars);

  // Rotation numerator N (scale * R) and the scale itself.
  std::array<std::array<Polynomial, 3>, 3> N{{{zero, zero, zero}, {zero, zero, zero},
                                              {zero, zero, zero}}};
  Polynomial scale(vars, Rational(1));
  if (rotates) {
    N = quaternion_numerator(var("q0"), var("q1"), var("q2"), var("q3"));
    scale = var("q0").pow(2) + var("q1").pow(2) + var("q2").pow(2) + var("q3").pow(2);
  } else {
    for (int i = 0; i < 3; ++i) N[i][i] = Polynomial(vars, Rational(1));
  }
  auto rotate = [&N, &zero](const std::array<Polynomial, 3>& x) {
    std::array<Polynomial, 3> y{zero, zero, zero};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) y[i] += N[i][j] * x[j];
    return y;
  };

  std::vector<Polynomial> omega_images, vee_images;
  for (std::size_t s = 1; s <= m; ++s) {
    std::array<Polynomial, 3> w{zero, zero, zero}, v{zero, zero, zero};
    for (std::size_t n = 1; n <= 3; ++n) {
      w[n - 1] = var(omega_name(s, n));
      v[n - 1] = var(vee_name(s, n));
    }
    const auto rw = rotate(w);
    auto rv = rotate(v);
    if (translates) {
      // T (N w) = t x (N w).
      const Polynomial t1 = var("t1"), t2 = var("t2"), t3 = var("t3");
      rv[0] += t2 * rw[2] - t3 * rw[1];
      rv[1] += t3 * rw[0] - t1 * rw[2];
      rv[2] += t1 * rw[1] - t2 * rw[0];
    }
    omega_images.insert(omega_images.end(), rw.begin(), rw.end());
    vee_images.insert(vee_images.end(), rv.begin(), rv.end());
  }
  std::vector<Polynomial> images = std::move(omega_images);
  images.insert(images.end(), vee_images.begin(), vee_images.end());

  return PullbackSystem{kind, m, vars, std::move(group), std::move(images), std::move(scale),
                        TermOrder::lex(vars)};
}

GeneratorSet sagbi_seed(const PullbackSystem& system) {
  if (system.kind != ActionKind::TranslationSub)
    throw std::invalid_argument("only the translation pullback is a polynomial SAGBI seed");
  return GeneratorSet(system.order, system.images);
}

// ---------------------------------------------------------------------------
// Invariance checks

namespace {

Polynomial over_screws(const Polynomial& f, std::size_t m) {
  return change_variables(f, screw_variables(m));
}

}  // namespace

bool check_invariant_symbolic(const Polynomial& f, ActionKind kind, std::size_t m) {
  const PullbackSystem system = pullback(kind, m);
  const Polynomial fx = over_screws(f, m);
  std::vector<std::optional<Polynomial>> images(system.images.begin(), system.images.end());
  const std::vector<bool> all(fx.variables()->size(), true);
  for (const auto& [d, part] : homogeneous_components(fx, all)) {
    const Polynomial moved = substitute(part, images, system.variables);
    const Polynomial fixed =
        change_variables(part, system.variables) * system.scale.pow(static_cast<unsigned>(d));
    if (moved != fixed) return false;
  }
  return true;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

EuclideanElement random_element(ActionKind kind, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qd(-100, 100);
  std::uniform_int_distribution<int> td(-1000, 1000);
  RationalQuaternion q;
  if (kind != ActionKind::TranslationSub) {
    do {
      q = {Rational(qd(rng)), Rational(qd(rng)), Rational(qd(rng)), Rational(qd(rng))};
    } while (q.is_zero());
  }
  Vector3q t = Vector3q::Zero();
  if (kind != ActionKind::RotationSub) t = Vector3q(td(rng), td(rng), td(rng));
  return {Rotation(q), t};
}

MultiScrew random_multiscrew(std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  auto r = [&] {
    const int p = num(rng);
    return Rational(p, den(rng));
  };
  std::vector<Twist> twists;
  for (std::size_t i = 0; i < m; ++i) {
    Twist t;
    t.omega << r(), r(), r();
    t.vee << r(), r(), r();
    twists.push_back(t);
  }
  return MultiScrew(std::move(twists));
}

SampledCheck check_invariant_sampled(const Polynomial& f, ActionKind kind, std::size_t m,
                                     int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  const Polynomial fx = over_screws(f, m);
  std::vector<std::optional<Counterexample>> failures(static_cast<std::size_t>(n_samples));
  detail::parallel_for(failures.size(), [&](std::size_t i) {
    auto rng = sample_rng(seed, i);
    const EuclideanElement g = random_element(kind, rng);
    const MultiScrew s = random_multiscrew(m, rng);
    const MultiScrew moved = apply_adjoint(g, s);
    Rational before = evaluate(fx, screw_point(s));
    Rational after = evaluate(fx, screw_point(moved));
    if (before != after) failures[i] = Counterexample{g, s, std::move(before), std::move(after)};
  });
  for (auto& c : failures)
    if (c) return {false, std::move(c)};
  return {true, std::nullopt};
}

}  // namespace screwinv
