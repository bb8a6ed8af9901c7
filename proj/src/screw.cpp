#include "screwinv/screw.hpp"

#include "screwinv/sagbi.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace screwinv {

// ---------------------------------------------------------------------------
// Pitch and joint type

std::string to_string(const Pitch& p) {
  switch (p.kind()) {
    case Pitch::Kind::Finite: return to_string(p.value());
    case Pitch::Kind::Infinite: return "infinite";
    case Pitch::Kind::UndefinedZeroTwist: return "undefined";
  }
  return "?";
}

std::string to_string(JointType j) {
  switch (j) {
    case JointType::R: return "R";
    case JointType::P: return "P";
    case JointType::H: return "H";
  }
  return "?";
}

Pitch pitch(const Twist& t) {
  const Rational killing = t.omega.dot(t.omega);
  if (killing != 0) return Pitch::finite(t.omega.dot(t.vee) / killing);
  if (!t.vee.isZero()) return Pitch::infinite();
  return Pitch::undefined();
}

JointType joint_type(const Twist& t) {
  const Pitch p = pitch(t);
  switch (p.kind()) {
    case Pitch::Kind::Finite: return p.value() == 0 ? JointType::R : JointType::H;
    case Pitch::Kind::Infinite: return JointType::P;
    case Pitch::Kind::UndefinedZeroTwist: break;
  }
  throw std::invalid_argument("the zero twist has no joint type");
}

bool pitch_invariance_check(const EuclideanElement& g, const Twist& t) {
  return pitch(apply_adjoint(g, t)) == pitch(t);
}

// ---------------------------------------------------------------------------
// Building blocks

PolyVector omega_vector(std::size_t screw, const VarSetPtr& vars) {
  return {Polynomial::variable(vars, omega_name(screw, 1)),
          Polynomial::variable(vars, omega_name(screw, 2)),
          Polynomial::variable(vars, omega_name(screw, 3))};
}

PolyVector vee_vector(std::size_t screw, const VarSetPtr& vars) {
  return {Polynomial::variable(vars, vee_name(screw, 1)),
          Polynomial::variable(vars, vee_name(screw, 2)),
          Polynomial::variable(vars, vee_name(screw, 3))};
}

Polynomial dot(const PolyVector& a, const PolyVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Polynomial bracket(const PolyVector& a, const PolyVector& b, const PolyVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
         c[0] * (a[1] * b[2] - a[2] * b[1]);
}

std::vector<Polynomial> Catalog::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : entries) out.push_back(e.poly);
  return out;
}

const Polynomial& Catalog::at(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.poly;
  throw std::out_of_range("catalog has no entry '" + name + "'");
}

std::string format_catalog(const Catalog& catalog) {
  std::ostringstream out;
  out << "# " << catalog.title << "\n";
  out << "# count: " << catalog.entries.size() << "\n";
  out << "# conjectural: " << (catalog.conjectural ? "true" : "false") << "\n";
  out << "# complete: "
      << (catalog.completeness == Completeness::Complete ? "true" : "unknown") << "\n";
  if (!catalog.entries.empty())
    out << TermOrder::lex(catalog.entries.front().poly.variables()).header() << "\n";
  for (const auto& e : catalog.entries) out << "# " << e.name << "\n" << format(e.poly) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// SO(3)

VarSetPtr vector_variables(std::size_t m) {
  if (m < 1 || m > 9) throw std::invalid_argument("number of vectors must be in 1..9");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t n = 1; n <= 3; ++n) names.push_back("x" + std::to_string(i) + std::to_string(n));
  return VariableSet::make(std::move(names));
}

PolyVector x_vector(std::size_t i, const VarSetPtr& vars) {
  const std::string base = "x" + std::to_string(i);
  return {Polynomial::variable(vars, base + "1"), Polynomial::variable(vars, base + "2"),
          Polynomial::variable(vars, base + "3")};
}

namespace {

std::string idx(std::initializer_list<std::size_t> list) {
  std::string s;
  for (auto i : list) s += std::to_string(i);
  return s;
}

/// Leibniz expansion of a k x k determinant.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, const VarSetPtr& vars) {
  const std::size_t k = a.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(vars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial p(vars, Rational(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t i = 0; i < k; ++i) p *= a[i][perm[i]];
    sum += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

void check_minor_indices(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols, std::size_t m) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor index lists differ in length");
  if (rows.empty()) throw std::invalid_argument("minor needs at least one index");
  for (auto i : rows)
    if (i < 1 || i > m) throw std::out_of_range("minor row index out of range");
  for (auto j : cols)
    if (j < 1 || j > m) throw std::out_of_range("minor column index out of range");
}

std::size_t max_index(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t m = 0;
  for (auto i : a) m = std::max(m, i);
  for (auto i : b) m = std::max(m, i);
  return m;
}

std::string dot_name(std::size_t i, std::size_t j) {
  return "p" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
}

}  // namespace

std::vector<NamedPolynomial> so3_vector_invariants(std::size_t m) {
  const VarSetPtr vars = vector_variables(m);
  std::vector<NamedPolynomial> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j)
      out.push_back({"dot_" + idx({i, j}), dot(x_vector(i, vars), x_vector(j, vars))});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k)
        out.push_back({"bracket_" + idx({i, j, k}),
                       bracket(x_vector(i, vars), x_vector(j, vars), x_vector(k, vars))});
  return out;
}

VarSetPtr dot_variables(std::size_t m) {
  if (m < 1 || m > 9) throw std::invalid_argument("number of vectors must be in 1..9");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) names.push_back(dot_name(i, j));
  return VariableSet::make(std::move(names));
}

Polynomial gram_minor_abstract(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols, std::size_t m) {
  check_minor_indices(rows, cols, m);
  const VarSetPtr vars = dot_variables(m);
  std::vector<std::vector<Polynomial>> a;
  for (auto i : rows) {
    std::vector<Polynomial> row;
    for (auto j : cols) row.push_back(Polynomial::variable(vars, dot_name(i, j)));
    a.push_back(std::move(row));
  }
  return determinant(a, vars);
}

Polynomial gram_minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                      std::size_t m) {
  if (m == 0) m = max_index(rows, cols);
  check_minor_indices(rows, cols, m);
  const VarSetPtr vars = vector_variables(m);
  std::vector<std::vector<Polynomial>> a;
  for (auto i : rows) {
    std::vector<Polynomial> row;
    for (auto j : cols) row.push_back(dot(x_vector(i, vars), x_vector(j, vars)));
    a.push_back(std::move(row));
  }
  return determinant(a, vars);
}

Polynomial dot_substitution(const Polynomial& abstract, std::size_t m) {
  const VarSetPtr target = vector_variables(m);
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j)
      images.emplace(dot_name(i, j), dot(x_vector(i, target), x_vector(j, target)));
  return substitute(abstract, images, target);
}

Catalog so3_sagbi_catalog(std::size_t m) {
  const VarSetPtr vars = vector_variables(m);
  Catalog c{"so3 sagbi basis, m=" + std::to_string(m), {}, false, Completeness::Complete};
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j)
      c.entries.push_back({"gram_" + idx({i}) + "_" + idx({j}), gram_minor({i}, {j}, m)});
  // 2x2 minors f^{i1 i2}_{j1 j2}; transposition gives the same minor, so
  // keep (i1,i2) <= (j1,j2).
  for (std::size_t i1 = 1; i1 <= m; ++i1)
    for (std::size_t i2 = i1 + 1; i2 <= m; ++i2)
      for (std::size_t j1 = 1; j1 <= m; ++j1)
        for (std::size_t j2 = j1 + 1; j2 <= m; ++j2)
          if (std::make_pair(i1, i2) <= std::make_pair(j1, j2))
            c.entries.push_back(
                {"gram_" + idx({i1, i2}) + "_" + idx({j1, j2}), gram_minor({i1, i2}, {j1, j2}, m)});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k)
        c.entries.push_back({"bracket_" + idx({i, j, k}),
                             bracket(x_vector(i, vars), x_vector(j, vars), x_vector(k, vars))});
  return c;
}

// ---------------------------------------------------------------------------
// SE(3) and translation catalogs

namespace {

void check_screw_count(std::size_t m) {
  if (m < 1 || m > 3) throw std::invalid_argument("catalogs exist for 1, 2 or 3 screws only");
}

void add_kleins(Catalog& c, std::size_t m, const VarSetPtr& vars) {
  for (std::size_t i = 1; i <= m; ++i)
    c.entries.push_back({"klein_" + idx({i}), dot(omega_vector(i, vars), vee_vector(i, vars))});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      c.entries.push_back({"klein_" + idx({i, j}),
                           dot(omega_vector(i, vars), vee_vector(j, vars)) +
                               dot(omega_vector(j, vars), vee_vector(i, vars))});
}

}  // namespace

Catalog se3_generator_catalog(std::size_t m) {
  check_screw_count(m);
  const VarSetPtr vars = screw_variables(m);
  Catalog c{"se3 generators, m=" + std::to_string(m), {}, m == 3, Completeness::Complete};
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j)
      c.entries.push_back(
          {"killing_" + idx({i, j}), dot(omega_vector(i, vars), omega_vector(j, vars))});
  add_kleins(c, m, vars);
  if (m == 3) {
    const auto w1 = omega_vector(1, vars), w2 = omega_vector(2, vars), w3 = omega_vector(3, vars);
    const auto v1 = vee_vector(1, vars), v2 = vee_vector(2, vars), v3 = vee_vector(3, vars);
    c.entries.push_back({"bracket_www", bracket(w1, w2, w3)});
    c.entries.push_back(
        {"bracket_sum", bracket(v1, w2, w3) + bracket(w1, v2, w3) + bracket(w1, w2, v3)});
  }
  return c;
}

Polynomial z_poly(std::size_t i, std::size_t j, std::size_t k) {
  for (auto n : {i, j, k})
    if (n < 1 || n > 3) throw std::out_of_range("z index out of range");
  const VarSetPtr vars = screw_variables(3);
  auto row = [&vars](char kind, std::size_t component) -> PolyVector {
    auto name = kind == 'w' ? omega_name : vee_name;
    return {Polynomial::variable(vars, name(1, component)),
            Polynomial::variable(vars, name(2, component)),
            Polynomial::variable(vars, name(3, component))};
  };
  return bracket(row('w', i), row('w', j), row('v', k));
}

Polynomial two_screw_cubic() {
  const VarSetPtr vars = screw_variables(2);
  const auto w1 = omega_vector(1, vars), w2 = omega_vector(2, vars);
  const auto v1 = vee_vector(1, vars), v2 = vee_vector(2, vars);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t n = 1; n <= 3; ++n) gens.push_back(Polynomial::variable(vars, omega_name(i, n)));
  gens.push_back(dot(w1, v1));
  gens.push_back(dot(w2, v2));
  const Polynomial mixed = dot(w1, v2) + dot(w2, v1);
  gens.push_back(mixed);
  const GeneratorSet basis(TermOrder::lex(vars), gens);
  const Polynomial tete = w1[0] * dot(w2, v2) - w2[0] * mixed;
  return make_monic(subduct(tete, basis).remainder, basis.order());
}

Catalog translation_sagbi_catalog(std::size_t m) {
  check_screw_count(m);
  const VarSetPtr vars = screw_variables(m);
  Catalog c{"translation sagbi basis, m=" + std::to_string(m), {}, false,
            m == 3 ? Completeness::Unknown : Completeness::Complete};
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t n = 1; n <= 3; ++n)
      c.entries.push_back({omega_name(i, n), Polynomial::variable(vars, omega_name(i, n))});
  add_kleins(c, m, vars);
  if (m == 2) c.entries.push_back({"cubic_12", two_screw_cubic()});
  if (m == 3) {
    c.entries.push_back({"z_123", z_poly(1, 2, 3)});
    c.entries.push_back({"z_231", z_poly(2, 3, 1)});
    c.entries.push_back({"z_312", z_poly(3, 1, 2)});
    c.entries.push_back({"z_121-z_323", z_poly(1, 2, 1) - z_poly(3, 2, 3)});
    c.entries.push_back({"z_232-z_131", z_poly(2, 3, 2) - z_poly(1, 3, 1)});
    c.entries.push_back({"z_313-z_212", z_poly(3, 1, 3) - z_poly(2, 1, 2)});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Twist angle and displacement

std::optional<Rational> SqrtRatio::exact() const {
  Rational root;
  if (!rational_sqrt(radicand, root)) return std::nullopt;
  return numerator / root;
}

double SqrtRatio::approx() const { return to_double(numerator) / std::sqrt(to_double(radicand)); }

DhPairReport dh_invariants(const MultiScrew& pair) {
  if (pair.size() != 2) throw std::invalid_argument("twist angle needs exactly two screws");
  const Twist& a = pair[0];
  const Twist& b = pair[1];
  DhPairReport r;
  r.omega11 = a.omega.dot(a.omega);
  r.omega12 = a.omega.dot(b.omega);
  r.omega22 = b.omega.dot(b.omega);
  if (r.omega11 == 0 || r.omega22 == 0)
    throw std::invalid_argument("both screws need a nonzero rotation axis");
  r.klein_cross = a.omega.dot(b.vee) + b.omega.dot(a.vee);
  const Rational radicand = r.omega11 * r.omega22;
  r.cos_alpha = {r.omega12, radicand};
  r.d_sin_alpha = {r.klein_cross, radicand};
  // |w1 x w2|^2 = radicand * sin^2(alpha) >= 0.
  const Rational cross2 = radicand - r.omega12 * r.omega12;
  if (cross2 < 0) throw std::logic_error("Cauchy-Schwarz violated");
  r.alpha_float = std::atan2(std::sqrt(to_double(cross2)), to_double(r.omega12));
  if (cross2 != 0) {
    r.d = SqrtRatio{r.klein_cross, cross2};
    r.d_float = r.d->approx();
  }
  return r;
}

std::string format_dh_report(const DhPairReport& r) {
  std::ostringstream out;
  out << std::setprecision(15);
  auto ratio = [&out](const std::string& label, const SqrtRatio& s) {
    out << label << "_numerator: " << to_string(s.numerator) << "\n";
    out << label << "_radicand: " << to_string(s.radicand) << "\n";
    if (auto e = s.exact()) out << label << ": " << to_string(*e) << "\n";
    out << label << "_float: " << s.approx() << "\n";
  };
  out << "omega1.omega1: " << to_string(r.omega11) << "\n";
  out << "omega1.omega2: " << to_string(r.omega12) << "\n";
  out << "omega2.omega2: " << to_string(r.omega22) << "\n";
  out << "klein_cross: " << to_string(r.klein_cross) << "\n";
  ratio("cos_alpha", r.cos_alpha);
  ratio("d_sin_alpha", r.d_sin_alpha);
  out << "alpha_float: " << r.alpha_float << "\n";
  if (r.d) {
    ratio("d", *r.d);
  } else {
    out << "d: undefined (parallel axes)\n";
  }
  return out.str();
}

}  // namespace screwinv
