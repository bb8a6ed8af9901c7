#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Polynomial lives over a VariableSet shared by pointer. Terms are kept in
// a canonical sorted vector (descending lex in variable-index order) with no
// zero coefficients, so structural equality is polynomial equality.

#include "screwinv/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace screwinv {

class VariableSet;
using VarSetPtr = std::shared_ptr<const VariableSet>;

/// Ordered list of distinct identifiers. Index lookup is total over names().
class VariableSet {
 public:
  static VarSetPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }

 private:
  explicit VariableSet(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

bool same_variables(const VarSetPtr& a, const VarSetPtr& b);

using Exponent = std::uint32_t;

/// Dense exponent vector sized to its VariableSet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_unit() const;
  /// Componentwise `*this <= other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  Monomial pow(Exponent k) const;
  /// Exact quotient; requires divides().
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Plain lexicographic comparison of exponent vectors (variable-index order).
  std::strong_ordering operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Lexicographic order with an explicit variable priority. Any prefix of the
/// priority list is an elimination block.
class TermOrder {
 public:
  /// Priority equal to the variable set's own order.
  static TermOrder lex(VarSetPtr vars);
  /// Priority given by name; must be a permutation of the variable set.
  static TermOrder lex(VarSetPtr vars, const std::vector<std::string>& priority);

  const VarSetPtr& variables() const { return vars_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool is_natural() const { return natural_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// `order: lex <var> <var> ...`
  std::string header() const;

 private:
  TermOrder(VarSetPtr vars, std::vector<std::size_t> priority);

  VarSetPtr vars_;
  std::vector<std::size_t> priority_;
  bool natural_ = true;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  /// The zero polynomial over `vars`.
  explicit Polynomial(VarSetPtr vars);
  Polynomial(VarSetPtr vars, const Rational& constant);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  Polynomial(VarSetPtr vars, std::vector<Term> terms);

  static Polynomial variable(VarSetPtr vars, std::string_view name);
  static Polynomial monomial(VarSetPtr vars, Monomial m, Rational c = Rational(1));

  const VarSetPtr& variables() const { return vars_; }
  /// Canonical order: descending in the natural lex order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  /// True iff some term has a positive power of variable `index`.
  bool uses(std::size_t index) const;
  /// Coefficient of `m` (zero when absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& other) const;

 private:
  void require_same(const Polynomial& other) const;

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Polynomial pow(const Polynomial& f, unsigned k) { return f.pow(k); }
inline Polynomial scale(const Polynomial& f, const Rational& c) { return f.scaled(c); }

/// Thrown when operands live over different variable sets.
class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Maximal term under `order`. Throws std::domain_error on the zero polynomial.
Term leading_term(const Polynomial& f, const TermOrder& order);
Monomial leading_monomial(const Polynomial& f, const TermOrder& order);
/// Divides by the leading coefficient.
Polynomial make_monic(const Polynomial& f, const TermOrder& order);

/// Ring homomorphism x_i -> images[i]. All images share one target variable
/// set; `images[i]` may be empty only for variables f does not use.
Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const VarSetPtr& target);
/// Name-keyed form. Throws std::invalid_argument for a used variable without image.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const VarSetPtr& target);
/// Re-expresses f over `target`, matching variables by name.
Polynomial change_variables(const Polynomial& f, const VarSetPtr& target);

/// Exact value at a dense point (one value per variable).
Rational evaluate(const Polynomial& f, std::span<const Rational> point);
/// Name-keyed form. Throws std::invalid_argument for a used variable without value.
Rational evaluate(const Polynomial& f, const std::map<std::string, Rational>& point);

/// Splits f by total degree in the variables selected by `mask`.
std::map<long, Polynomial> homogeneous_components(const Polynomial& f,
                                                  const std::vector<bool>& mask);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := ident ('^' nat)?
///   coeff  := int ('/' nat)?
Polynomial parse(std::string_view text, const VarSetPtr& vars);

/// Canonical text: terms in strictly decreasing `order`, unit coefficients
/// suppressed except on the constant term, "0" for zero.
std::string format(const Polynomial& f, const TermOrder& order);
/// Format under the natural lex order of f's variable set.
std::string format(const Polynomial& f);

}  // namespace screwinv
