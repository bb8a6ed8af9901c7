#pragma once

// Subalgebra bases: subduction, tete-a-tete enumeration and degree-bounded
// completion of a generating set to a SAGBI basis.

#include "screwinv/poly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace screwinv {

/// Exponent vector over the generator list of a GeneratorSet.
using GeneratorExponents = std::vector<Exponent>;

/// Monic generators with pairwise distinct leading monomials.
///
/// Insertion subducts the candidate against the generators already present,
/// so a candidate whose leading monomial is already a product of leading
/// monomials is replaced by its remainder (or dropped when that is constant).
/// Generators are append-only; indices are stable.
class GeneratorSet {
 public:
  explicit GeneratorSet(TermOrder order);
  GeneratorSet(TermOrder order, const std::vector<Polynomial>& gens);

  const TermOrder& order() const { return order_; }
  const VarSetPtr& variables() const { return order_.variables(); }

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const Monomial& leading(std::size_t i) const { return leads_[i]; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  /// Returns the index of the inserted generator, or nothing when the
  /// candidate already lies in the algebra modulo constants.
  std::optional<std::size_t> insert(const Polynomial& candidate);

  /// Exponents e with prod lm(g_i)^e_i == m, if any. Deterministic.
  std::optional<GeneratorExponents> factor(const Monomial& m) const;

 private:
  void push_monic(const Polynomial& g);

  TermOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
};

/// prod g_i^e_i.
Polynomial generator_product(const GeneratorSet& basis, const GeneratorExponents& e);

struct CertificateTerm {
  Rational coefficient;
  GeneratorExponents exponents;
};

struct SubductionResult {
  Polynomial remainder;
  /// input == remainder + sum c * prod g_i^e_i.
  std::vector<CertificateTerm> certificate;
};

/// sum c * prod g_i^e_i over the certificate.
Polynomial evaluate_certificate(const std::vector<CertificateTerm>& certificate,
                                const GeneratorSet& basis);

/// Cancels leading terms by scaled generator products until the leading
/// monomial is no longer a product of generator leading monomials.
SubductionResult subduct(const Polynomial& f, const GeneratorSet& basis);

/// A binomial relation prod lm(g)^a == prod lm(g)^b with disjoint supports.
struct TeteATete {
  GeneratorExponents a;
  GeneratorExponents b;
  Monomial monomial;  ///< the common leading monomial
};

/// Minimal relations among leading monomials whose common monomial has total
/// degree <= degree_bound. A relation is dropped when it is the componentwise
/// sum of another enumerated relation and a remainder.
std::vector<TeteATete> tete_a_tetes(const GeneratorSet& basis, int degree_bound);

/// g^a - g^b; its leading terms cancel.
Polynomial tete_a_tete_polynomial(const TeteATete& t, const GeneratorSet& basis);

struct SagbiResult {
  GeneratorSet basis;
  /// The last pass produced nothing new within degree_bound.
  bool complete = false;
  int degree_bound = 0;
  int iterations = 0;
};

inline constexpr int kDefaultDegreeBound = 4;
inline constexpr int kDefaultMaxIterations = 16;

/// Buchberger-style completion. Each pass subducts every new tete-a-tete
/// against the current basis, then inserts the nonzero remainders in
/// increasing leading-monomial order. Stops when a pass adds nothing
/// (complete) or after max_iterations passes (incomplete).
SagbiResult sagbi_construct(const GeneratorSet& seed, int degree_bound = kDefaultDegreeBound,
                            int max_iterations = kDefaultMaxIterations);

struct Membership {
  bool member = false;
  /// False when the answer is negative but the basis is not known complete.
  bool definitive = false;
  SubductionResult subduction;
};

Membership is_member(const Polynomial& f, const SagbiResult& result);

/// Every witness subducts to zero.
bool verify_sagbi(const GeneratorSet& basis, const std::vector<Polynomial>& witnesses);

/// Generators free of the named variables, re-expressed over `target`.
/// With an elimination order this is the basis of the invariant subalgebra.
std::vector<Polynomial> eliminate(const GeneratorSet& basis,
                                  const std::vector<std::string>& group_variables,
                                  const VarSetPtr& target);

// ---------------------------------------------------------------------------
// Basis files
//
//   order: lex <var> <var> ...      required first non-comment line
//   eliminate: <var> ...             optional group-variable block
//   complete: true|false             written for results, ignored on input
//   degree_bound: N                  written for results, ignored on input
//   <polynomial>                     one per line
//
// Blank lines and lines starting with '#' are skipped.

struct BasisFile {
  TermOrder order;
  std::vector<std::string> eliminate;
  std::vector<Polynomial> polynomials;
};

/// Parse failure with 1-based line and 0-based column.
class BasisFileError : public std::runtime_error {
 public:
  BasisFileError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

BasisFile parse_basis_file(const std::string& text);
std::string format_basis_file(const BasisFile& file);
std::string format_sagbi_result(const SagbiResult& result);

}  // namespace screwinv
