#pragma once

// Reproduction suite: each item re-derives one reference result exactly and
// reports pass/fail. Shared by `screwinv verify` and the acceptance tests.

#include "screwinv/group.hpp"
#include "screwinv/poly.hpp"
#include "screwinv/screw.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace screwinv {

struct SuiteItem {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

using ZPolyFn = std::function<Polynomial(std::size_t, std::size_t, std::size_t)>;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSampleSeed;
  int property_cases = 1000;
  int adjoint_samples = 100;
  int syzygy_evaluations = 20;
  /// Replaceable for mutation testing of the bracket-sum identity.
  ZPolyFn z = [](std::size_t i, std::size_t j, std::size_t k) { return z_poly(i, j, k); };
};

/// The two-screw cubic with w21 in place of w13 on the v23 term. Not a
/// translation invariant; kept as a negative control.
Polynomial printed_two_screw_cubic();

SuiteItem check_single_screw_translation_basis(const SuiteOptions& opt = {});
SuiteItem check_two_screw_translation_basis(const SuiteOptions& opt = {});
SuiteItem check_se3_catalog_invariance(const SuiteOptions& opt = {});
SuiteItem check_three_screw_translation_list(const SuiteOptions& opt = {});
SuiteItem check_bracket_sum_identity(const SuiteOptions& opt = {});
SuiteItem check_gram_syzygy(const SuiteOptions& opt = {});
SuiteItem check_dh_formulas(const SuiteOptions& opt = {});
SuiteItem check_joint_classification(const SuiteOptions& opt = {});
SuiteItem check_membership_oracle(const SuiteOptions& opt = {});
SuiteItem check_property_suites(const SuiteOptions& opt = {});
SuiteItem check_conjecture_flags(const SuiteOptions& opt = {});

/// Known suite names; currently just "paper".
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<SuiteItem> run_suite(const std::string& name, const SuiteOptions& opt = {});

// Fixed-seed generators used by the property checks and tests.

Polynomial random_polynomial(const VarSetPtr& vars, std::mt19937_64& rng, int max_terms = 5,
                             int max_degree = 3, int max_coefficient = 9);
Monomial random_monomial(std::size_t nvars, std::mt19937_64& rng, int max_degree = 4);
TermOrder random_lex_order(const VarSetPtr& vars, std::mt19937_64& rng);

}  // namespace screwinv
