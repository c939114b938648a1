#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the solvers they check.

#include <cstdint>
#include <vector>

#include "rdom/assignment.hpp"
#include "rdom/cnf.hpp"
#include "rdom/graph.hpp"
#include "rdom/random.hpp"

namespace rdom::oracle {

/// Minimum weight over all 4^n label vectors.
int gamma_r2(const Graph& g);
/// Minimum weight over all 3^n value vectors.
int gamma_roman(const Graph& g);
/// Every valid label vector of weight gamma_r2, lexicographically sorted.
std::vector<RainbowAssignment> all_min_2rdf(const Graph& g);

/// Direct definition check, independent of the library validator.
bool rainbow_valid(const Graph& g, const std::vector<int>& codes);
bool roman_valid(const Graph& g, const std::vector<int>& values);

/// Checks all 4-subsets.
bool k4_free(const Graph& g);

/// Uniform permutation of 0..n-1 (Fisher-Yates).
std::vector<int> random_permutation(int n, SplitMix64& rng);

/// m clauses, each over min(k, n) distinct variables with random signs.
CnfFormula random_cnf(int n, int m, int k, SplitMix64& rng);

/// Every formula over n variables with m clauses, as a multiset of clauses
/// drawn from the non-tautological clauses of length 1..min(3, n).
std::vector<CnfFormula> all_formulas(int n, int m);

/// Every variable occurs in some clause.
bool uses_every_variable(const CnfFormula& f);

/// Fixture set for the reduction checks: all 1- and 2-variable formulas with
/// 2 or 3 clauses, then 40 seeded random 3-CNFs with 3 <= n <= 4, 2 <= m <= 6.
/// Only formulas that mention every variable are kept.
std::vector<CnfFormula> reduction_fixtures();

}  // namespace rdom::oracle
