#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace rdom {

inline constexpr int kMaxClauseLength = 3;
inline constexpr int kSatBruteForceMaxVars = 24;

/// Signed variable index: +i is x_i, -i is its negation (i >= 1).
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool operator==(const CnfFormula&) const = default;
};

/// Truth values indexed by variable - 1.
using TruthAssignment = std::vector<bool>;

/// DIMACS CNF: 'c' comment lines, header "p cnf n m", then m clauses as
/// 0-terminated literal sequences (a clause may span lines). Clauses longer
/// than 3 literals, out-of-range literals, empty and tautological clauses are
/// rejected with ParseError.
CnfFormula parse_dimacs(std::string_view text);

std::string to_dimacs(const CnfFormula& f);

/// Throws DomainError when a literal is out of range, a clause is empty or
/// longer than 3, or a clause holds both x and its negation.
void validate(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const TruthAssignment& a);

/// Least satisfying assignment in lexicographic order (false < true, x1
/// most significant), or nullopt. Exhaustive; at most 24 variables.
std::optional<TruthAssignment> sat_brute_force(const CnfFormula& f);

}  // namespace rdom
