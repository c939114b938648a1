#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdom/assignment.hpp"
#include "rdom/cnf.hpp"
#include "rdom/graph.hpp"

namespace rdom {

enum class RoleKind { PosLiteral, NegLiteral, Filler, Clause, U, V, W };

/// What a gadget vertex stands for. `index` is the 1-based variable (literal
/// and filler vertices) or clause; `slot` tells the two fillers apart (1, 2).
struct Role {
  RoleKind kind;
  int index = 0;
  int slot = 0;

  std::string name() const;
  bool operator==(const Role&) const = default;
};

/// The 3SAT gadget. Vertex layout: four vertices per variable
/// (x_i, not x_i, filler 1, filler 2), then one per clause, then u, v, w.
struct ReductionGraph {
  Graph graph;
  std::vector<Role> roles;
  int num_vars = 0;
  int num_clauses = 0;

  int pos_literal(int var) const { return 4 * (var - 1); }
  int neg_literal(int var) const { return 4 * (var - 1) + 1; }
  int filler(int var, int slot) const { return 4 * (var - 1) + 1 + slot; }
  int literal_vertex(Literal l) const { return l > 0 ? pos_literal(l) : neg_literal(-l); }
  int clause_vertex(int clause) const { return 4 * num_vars + clause - 1; }
  int u() const { return 4 * num_vars + num_clauses; }
  int v() const { return u() + 1; }
  int w() const { return u() + 2; }
};

/// Builds the gadget: a diamond per variable whose adjacent degree-3 pair is
/// (x_i, not x_i); a vertex per clause joined to the vertices of its literals
/// (duplicates collapse); an induced path u-v-w with u and w joined to every
/// clause vertex. Order is 4n + m + 3. Throws DomainError when m < 2, some
/// variable occurs in no clause, or the formula is invalid.
ReductionGraph build_reduction(const CnfFormula& f);

/// {1} on u and every x_i, {2} on w and every not x_i, {} elsewhere.
/// A 2-rainbow dominating function of weight 2n + 2.
RainbowAssignment rainbow_certificate(const ReductionGraph& r);

/// 2 on v and on every true literal vertex, 0 elsewhere. Roman dominating
/// with weight 2n + 2 whenever the assignment satisfies the formula.
RomanAssignment roman_from_assignment(const ReductionGraph& r, const TruthAssignment& a);

/// 2 on every x_i and on u, 1 on w, 0 elsewhere. Roman dominating with
/// weight 2n + 3 for every formula.
RomanAssignment roman_upper_certificate(const ReductionGraph& r);

/// Reads a truth assignment off a Roman dominating function of weight 2n + 2:
/// x_i is true iff its positive literal vertex carries 2. Throws DomainError
/// if g is not Roman dominating or has another weight.
TruthAssignment extract_assignment(const ReductionGraph& r, const RomanAssignment& g);

/// Structural invariants of a gadget: order, per-variable diamonds, clause
/// adjacency, the u-v-w path, connectivity and K4-freeness.
bool check_gadget_structure(const CnfFormula& f, const ReductionGraph& r);

struct ReductionReport {
  int n = 0;
  int m = 0;
  int order = 0;
  int gamma_r2 = 0;
  int gamma_roman = 0;
  int gap = 0;
  bool satisfiable = false;
  std::optional<TruthAssignment> assignment;  ///< extracted from the Roman witness
  bool consistent = false;
};

/// Builds the gadget, solves both parameters exactly, runs the SAT oracle,
/// and checks every identity the construction promises.
ReductionReport verify_reduction(const CnfFormula& f);

/// JSON object with keys n, m, order, gamma_r2, gamma_R, gap, satisfiable,
/// assignment, consistent (in that order).
std::string to_json(const ReductionReport& report);

}  // namespace rdom
