#pragma once

#include <vector>

#include "ngon/automorphisms.hpp"
#include "ngon/graph.hpp"
#include "ngon/perm_group.hpp"

namespace ngon {

// The checks below take a group acting on vertex indices of g and require g
// to be a generalized n-gon (thickness not required); otherwise they throw
// std::invalid_argument.

struct TransitivityReport {
  /// Every path stabilizer G_γ, γ = (x_0 … x_n), is transitive on
  /// D_1(x_n) ∖ {x_{n-1}}.
  bool holds = false;
  /// Transitivity on ordered 2n-cycles with a start of either fixed type.
  bool cycle_form = false;
  /// Failing path as ids; empty when holds.
  std::vector<VertexId> path;
};

TransitivityReport is_strongly_transitive(const BipartiteGraph& g, const PermGroup& grp);

struct CycleExtensionReport {
  /// Transitive on ordered (2n+2)-cycles (start of fixed type, each type).
  bool left = false;
  /// Transitive on ordered 2n-cycles and, for such a cycle x, its pointwise
  /// stabilizer transitive on (D_1(x_1)∖{x_0,x_2}) × (D_1(x_2)∖{x_1,x_3}).
  bool right = false;
  /// left ⇔ right for each start type.
  bool equivalent = false;
};

CycleExtensionReport check_cycle_extension_equivalence(const BipartiteGraph& g, const PermGroup& grp);

struct MoufangReport {
  bool holds = false;
  std::vector<VertexId> path;  // failing path, empty when holds
};

/// For every path (x_0 … x_n): the pointwise stabilizer of
/// D_1(x_1) ∪ … ∪ D_1(x_{n-1}) is transitive on D_1(x_n) ∖ {x_{n-1}}.
MoufangReport is_moufang(const BipartiteGraph& g, const PermGroup& grp);

/// Largest t such that the stabilizer of x is t-transitive on D_1(x)
/// (0 if not even transitive; |D_1(x)| at most). Throws std::out_of_range
/// for an unknown id. No polygon precondition.
int stabilizer_transitivity_degree(const BipartiteGraph& g, const PermGroup& grp, VertexId x);

}  // namespace ngon
