#pragma once

#include <string>

#include "ngon/graph.hpp"
#include "ngon/perm_group.hpp"

namespace ngon {

/// Generators of Aut(g), acting on vertex indices. With type_preserving the
/// group is restricted to automorphisms fixing both parts setwise.
///
/// Search: equitable colour refinement, individualization along a base, and
/// one backtracking search per candidate image not yet in a known orbit.
PermGroup automorphism_group(const BipartiteGraph& g, bool type_preserving);

/// True iff p preserves adjacency (and parts, when type_preserving).
bool is_automorphism(const BipartiteGraph& g, const Perm& p, bool type_preserving);

/// Cycle notation over vertex ids, fixed points omitted, e.g. "(0 7)(1 8 9)".
/// The identity prints as "()".
std::string cycle_notation(const BipartiteGraph& g, const Perm& p);

}  // namespace ngon
