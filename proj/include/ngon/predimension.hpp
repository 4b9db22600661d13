#pragma once

#include <optional>

#include "ngon/graph.hpp"

namespace ngon {

/// δ(A) = (n-1)|A| - (n-2)e(A). May be negative; never clamped.
long delta(const BipartiteGraph& g, const VertexSet& a);

/// δ(A/B) = δ(A∪B) - δ(B).
long delta_rel(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b);

/// Minimum of δ over all sets X with core ⊆ X ⊆ universe, together with the
/// inclusion-smallest X attaining it. The minimizers form a lattice under ∪
/// and ∩ (δ is submodular), so that smallest X is unique.
struct SupersetMinimum {
  long value = 0;
  VertexSet minimizer;
};

/// Exact, via a max-closure min-cut. Requires core ⊆ universe.
SupersetMinimum min_delta_superset(const BipartiteGraph& g, const VertexSet& core,
                                   const VertexSet& universe);

struct StrongCheck {
  bool strong = false;
  long delta = 0;      // δ(A)
  long min_delta = 0;  // min δ(B') over A ⊆ B' ⊆ B
  /// On failure: the inclusion-smallest violator among those of least δ.
  std::optional<VertexSet> witness;
};

/// A ≤ B: δ(B') ≥ δ(A) for all A ⊆ B' ⊆ B. Throws std::invalid_argument
/// unless A ⊆ B.
StrongCheck is_strong(const BipartiteGraph& g, const VertexSet& a, const VertexSet& b);
/// A ≤ ambient graph.
StrongCheck is_strong(const BipartiteGraph& g, const VertexSet& a);

/// d(A): min δ over supersets inside the finite ambient graph.
long d_min(const BipartiteGraph& g, const VertexSet& a);
/// d(B/A) = d(A∪B) - d(A).
long d_rel(const BipartiteGraph& g, const VertexSet& b, const VertexSet& a);

/// cl(A): the smallest strong subset of the ambient graph containing A.
VertexSet closure(const BipartiteGraph& g, const VertexSet& a);

/// {x : d(x/A) = 0}, relative to the finite ambient graph.
VertexSet acl_relative(const BipartiteGraph& g, const VertexSet& a);

}  // namespace ngon
