#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngon/class_kmu.hpp"
#include "ngon/graph_io.hpp"

namespace ngon {

/// Identifies base vertices of an extension E (keys) with vertices of the
/// ambient M (values).
using Gluing = std::map<VertexId, VertexId>;

struct AmalgamResult {
  BipartiteGraph graph;
  /// Ids in the result of E's non-base vertices, keyed by their id in E.
  std::map<VertexId, VertexId> placed;
};

/// Free amalgam of m and e over the glued base: m unchanged, E ∖ A added on
/// fresh ids above m's largest, no edges between M ∖ A and E ∖ A.
///
/// Throws std::invalid_argument if the gluing is not an isomorphism of the
/// induced subgraphs (parts included), or if the base is not strong in e.
AmalgamResult free_amalgam(const BipartiteGraph& m, const BipartiteGraph& e, const Gluing& gluing);

enum class Template { pendant_path, path_completion, cycle_attachment, cl_witness };
std::string template_name(Template t);

struct StepLog {
  int step = 0;
  Template kind = Template::pendant_path;
  bool accepted = false;
  std::string reason;  // empty when accepted
  std::size_t vertices = 0;
  std::size_t edges = 0;

  /// `STEP <k> <template> <accepted|rejected:REASON> <|V|> <|E|>`
  std::string line() const;
};

struct GrowResult {
  BipartiteGraph graph;
  std::vector<StepLog> log;
};

struct GrowOptions {
  KmuOptions kmu;
  /// Run the full membership check after the last step (in addition to the
  /// per-step checks restricted to new vertices).
  bool final_full_check = true;
};

/// Grows seed by `steps` randomized free-amalgamation attempts. Every
/// candidate is validated against K^μ; rejected ones are logged and
/// dropped. Throws std::invalid_argument if seed is not in K^μ and
/// std::logic_error if a previously strong set ever stops being strong.
GrowResult grow(const BipartiteGraph& seed, int steps, std::uint64_t rng_seed, const MuFunction& mu,
                const GrowOptions& options = {});

}  // namespace ngon
