#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngon/graph.hpp"
#include "ngon/zero_algebraic.hpp"

namespace ngon {

/// A standalone (base, body) configuration: the induced graph on A ∪ B with
/// the two parts marked.
struct PairConfiguration {
  BipartiteGraph graph;
  VertexSet base;
  VertexSet body;
};

PairConfiguration extract_configuration(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body);

/// Isomorphism of pairs: a part-preserving bijection of A ∪ B onto A' ∪ B'
/// sending A to A' and B to B', preserving adjacency both ways.
bool pairs_isomorphic(const PairConfiguration& x, const PairConfiguration& y);

/// A ∪ B is a simple path of length n-1 whose endpoints are exactly A.
bool is_path_configuration(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body);

/// Bound on the number of copies of a 0-minimally algebraic body over its
/// base. Overrides are matched up to pair isomorphism; everything else gets
/// 1 on the path configuration and max{δ(A), n} + fallback_offset otherwise.
class MuFunction {
 public:
  explicit MuFunction(int n, long fallback_offset = 0);

  int n() const { return n_; }
  long fallback_offset() const { return fallback_offset_; }

  /// Throws std::invalid_argument if the value is not admissible for the
  /// configuration (1 on paths, ≥ max{δ(A), n} elsewhere).
  void add_override(PairConfiguration config, long value);

  long operator()(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body) const;

  /// `mu` directive payloads, one per line.
  std::vector<std::string> serialize() const;
  /// Inverse of serialize; throws std::invalid_argument on malformed input.
  static MuFunction parse(int n, const std::vector<std::string>& lines);

 private:
  struct Override {
    PairConfiguration config;
    long value;
  };
  int n_;
  long fallback_offset_;
  std::vector<Override> overrides_;
};

/// The minimal admissible μ.
MuFunction default_mu(int n);

/// Distinct vertex sets B' ⊆ g ∖ A with (A, B') ≅ (A, B) over A. Stops
/// counting once limit is exceeded, returning limit + 1.
std::size_t count_copies(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body,
                         std::optional<std::size_t> limit = {});
std::vector<VertexSet> find_copies(const BipartiteGraph& g, const VertexSet& base, const VertexSet& body,
                                   std::optional<std::size_t> limit = {});

enum class Condition { short_cycle, long_cycle_low_delta, mu_exceeded };
std::string condition_name(Condition c);

struct ViolationReport {
  Condition condition;
  std::vector<VertexId> witness;  // cycle order for short cycles, sorted ids otherwise
  long value = 0;
  long bound = 0;
  /// For mu_exceeded: the base and one body; empty otherwise.
  std::vector<VertexId> base;
  std::vector<VertexId> body;
};

struct KmuOptions {
  /// Longest cycle inspected for the long-cycle condition; default 2n+6.
  std::optional<int> horizon;
  /// Body-size cap for 0-minimally algebraic pairs; default 12(n-2).
  std::optional<std::size_t> body_cap;
  /// Restrict all three checks to structures touching these vertices.
  std::optional<VertexSet> focus;
};

struct KmuReport {
  bool member = false;
  std::vector<ViolationReport> violations;
  int horizon = 0;
  std::size_t body_cap = 0;
};

KmuReport in_class(const BipartiteGraph& g, const MuFunction& mu, const KmuOptions& options = {});

}  // namespace ngon
