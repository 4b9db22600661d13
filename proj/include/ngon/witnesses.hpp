#pragma once

#include <array>
#include <vector>

#include "ngon/graph_io.hpp"

namespace ngon {

/// Path x_0 … x_length with parts alternating from 0. Subsets: `path`,
/// `endpoints`, `interior`.
GraphDocument make_path(int n, int length);

/// Cycle of even length ≥ 4 (throws std::invalid_argument otherwise).
/// Subsets: `cycle`.
GraphDocument make_cycle(int n, int length);

/// Path x_0 … x_n plus a pendant x_{n+1} on x_{n-1}; ids are the indices.
/// Subsets: `gamma` and the prefixes `gamma_0` … `gamma_{n+1}`.
GraphDocument make_gamma(int n);

/// Cycle c_0 … c_{4ℓ(n-2)-1} with spokes c_{i(n-2)} – s_{i mod 4}. With
/// with_b, the spoke at i = 0 goes to a fresh vertex b instead of s_0.
/// Subsets: `A0`, `C`, and `b` / `A0b` when with_b. Throws for ℓ < 2.
GraphDocument make_cl_witness(int n, int ell, bool with_b);

/// The six-vertex tree a–x0–z1–z0 with z0 also adjacent to b1 and b2.
/// Subset: `star`.
GraphDocument make_star_path(int n);

/// Two internally disjoint paths of length n-1 between a and b. Subsets:
/// `endpoints`, `first`, `second` (the interiors).
GraphDocument make_double_path(int n);

enum class BaseParity { odd_n, even_n_type0, even_n_type1 };

struct BaseSetSpec {
  std::array<VertexId, 4> s;
  BaseParity parity;

  friend bool operator==(const BaseSetSpec&, const BaseSetSpec&) = default;
};

/// Every 4-tuple with dist(s_i, s_{i+1}) = n (indices mod 4) and
/// dist(s_0, s_2) = dist(s_1, s_3) = n-1 for odd n, n for even n. One tuple
/// per dihedral class: s_0 is the smallest id and s_1 < s_3.
std::vector<BaseSetSpec> find_base_sets(const BipartiteGraph& g);

/// Incidence graph of PG(2,2): points 0–6 (part 0), lines 7–13 (part 1).
GraphDocument make_fano();
/// Incidence graph of the symplectic quadrangle W(2): points 0–14 (part 0),
/// lines 15–29 (part 1); n = 4.
GraphDocument make_gq22();

}  // namespace ngon
