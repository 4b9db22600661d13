#include "ngon/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ngon {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::vector<VertexId> iota_ids(VertexId from, VertexId to) {
  std::vector<VertexId> out;
  for (VertexId v = from; v < to; ++v) out.push_back(v);
  return out;
}

}  // namespace

GraphDocument make_path(int n, int length) {
  if (length < 0) throw std::invalid_argument("path length must be non-negative");
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId v = 0; v <= length; ++v) vs.push_back({v, static_cast<int>(v % 2)});
  for (VertexId v = 0; v < length; ++v) es.emplace_back(v, v + 1);
  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["path"] = iota_ids(0, length + 1);
  doc.subsets["endpoints"] = length == 0 ? std::vector<VertexId>{0} : std::vector<VertexId>{0, length};
  doc.subsets["interior"] = length < 2 ? std::vector<VertexId>{} : iota_ids(1, length);
  return doc;
}

GraphDocument make_cycle(int n, int length) {
  if (length < 4 || length % 2 != 0) throw std::invalid_argument("cycle length must be even and at least 4");
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId v = 0; v < length; ++v) {
    vs.push_back({v, static_cast<int>(v % 2)});
    es.emplace_back(v, (v + 1) % length);
  }
  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["cycle"] = iota_ids(0, length);
  return doc;
}

GraphDocument make_gamma(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId v = 0; v <= n; ++v) vs.push_back({v, static_cast<int>(v % 2)});
  for (VertexId v = 0; v < n; ++v) es.emplace_back(v, v + 1);
  // x_{n+1} hangs off x_{n-1}, so it shares a part with x_n.
  vs.push_back({n + 1, n % 2});
  es.emplace_back(n - 1, n + 1);
  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["gamma"] = iota_ids(0, n + 2);
  for (int i = 0; i <= n + 1; ++i) doc.subsets["gamma_" + std::to_string(i)] = iota_ids(0, i + 1);
  return doc;
}

GraphDocument make_cl_witness(int n, int ell, bool with_b) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (ell < 2) throw std::invalid_argument("C_l witnesses need l >= 2");
  const VertexId length = 4LL * ell * (n - 2);
  const VertexId s_first = length;
  const VertexId b_id = length + 4;
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId c = 0; c < length; ++c) {
    vs.push_back({c, static_cast<int>(c % 2)});
    es.emplace_back(c, (c + 1) % length);
  }
  std::array<int, 4> base_part{-1, -1, -1, -1};
  int b_part = -1;
  for (VertexId i = 0; i < 4LL * ell; ++i) {
    const VertexId c = i * (n - 2);
    const int spoke_part = 1 - static_cast<int>(c % 2);
    if (with_b && i == 0) {
      b_part = spoke_part;
      es.emplace_back(c, b_id);
      continue;
    }
    base_part[static_cast<std::size_t>(i % 4)] = spoke_part;
    es.emplace_back(c, s_first + i % 4);
  }
  for (VertexId k = 0; k < 4; ++k) vs.push_back({s_first + k, base_part[static_cast<std::size_t>(k)]});
  if (with_b) vs.push_back({b_id, b_part});

  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["C"] = iota_ids(0, length);
  doc.subsets["A0"] = iota_ids(s_first, s_first + 4);
  if (with_b) {
    doc.subsets["b"] = {b_id};
    doc.subsets["A0b"] = iota_ids(s_first, s_first + 5);
  }
  return doc;
}

GraphDocument make_star_path(int n) {
  // ids: 0 a, 1 x0, 2 z1, 3 z0, 4 b1, 5 b2
  std::vector<VertexDecl> vs{{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 0}};
  EdgeList es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["star"] = iota_ids(0, 6);
  return doc;
}

GraphDocument make_double_path(int n) {
  const int inner = n - 2;
  // a = 0; first interior 1..inner; b = inner+1; second interior after.
  std::vector<VertexDecl> vs;
  EdgeList es;
  const VertexId b = inner + 1;
  for (VertexId v = 0; v <= b; ++v) vs.push_back({v, static_cast<int>(v % 2)});
  for (VertexId v = 0; v < b; ++v) es.emplace_back(v, v + 1);
  std::vector<VertexId> second;
  VertexId prev = 0;
  for (int k = 1; k <= inner; ++k) {
    VertexId id = b + k;
    vs.push_back({id, k % 2});
    es.emplace_back(prev, id);
    second.push_back(id);
    prev = id;
  }
  es.emplace_back(prev, b);
  GraphDocument doc{BipartiteGraph(n, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["endpoints"] = {0, b};
  doc.subsets["first"] = iota_ids(1, b);
  doc.subsets["second"] = second;
  return doc;
}

std::vector<BaseSetSpec> find_base_sets(const BipartiteGraph& g) {
  const int n = g.n();
  const int diagonal = n % 2 == 1 ? n - 1 : n;
  const auto dist = distance_matrix(g);
  auto d = [&](int u, int v) { return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
  const int count = static_cast<int>(g.vertex_count());
  std::vector<BaseSetSpec> out;
  // Indices follow id order, so "smallest id" is "smallest index".
  for (int s0 = 0; s0 < count; ++s0) {
    for (int s1 = s0 + 1; s1 < count; ++s1) {
      if (d(s0, s1) != n) continue;
      for (int s2 = s0 + 1; s2 < count; ++s2) {
        if (s2 == s1 || d(s1, s2) != n || d(s0, s2) != diagonal) continue;
        for (int s3 = s1 + 1; s3 < count; ++s3) {
          if (s3 == s2 || d(s2, s3) != n || d(s3, s0) != n || d(s1, s3) != diagonal) continue;
          BaseParity parity = BaseParity::odd_n;
          if (n % 2 == 0) parity = g.part(s0) == 0 ? BaseParity::even_n_type0 : BaseParity::even_n_type1;
          out.push_back({{g.id(s0), g.id(s1), g.id(s2), g.id(s3)}, parity});
        }
      }
    }
  }
  return out;
}

GraphDocument make_fano() {
  // Points and lines are the nonzero vectors of F_2^3; p lies on l iff p·l = 0.
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId k = 0; k < 7; ++k) {
    vs.push_back({k, 0});
    vs.push_back({7 + k, 1});
  }
  for (unsigned p = 1; p <= 7; ++p)
    for (unsigned l = 1; l <= 7; ++l)
      if (std::popcount(p & l) % 2 == 0) es.emplace_back(p - 1, 7 + l - 1);
  GraphDocument doc{BipartiteGraph(3, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["points"] = iota_ids(0, 7);
  doc.subsets["lines"] = iota_ids(7, 14);
  return doc;
}

GraphDocument make_gq22() {
  // Points: nonzero vectors of F_2^4. Lines: totally isotropic 2-spaces of the
  // symplectic form x0y1 + x1y0 + x2y3 + x3y2.
  auto form = [](unsigned x, unsigned y) {
    auto bit = [](unsigned v, int i) { return (v >> i) & 1U; };
    return (bit(x, 0) & bit(y, 1)) ^ (bit(x, 1) & bit(y, 0)) ^ (bit(x, 2) & bit(y, 3)) ^ (bit(x, 3) & bit(y, 2));
  };
  std::vector<std::array<unsigned, 3>> lines;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b) {
      if (form(a, b) != 0) continue;
      std::array<unsigned, 3> line{a, b, a ^ b};
      std::sort(line.begin(), line.end());
      if (std::find(lines.begin(), lines.end(), line) == lines.end()) lines.push_back(line);
    }
  std::sort(lines.begin(), lines.end());
  std::vector<VertexDecl> vs;
  EdgeList es;
  for (VertexId p = 0; p < 15; ++p) vs.push_back({p, 0});
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const VertexId id = 15 + static_cast<VertexId>(l);
    vs.push_back({id, 1});
    for (unsigned p : lines[l]) es.emplace_back(static_cast<VertexId>(p) - 1, id);
  }
  GraphDocument doc{BipartiteGraph(4, std::move(vs), std::move(es)), {}, {}};
  doc.subsets["points"] = iota_ids(0, 15);
  doc.subsets["lines"] = iota_ids(15, 15 + static_cast<VertexId>(lines.size()));
  return doc;
}

}  // namespace ngon
