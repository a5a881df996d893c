#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tubelat {

// Vertex sets on 1..n, vertex v stored at bit v-1.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr Mask bit(int v) { return Mask{1} << (v - 1); }
constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
constexpr int size_of(Mask m) { return std::popcount(m); }
constexpr int lowest_vertex(Mask m) { return std::countr_zero(m) + 1; }
constexpr bool has_vertex(Mask m, int v) { return (m >> (v - 1)) & 1U; }

// Vertices lo..hi inclusive; empty when lo > hi.
Mask range_mask(int lo, int hi);
std::vector<int> vertices_of(Mask m);
Mask mask_of(const std::vector<int>& vertices);
// Image of a vertex set under i -> n+1-i.
Mask reverse_mask(Mask m, int n);

enum class GraphKind { path, cycle, complete, custom };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view name);

class Graph {
 public:
  Graph() = default;

  static Graph make(GraphKind kind, int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  GraphKind kind() const { return kind_; }
  Mask vertices() const { return full_mask(n_); }
  Mask neighbors(int v) const { return adj_[v - 1]; }
  bool adjacent(int u, int v) const { return has_vertex(adj_[u - 1], v); }
  std::vector<std::pair<int, int>> edges() const;

  // Connected component of the induced subgraph on s that contains v.
  Mask component(Mask s, int v) const;
  bool is_connected(Mask s) const;
  bool connected() const { return is_connected(vertices()); }
  // True when i -> n+1-i is an automorphism.
  bool reverse_invariant() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  GraphKind kind_ = GraphKind::custom;
  std::vector<Mask> adj_;
};

Graph make_graph(GraphKind kind, int n);

}  // namespace tubelat
