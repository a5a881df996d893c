#include "tubelat/graph.hpp"

#include "tubelat/error.hpp"

namespace tubelat {

Mask range_mask(int lo, int hi) {
  if (lo > hi) return 0;
  return full_mask(hi) & ~full_mask(lo - 1);
}

std::vector<int> vertices_of(Mask m) {
  std::vector<int> out;
  out.reserve(size_of(m));
  while (m) {
    out.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw InvalidInput("vertex out of range: " + std::to_string(v));
    m |= bit(v);
  }
  return m;
}

Mask reverse_mask(Mask m, int n) {
  Mask out = 0;
  for (int v : vertices_of(m)) out |= bit(n + 1 - v);
  return out;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::complete: return "complete";
    case GraphKind::custom: return "custom";
  }
  return "custom";
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "custom") return GraphKind::custom;
  throw InvalidInput("unknown graph kind: " + std::string(name));
}

Graph Graph::make(GraphKind kind, int n) {
  if (n < 1) throw InvalidInput("graph needs at least one vertex");
  if (n > kMaxVertices) throw InvalidInput("graph exceeds 63 vertices");
  Graph g;
  g.n_ = n;
  g.kind_ = kind;
  g.adj_.assign(n, 0);
  auto link = [&g](int u, int v) {
    g.adj_[u - 1] |= bit(v);
    g.adj_[v - 1] |= bit(u);
  };
  switch (kind) {
    case GraphKind::cycle:
      if (n < 3) throw InvalidInput("cycle graph needs n >= 3");
      link(1, n);
      [[fallthrough]];
    case GraphKind::path:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case GraphKind::complete:
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) link(u, v);
      break;
    case GraphKind::custom:
      throw InvalidInput("custom graphs are built from an edge list");
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw InvalidInput("graph needs at least one vertex");
  if (n > kMaxVertices) throw InvalidInput("graph exceeds 63 vertices");
  Graph g;
  g.n_ = n;
  g.kind_ = GraphKind::custom;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("loops are not allowed");
    g.adj_[u - 1] |= bit(v);
    g.adj_[v - 1] |= bit(u);
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : vertices_of(adj_[u - 1] & ~full_mask(u))) out.emplace_back(u, v);
  return out;
}

Mask Graph::component(Mask s, int v) const {
  Mask seen = bit(v) & s;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected(Mask s) const {
  if (!s) return false;
  return component(s, lowest_vertex(s)) == s;
}

bool Graph::reverse_invariant() const {
  for (int u = 1; u <= n_; ++u)
    if (reverse_mask(adj_[u - 1], n_) != adj_[n_ - u]) return false;
  return true;
}

Graph make_graph(GraphKind kind, int n) { return Graph::make(kind, n); }

}  // namespace tubelat
