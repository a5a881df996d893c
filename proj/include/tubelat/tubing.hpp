#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tubelat/graph.hpp"

namespace tubelat {

bool is_tube(const Graph& g, Mask s);
bool compatible(const Graph& g, Mask a, Mask b);
bool is_maximal_tubing(const Graph& g, const std::vector<Mask>& tubes);

// Canonical tube order: by size, then lexicographically on sorted vertex lists.
bool tube_less(Mask a, Mask b);
std::string serialize_tube(Mask t);

// A maximal tubing, stored as the map v -> down(v) (smallest tube containing v).
class Tubing {
 public:
  Tubing(Graph g, const std::vector<Mask>& tubes);

  // Caller guarantees down[v-1] are the principal tubes of a maximal tubing.
  static Tubing from_down_sets(Graph g, std::vector<Mask> down);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  Mask down(int v) const { return down_[v - 1]; }
  const std::vector<Mask>& down_sets() const { return down_; }
  std::vector<Mask> tubes() const;
  bool contains(Mask tube) const;
  int top(Mask tube) const;
  // Top of the smallest tube strictly containing down(v); 0 for the root.
  int parent(int v) const;
  int root() const;
  std::string serialize() const;

  friend bool operator==(const Tubing& a, const Tubing& b) {
    return a.down_ == b.down_ && a.graph_ == b.graph_;
  }

 private:
  Tubing() = default;
  Graph graph_;
  std::vector<Mask> down_;
};

int top(const Tubing& t, Mask tube);

struct Flip {
  Tubing tubing;
  Mask removed;
  Mask added;
};

Flip flip(const Tubing& t, Mask tube);
Flip flip(const Graph& g, const Tubing& t, Mask tube);

// True when a is covered by b.
bool covers(const Tubing& a, const Tubing& b);
bool covers(const Graph& g, const Tubing& a, const Tubing& b);

Tubing relabel_reverse(const Tubing& t);

// Greedy tubing rooted at the largest vertex of every component; the chain 1<...<n for paths and cycles.
Tubing minimum_tubing(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Breadth-first by flip distance from minimum_tubing, ties by serialization.
std::vector<Tubing> enumerate_maximal_tubings(const Graph& g,
                                              std::size_t cap = kDefaultEnumerationCap);

struct DownSetsHash {
  std::size_t operator()(const std::vector<Mask>& d) const;
};

}  // namespace tubelat

template <>
struct std::hash<tubelat::Tubing> {
  std::size_t operator()(const tubelat::Tubing& t) const {
    return tubelat::DownSetsHash{}(t.down_sets());
  }
};
