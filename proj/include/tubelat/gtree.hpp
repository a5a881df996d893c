#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tubelat/graph.hpp"
#include "tubelat/tubing.hpp"

namespace tubelat {

enum class TreeShape { path_bst, cycle_cbt };

// Rooted tree poset on 1..n; parent(root) == 0.
class GTree {
 public:
  GTree(int n, std::vector<int> parent);

  int n() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  std::vector<int> children(int v) const;
  // Principal down-set of v (v and everything below it).
  Mask down(int v) const { return down_[v]; }
  bool below(int a, int b) const { return a != b && has_vertex(down_[b], a); }

  friend bool operator==(const GTree& a, const GTree& b) { return a.parent_ == b.parent_; }

 private:
  int n_;
  int root_ = 0;
  std::vector<int> parent_;  // indexed by vertex, slot 0 unused
  std::vector<Mask> down_;
};

GTree gtree_of(const Tubing& t);
GTree gtree_of(const Graph& g, const Tubing& t);
Tubing tubing_of(const Graph& g, const GTree& tree);

// Pairs (i,j) with i < j; row i holds bit j.
class PairSet {
 public:
  explicit PairSet(int n = 0) : n_(n), rows_(n + 1, 0) {}

  int n() const { return n_; }
  bool contains(int i, int j) const { return has_vertex(rows_[i], j); }
  void insert(int i, int j) { rows_[i] |= bit(j); }
  Mask row(int i) const { return rows_[i]; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool subset_of(const PairSet& other) const;
  bool disjoint(const PairSet& other) const;
  std::vector<std::pair<int, int>> pairs() const;
  PairSet operator|(const PairSet& other) const;
  // Image under i -> n+1-i, re-normalized to i < j.
  PairSet reversed() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int n_;
  std::vector<Mask> rows_;
};

struct PairStats {
  PairSet inv, coinv, inc, asc, desc;
};

PairStats pair_statistics(const GTree& tree);
PairSet inversions(const Tubing& t);
PairSet coinversions(const Tubing& t);

bool validate(const GTree& tree, TreeShape shape);

// Tree move on the edge between x and its parent.
GTree tree_move(const GTree& tree, int x, TreeShape shape);

// Child slots of a valid tree. For cycle trees the root's child is top_child.
struct BinarySlots {
  std::vector<int> left, right;
  int top_child = 0;
};
BinarySlots binary_slots(const GTree& tree, TreeShape shape);
int right_edge_count(const GTree& tree, TreeShape shape);

struct Zippers {
  std::vector<int> left;   // 1 = a_1, ..., a_l
  std::vector<int> right;  // n = b_1, ..., b_r
};
Zippers zippers(const GTree& tree);

// Streams every binary search tree on 1..n (as parent arrays).
void for_each_path_tree(int n, const std::function<void(const GTree&)>& visit);
// Streams every cyclic binary tree on 1..n.
void for_each_cycle_tree(int n, const std::function<void(const GTree&)>& visit);

}  // namespace tubelat
