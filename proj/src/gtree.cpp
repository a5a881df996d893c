#include "tubelat/gtree.hpp"

#include <algorithm>

#include "tubelat/error.hpp"

namespace tubelat {

GTree::GTree(int n, std::vector<int> parent) : n_(n), parent_(std::move(parent)) {
  if (n < 1 || n > kMaxVertices) throw InvalidInput("tree size out of range");
  if (static_cast<int>(parent_.size()) != n + 1) throw InvalidInput("parent array has wrong length");
  parent_[0] = 0;
  for (int v = 1; v <= n; ++v) {
    int p = parent_[v];
    if (p < 0 || p > n || p == v) throw InvalidInput("bad parent for vertex " + std::to_string(v));
    if (p == 0) {
      if (root_) throw InvalidInput("tree has more than one root");
      root_ = v;
    }
  }
  if (!root_) throw InvalidInput("tree has no root");
  down_.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int steps = 0;
    for (int u = v; u; u = parent_[u]) {
      if (++steps > n) throw InvalidInput("parent map has a cycle");
      down_[u] |= bit(v);
    }
  }
}

std::vector<int> GTree::children(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (parent_[u] == v) out.push_back(u);
  return out;
}

GTree gtree_of(const Tubing& t) {
  std::vector<int> parent(t.n() + 1, 0);
  for (int v = 1; v <= t.n(); ++v) parent[v] = t.parent(v);
  return GTree(t.n(), std::move(parent));
}

GTree gtree_of(const Graph& g, const Tubing& t) {
  if (!(g == t.graph())) throw InvalidInput("tubing belongs to a different graph");
  return gtree_of(t);
}

Tubing tubing_of(const Graph& g, const GTree& tree) {
  if (tree.n() != g.n()) throw InvalidInput("tree and graph sizes differ");
  std::vector<Mask> tubes;
  for (int v = 1; v <= tree.n(); ++v) {
    if (!is_tube(g, tree.down(v))) throw InvalidInput("down-set of " + std::to_string(v) + " is not a tube");
    tubes.push_back(tree.down(v));
  }
  return Tubing(g, tubes);
}

int PairSet::size() const {
  int s = 0;
  for (Mask r : rows_) s += size_of(r);
  return s;
}

bool PairSet::subset_of(const PairSet& other) const {
  for (int i = 1; i <= n_; ++i)
    if (rows_[i] & ~other.rows_[i]) return false;
  return true;
}

bool PairSet::disjoint(const PairSet& other) const {
  for (int i = 1; i <= n_; ++i)
    if (rows_[i] & other.rows_[i]) return false;
  return true;
}

std::vector<std::pair<int, int>> PairSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j : vertices_of(rows_[i])) out.emplace_back(i, j);
  return out;
}

PairSet PairSet::operator|(const PairSet& other) const {
  PairSet out(n_);
  for (int i = 1; i <= n_; ++i) out.rows_[i] = rows_[i] | other.rows_[i];
  return out;
}

PairSet PairSet::reversed() const {
  PairSet out(n_);
  for (auto [i, j] : pairs()) out.insert(n_ + 1 - j, n_ + 1 - i);
  return out;
}

PairStats pair_statistics(const GTree& tree) {
  int n = tree.n();
  PairStats s{PairSet(n), PairSet(n), PairSet(n), PairSet(n), PairSet(n)};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (tree.below(j, i))
        s.inv.insert(i, j);
      else if (tree.below(i, j))
        s.coinv.insert(i, j);
      else
        s.inc.insert(i, j);
      if (tree.parent(i) == j) s.asc.insert(i, j);
      if (tree.parent(j) == i) s.desc.insert(i, j);
    }
  return s;
}

PairSet inversions(const Tubing& t) {
  PairSet out(t.n());
  for (int i = 1; i <= t.n(); ++i)
    for (int j : vertices_of(t.down(i) & ~full_mask(i))) out.insert(i, j);
  return out;
}

PairSet coinversions(const Tubing& t) {
  PairSet out(t.n());
  for (int j = 1; j <= t.n(); ++j)
    for (int i : vertices_of(t.down(j) & full_mask(j - 1))) out.insert(i, j);
  return out;
}

namespace {

// Position in the order used for left/right decisions: integer order for
// paths, the rotation m+1 < ... < n < 1 < ... < m-1 for cycles.
int rank_of(int v, int root, int n, TreeShape shape) {
  if (shape == TreeShape::path_bst) return v;
  return ((v - root - 1) % n + n) % n;
}

bool fill_slots(const GTree& tree, TreeShape shape, BinarySlots& slots) {
  int n = tree.n(), m = tree.root();
  slots.left.assign(n + 1, 0);
  slots.right.assign(n + 1, 0);
  slots.top_child = 0;
  for (int v = 1; v <= n; ++v) {
    int p = tree.parent(v);
    if (!p) continue;
    int* slot;
    if (shape == TreeShape::cycle_cbt && p == m)
      slot = &slots.top_child;
    else if (rank_of(v, m, n, shape) < rank_of(p, m, n, shape))
      slot = &slots.left[p];
    else
      slot = &slots.right[p];
    if (*slot) return false;
    *slot = v;
  }
  return true;
}

// In-order walk of the binary part; ranks must strictly increase.
bool in_order_sorted(const GTree& tree, TreeShape shape, const BinarySlots& slots, int start) {
  int n = tree.n(), m = tree.root();
  std::vector<int> stack;
  int cur = start, last = -1, count = 0;
  while (cur || !stack.empty()) {
    while (cur) {
      stack.push_back(cur);
      cur = slots.left[cur];
    }
    cur = stack.back();
    stack.pop_back();
    int r = rank_of(cur, m, n, shape);
    if (r <= last) return false;
    last = r;
    ++count;
    cur = slots.right[cur];
  }
  return count == (shape == TreeShape::path_bst ? n : n - 1);
}

void require_valid(const GTree& tree, TreeShape shape) {
  if (!validate(tree, shape))
    throw InvalidInput(shape == TreeShape::path_bst ? "not a binary search tree"
                                                    : "not a cyclic binary tree");
}

}  // namespace

bool validate(const GTree& tree, TreeShape shape) {
  BinarySlots slots;
  if (!fill_slots(tree, shape, slots)) return false;
  if (shape == TreeShape::path_bst) return in_order_sorted(tree, shape, slots, tree.root());
  if (tree.n() < 3 || !slots.top_child) return false;
  return in_order_sorted(tree, shape, slots, slots.top_child);
}

BinarySlots binary_slots(const GTree& tree, TreeShape shape) {
  require_valid(tree, shape);
  BinarySlots slots;
  fill_slots(tree, shape, slots);
  return slots;
}

int right_edge_count(const GTree& tree, TreeShape shape) {
  BinarySlots slots = binary_slots(tree, shape);
  return static_cast<int>(std::count_if(slots.right.begin(), slots.right.end(), [](int c) { return c != 0; }));
}

GTree tree_move(const GTree& tree, int x, TreeShape shape) {
  int n = tree.n();
  if (x < 1 || x > n) throw InvalidInput("vertex out of range");
  int y = tree.parent(x);
  if (!y) throw InvalidInput("the root has no edge to move");
  BinarySlots s = binary_slots(tree, shape);
  std::vector<int> parent(n + 1);
  for (int v = 1; v <= n; ++v) parent[v] = tree.parent(v);

  if (shape == TreeShape::cycle_cbt && y == tree.root()) {
    // Top edge: x becomes the root, its two subtrees swap sides under the old root.
    int t1 = s.left[x], t2 = s.right[x];
    parent[x] = 0;
    parent[y] = x;
    if (t1) parent[t1] = y;
    if (t2) parent[t2] = y;
    return GTree(n, std::move(parent));
  }

  // Rotation: x takes y's place; the inner subtree of x moves across to y.
  int inner = (s.left[y] == x) ? s.right[x] : s.left[x];
  parent[x] = parent[y];
  parent[y] = x;
  if (inner) parent[inner] = y;
  return GTree(n, std::move(parent));
}

Zippers zippers(const GTree& tree) {
  BinarySlots s = binary_slots(tree, TreeShape::path_bst);
  Zippers z;
  for (int v = s.left[tree.root()]; v; v = s.left[v]) z.left.push_back(v);
  for (int v = s.right[tree.root()]; v; v = s.right[v]) z.right.push_back(v);
  std::reverse(z.left.begin(), z.left.end());
  std::reverse(z.right.begin(), z.right.end());
  return z;
}

namespace {

struct Interval {
  int lo, hi, parent;
};

// Chooses a root for each pending interval of positions; vertex_at maps positions to labels.
void grow(std::vector<Interval>& pending, std::vector<int>& parent, int n,
          const std::function<int(int)>& vertex_at, const std::function<void(const GTree&)>& visit) {
  if (pending.empty()) {
    visit(GTree(n, parent));
    return;
  }
  Interval cur = pending.back();
  pending.pop_back();
  if (cur.lo > cur.hi) {
    grow(pending, parent, n, vertex_at, visit);
  } else {
    for (int r = cur.lo; r <= cur.hi; ++r) {
      int v = vertex_at(r);
      parent[v] = cur.parent;
      pending.push_back({r + 1, cur.hi, v});
      pending.push_back({cur.lo, r - 1, v});
      grow(pending, parent, n, vertex_at, visit);
      pending.pop_back();
      pending.pop_back();
    }
  }
  pending.push_back(cur);
}

}  // namespace

void for_each_path_tree(int n, const std::function<void(const GTree&)>& visit) {
  std::vector<Interval> pending{{1, n, 0}};
  std::vector<int> parent(n + 1, 0);
  grow(pending, parent, n, [](int r) { return r; }, visit);
}

void for_each_cycle_tree(int n, const std::function<void(const GTree&)>& visit) {
  if (n < 3) throw InvalidInput("cycle graph needs n >= 3");
  for (int m = 1; m <= n; ++m) {
    std::vector<Interval> pending{{0, n - 2, m}};
    std::vector<int> parent(n + 1, 0);
    grow(pending, parent, n, [m, n](int r) { return (m + r) % n + 1; }, visit);
  }
}

}  // namespace tubelat
