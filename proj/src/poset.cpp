#include "tubelat/poset.hpp"

#include <algorithm>
#include <queue>

#include "tubelat/error.hpp"
#include "tubelat/parallel.hpp"

namespace tubelat {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<int>> upper_covers)
    : labels_(std::move(labels)), upper_(std::move(upper_covers)) {
  int n = size();
  if (static_cast<int>(upper_.size()) != n) throw InvalidInput("cover list size mismatch");
  lower_.assign(n, {});
  std::vector<int> indegree(n, 0);
  for (int a = 0; a < n; ++a) {
    std::sort(upper_[a].begin(), upper_[a].end());
    for (int b : upper_[a]) {
      if (b < 0 || b >= n || b == a) throw InvalidInput("bad cover relation");
      lower_[b].push_back(a);
      ++indegree[b];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int a = 0; a < n; ++a)
    if (!indegree[a]) ready.push(a);
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    linear_.push_back(a);
    for (int b : upper_[a])
      if (--indegree[b] == 0) ready.push(b);
  }
  if (static_cast<int>(linear_.size()) != n) throw InvalidInput("cover relation has a cycle");
  position_.assign(n, 0);
  for (int i = 0; i < n; ++i) position_[linear_[i]] = i;

  up_.assign(n, Bitset(n));
  down_.assign(n, Bitset(n));
  for (auto it = linear_.rbegin(); it != linear_.rend(); ++it) {
    int a = *it;
    up_[a].set(a);
    for (int b : upper_[a]) up_[a] |= up_[b];
  }
  for (int a = 0; a < n; ++a)
    for (auto b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) down_[b].set(a);
}

std::optional<int> FinitePoset::bottom() const {
  if (labels_.empty()) return std::nullopt;
  int a = linear_.front();
  if (static_cast<int>(up_[a].count()) == size()) return a;
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  if (labels_.empty()) return std::nullopt;
  int a = linear_.back();
  if (static_cast<int>(down_[a].count()) == size()) return a;
  return std::nullopt;
}

FinitePoset poset_from_order(std::vector<std::string> labels,
                             const std::function<bool(int, int)>& strictly_less) {
  int n = static_cast<int>(labels.size());
  std::vector<Bitset> above(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && strictly_less(a, b)) above[a].set(b);
  std::vector<std::vector<int>> covers(n);
  for (int a = 0; a < n; ++a) {
    Bitset indirect(n);
    for (auto c = above[a].find_first(); c != Bitset::npos; c = above[a].find_next(c)) indirect |= above[c];
    Bitset direct = above[a] - indirect;
    for (auto b = direct.find_first(); b != Bitset::npos; b = direct.find_next(b))
      covers[a].push_back(static_cast<int>(b));
  }
  return FinitePoset(std::move(labels), std::move(covers));
}

int TubingPoset::index_of(const Tubing& t) const {
  auto it = index.find(t.down_sets());
  if (it == index.end() || !(t.graph() == graph)) throw InvalidInput("tubing is not an element of this poset");
  return it->second;
}

TubingPoset build_poset(const Graph& g, std::size_t cap) {
  std::vector<Tubing> tubings = enumerate_maximal_tubings(g, cap);
  std::unordered_map<std::vector<Mask>, int, DownSetsHash> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tubings.size(); ++i) {
    index.emplace(tubings[i].down_sets(), static_cast<int>(i));
    labels.push_back(tubings[i].serialize());
  }
  std::vector<std::vector<int>> upper(tubings.size());
  for (std::size_t i = 0; i < tubings.size(); ++i) {
    const Tubing& t = tubings[i];
    for (Mask tube : t.down_sets()) {
      if (tube == g.vertices()) continue;
      Flip f = flip(t, tube);
      if (t.top(f.removed) < f.tubing.top(f.added)) upper[i].push_back(index.at(f.tubing.down_sets()));
    }
  }
  FinitePoset poset(std::move(labels), std::move(upper));
  return TubingPoset{g, std::move(tubings), std::move(poset), std::move(index)};
}

namespace {

BoundResult least_of(const FinitePoset& p, const Bitset& bounds, bool upward) {
  BoundResult r;
  if (bounds.none()) return r;
  int best = -1;
  for (auto u = bounds.find_first(); u != Bitset::npos; u = bounds.find_next(u)) {
    int v = static_cast<int>(u);
    if (best < 0 || (upward ? p.position(v) < p.position(best) : p.position(v) > p.position(best))) best = v;
  }
  if (bounds.is_subset_of(upward ? p.up(best) : p.down(best))) {
    r.element = best;
    return r;
  }
  for (auto u = bounds.find_first(); u != Bitset::npos; u = bounds.find_next(u)) {
    int v = static_cast<int>(u);
    const Bitset& beneath = upward ? p.down(v) : p.up(v);
    if ((beneath & bounds).count() == 1) r.minimal.push_back(v);
  }
  return r;
}

}  // namespace

BoundResult brute_join(const FinitePoset& p, int a, int b) { return least_of(p, p.up(a) & p.up(b), true); }

BoundResult brute_meet(const FinitePoset& p, int a, int b) {
  return least_of(p, p.down(a) & p.down(b), false);
}

LatticeCheck is_lattice(const FinitePoset& p) {
  int n = p.size();
  std::vector<LatticeCheck> per_row(n);
  parallel_for(n, [&](std::size_t row) {
    int a = static_cast<int>(row);
    for (int b = a + 1; b < n; ++b) {
      for (bool join : {true, false}) {
        BoundResult r = join ? brute_join(p, a, b) : brute_meet(p, a, b);
        if (!r.element) {
          per_row[a] = LatticeCheck{false, join, a, b, r.minimal};
          return;
        }
      }
    }
  });
  for (const auto& c : per_row)
    if (!c.ok) return c;
  return {};
}

LatticeTables::LatticeTables(const FinitePoset& p) : size_(p.size()) {
  join_.assign(size_ * size_, -1);
  meet_.assign(size_ * size_, -1);
  parallel_for(size_, [&](std::size_t a) {
    for (std::size_t b = 0; b < size_; ++b) {
      BoundResult j = brute_join(p, static_cast<int>(a), static_cast<int>(b));
      BoundResult m = brute_meet(p, static_cast<int>(a), static_cast<int>(b));
      if (!j.element || !m.element) throw InvalidInput("poset is not a lattice");
      join_[a * size_ + b] = *j.element;
      meet_[a * size_ + b] = *m.element;
    }
  });
}

std::vector<std::vector<long long>> mobius(const FinitePoset& p) {
  int n = p.size();
  std::vector<std::vector<long long>> mu(n, std::vector<long long>(n, 0));
  parallel_for(n, [&](std::size_t row) {
    int a = static_cast<int>(row);
    auto& m = mu[a];
    for (int b : p.linear_extension()) {
      if (!p.leq(a, b)) continue;
      if (a == b) {
        m[b] = 1;
        continue;
      }
      Bitset interval = p.up(a) & p.down(b);
      interval.reset(b);
      long long sum = 0;
      for (auto z = interval.find_first(); z != Bitset::npos; z = interval.find_next(z)) sum += m[z];
      m[b] = -sum;
    }
  });
  return mu;
}

std::vector<int> join_irreducibles(const FinitePoset& p) {
  std::vector<int> out;
  for (int a = 0; a < p.size(); ++a)
    if (p.lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

std::vector<int> meet_irreducibles(const FinitePoset& p) {
  std::vector<int> out;
  for (int a = 0; a < p.size(); ++a)
    if (p.upper_covers(a).size() == 1) out.push_back(a);
  return out;
}

SemidistributiveCheck check_semidistributive(const LatticeTables& t) {
  int n = t.size();
  std::vector<SemidistributiveCheck> per_row(n);
  parallel_for(n, [&](std::size_t row) {
    int x = static_cast<int>(row);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = t.meet(x, y);
        if (xy == t.meet(x, z) && t.meet(x, t.join(y, z)) != xy) {
          per_row[x] = {false, true, x, y, z};
          return;
        }
        int jy = t.join(x, y);
        if (jy == t.join(x, z) && t.join(x, t.meet(y, z)) != jy) {
          per_row[x] = {false, false, x, y, z};
          return;
        }
      }
  });
  for (const auto& c : per_row)
    if (!c.ok) return c;
  return {};
}

SemidistributiveCheck check_semidistributive(const FinitePoset& p) {
  if (!is_lattice(p).ok) throw InvalidInput("semidistributivity needs a lattice");
  return check_semidistributive(LatticeTables(p));
}

}  // namespace tubelat
