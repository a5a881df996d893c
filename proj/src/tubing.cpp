#include "tubelat/tubing.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <deque>
#include <set>
#include <unordered_set>

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

void check_vertex_set(const Graph& g, Mask s) {
  if (!s) throw InvalidInput("empty vertex set");
  if (s & ~g.vertices()) throw InvalidInput("vertex out of range");
}

std::vector<Mask> down_from_tubes(int n, const std::vector<Mask>& tubes) {
  std::vector<Mask> down(n, full_mask(n));
  for (Mask t : tubes)
    for (Mask r = t; r; r &= r - 1) {
      Mask& d = down[std::countr_zero(r)];
      d &= t;
    }
  return down;
}

}  // namespace

bool is_tube(const Graph& g, Mask s) {
  check_vertex_set(g, s);
  return g.is_connected(s);
}

bool compatible(const Graph& g, Mask a, Mask b) {
  if (!is_tube(g, a) || !is_tube(g, b)) throw InvalidInput("compatibility needs two tubes");
  if ((a & b) == a || (a & b) == b) return true;
  return !g.is_connected(a | b);
}

bool is_maximal_tubing(const Graph& g, const std::vector<Mask>& tubes) {
  std::set<Mask> unique(tubes.begin(), tubes.end());
  if (unique.size() != tubes.size()) return false;
  for (Mask t : tubes)
    if (!is_tube(g, t)) return false;
  for (auto i = unique.begin(); i != unique.end(); ++i)
    for (auto j = std::next(i); j != unique.end(); ++j)
      if (!compatible(g, *i, *j)) return false;
  return g.connected() && unique.count(g.vertices()) == 1 &&
         static_cast<int>(unique.size()) == g.n();
}

bool tube_less(Mask a, Mask b) {
  int sa = size_of(a), sb = size_of(b);
  if (sa != sb) return sa < sb;
  Mask diff = a ^ b;
  if (!diff) return false;
  return (a & diff & (~diff + 1)) != 0;
}

std::string serialize_tube(Mask t) {
  std::string out = "[";
  bool first = true;
  for (int v : vertices_of(t)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

Tubing::Tubing(Graph g, const std::vector<Mask>& tubes) : graph_(std::move(g)) {
  if (!graph_.connected()) throw InvalidInput("tubings need a connected graph");
  for (Mask t : tubes)
    if (!is_tube(graph_, t)) throw InvalidInput("not a tube: " + serialize_tube(t));
  if (!is_maximal_tubing(graph_, tubes)) throw InvalidInput("not a maximal tubing");
  down_ = down_from_tubes(graph_.n(), tubes);
  std::set<Mask> seen(down_.begin(), down_.end());
  if (static_cast<int>(seen.size()) != graph_.n()) throw InvalidInput("tops are not a bijection");
}

Tubing Tubing::from_down_sets(Graph g, std::vector<Mask> down) {
  if (static_cast<int>(down.size()) != g.n()) throw InvalidInput("down-set count mismatch");
  Tubing t;
  t.graph_ = std::move(g);
  t.down_ = std::move(down);
  return t;
}

std::vector<Mask> Tubing::tubes() const {
  std::vector<Mask> out = down_;
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

bool Tubing::contains(Mask tube) const {
  return std::find(down_.begin(), down_.end(), tube) != down_.end();
}

int Tubing::top(Mask tube) const {
  auto it = std::find(down_.begin(), down_.end(), tube);
  if (it == down_.end()) throw InvalidInput("tube not in tubing: " + serialize_tube(tube));
  return static_cast<int>(it - down_.begin()) + 1;
}

int Tubing::parent(int v) const {
  Mask d = down_[v - 1];
  int best = 0;
  for (int u = 1; u <= n(); ++u) {
    Mask e = down_[u - 1];
    if (u != v && (e & d) == d && (best == 0 || size_of(e) < size_of(down_[best - 1]))) best = u;
  }
  return best;
}

int Tubing::root() const { return top(graph_.vertices()); }

std::string Tubing::serialize() const {
  std::string out = "[";
  bool first = true;
  for (Mask t : tubes()) {
    if (!first) out += ',';
    out += serialize_tube(t);
    first = false;
  }
  return out + "]";
}

int top(const Tubing& t, Mask tube) { return t.top(tube); }

Flip flip(const Tubing& t, Mask tube) {
  const Graph& g = t.graph();
  if (tube == g.vertices()) throw InvalidInput("the full tube cannot be flipped");
  int v = t.top(tube);
  int p = t.parent(v);
  Mask replacement = g.component(t.down(p) & ~bit(v), p);
  std::vector<Mask> tubes = t.down_sets();
  tubes[v - 1] = replacement;
  Tubing result = Tubing::from_down_sets(g, down_from_tubes(g.n(), tubes));
  return {std::move(result), tube, replacement};
}

Flip flip(const Graph& g, const Tubing& t, Mask tube) {
  if (!(g == t.graph())) throw InvalidInput("tubing belongs to a different graph");
  return flip(t, tube);
}

bool covers(const Tubing& a, const Tubing& b) {
  if (!(a.graph() == b.graph())) return false;
  Mask only_a = 0, only_b = 0;
  int count_a = 0, count_b = 0;
  for (Mask t : a.down_sets())
    if (!b.contains(t)) {
      only_a = t;
      ++count_a;
    }
  for (Mask t : b.down_sets())
    if (!a.contains(t)) {
      only_b = t;
      ++count_b;
    }
  if (count_a != 1 || count_b != 1) return false;
  return a.top(only_a) < b.top(only_b);
}

bool covers(const Graph& g, const Tubing& a, const Tubing& b) {
  return a.graph() == g && covers(a, b);
}

Tubing relabel_reverse(const Tubing& t) {
  if (!t.graph().reverse_invariant()) throw InvalidInput("graph is not invariant under i -> n+1-i");
  int n = t.n();
  std::vector<Mask> down(n);
  for (int v = 1; v <= n; ++v) down[n - v] = reverse_mask(t.down(v), n);
  return Tubing::from_down_sets(t.graph(), std::move(down));
}

Tubing minimum_tubing(const Graph& g) {
  if (!g.connected()) throw InvalidInput("tubings need a connected graph");
  std::vector<Mask> down(g.n(), 0);
  std::vector<Mask> pending{g.vertices()};
  while (!pending.empty()) {
    Mask s = pending.back();
    pending.pop_back();
    int r = 64 - std::countl_zero(s);
    down[r - 1] = s;
    Mask rest = s & ~bit(r);
    while (rest) {
      Mask c = g.component(rest, lowest_vertex(rest));
      pending.push_back(c);
      rest &= ~c;
    }
  }
  return Tubing::from_down_sets(g, std::move(down));
}

std::size_t DownSetsHash::operator()(const std::vector<Mask>& d) const {
  return boost::hash_range(d.begin(), d.end());
}

std::vector<Tubing> enumerate_maximal_tubings(const Graph& g, std::size_t cap) {
  std::vector<Tubing> out;
  std::unordered_set<std::vector<Mask>, DownSetsHash> seen;
  std::vector<Tubing> level{minimum_tubing(g)};
  seen.insert(level.front().down_sets());
  while (!level.empty()) {
    std::vector<std::pair<std::string, Tubing>> next;
    for (const Tubing& t : level) {
      for (Mask tube : t.down_sets()) {
        if (tube == g.vertices()) continue;
        Flip f = flip(t, tube);
        if (seen.insert(f.tubing.down_sets()).second) {
          if (seen.size() > cap) throw CapExceeded("enumeration exceeds cap of " + std::to_string(cap));
          next.emplace_back(f.tubing.serialize(), std::move(f.tubing));
        }
      }
      out.push_back(t);
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, t] : next) level.push_back(std::move(t));
  }
  return out;
}

}  // namespace tubelat
