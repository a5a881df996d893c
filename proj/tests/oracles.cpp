#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace oracle {

bool connected(const Graph& g, Mask s) {
  std::vector<int> verts;
  for (int v = 1; v <= g.n(); ++v)
    if ((s >> (v - 1)) & 1) verts.push_back(v);
  if (verts.empty()) return false;
  auto edges = g.edges();
  std::set<int> reached{verts.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : edges) {
      bool in_u = (s >> (u - 1)) & 1, in_v = (s >> (v - 1)) & 1;
      if (!in_u || !in_v) continue;
      if (reached.count(u) != reached.count(v)) {
        reached.insert(u);
        reached.insert(v);
        grew = true;
      }
    }
  }
  return reached.size() == verts.size();
}

std::vector<Mask> all_tubes(const Graph& g) {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << g.n()); ++s)
    if (connected(g, s)) out.push_back(s);
  return out;
}

bool brute_compatible(const Graph& g, Mask a, Mask b) {
  if ((a & b) == a || (a & b) == b) return true;
  return !connected(g, a | b);
}

std::vector<Mask> replacements(const Graph& g, const std::vector<Mask>& tubes, Mask x) {
  std::vector<Mask> out;
  for (Mask y : all_tubes(g)) {
    if (y == x) continue;
    bool ok = true;
    for (Mask t : tubes) {
      if (t == x) continue;
      if (t == y || !brute_compatible(g, t, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return out;
}

std::vector<std::set<Mask>> maximal_tubings(const Graph& g) {
  std::vector<Mask> tubes = all_tubes(g);
  std::vector<std::set<Mask>> out;
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == tubes.size()) {
      for (Mask t : tubes) {
        bool in = false, fits = true;
        for (Mask c : chosen) {
          if (c == t) in = true;
          if (!brute_compatible(g, c, t)) fits = false;
        }
        if (!in && fits) return;
      }
      out.emplace_back(chosen.begin(), chosen.end());
      return;
    }
    Mask t = tubes[idx];
    bool fits = true;
    for (Mask c : chosen)
      if (!brute_compatible(g, c, t)) fits = false;
    if (fits) {
      chosen.push_back(t);
      rec(idx + 1);
      chosen.pop_back();
    }
    rec(idx + 1);
  };
  rec(0);
  return out;
}

std::vector<std::vector<bool>> closure(const std::vector<std::vector<int>>& out_edges) {
  std::size_t n = out_edges.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> stack{static_cast<int>(s)};
    reach[s][s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : out_edges[v])
        if (!reach[s][w]) {
          reach[s][w] = true;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

ClosureOrder::ClosureOrder(const Graph& g) : elements(tubelat::enumerate_maximal_tubings(g)) {
  std::size_t n = elements.size();
  up_covers.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (tubelat::covers(elements[a], elements[b])) up_covers[a].push_back(static_cast<int>(b));
  reach = closure(up_covers);
  for (std::size_t a = 0; a < n; ++a) keys.emplace_back(elements[a].down_sets(), static_cast<int>(a));
  std::sort(keys.begin(), keys.end());
}

int ClosureOrder::index_of(const tubelat::Tubing& t) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(t.down_sets(), -1));
  if (it == keys.end() || it->first != t.down_sets()) throw std::runtime_error("unknown tubing");
  return it->second;
}

std::optional<int> ClosureOrder::join(int a, int b) const {
  int n = static_cast<int>(elements.size());
  std::vector<int> minimal;
  for (int u = 0; u < n; ++u) {
    if (!reach[a][u] || !reach[b][u]) continue;
    bool is_min = true;
    for (int v = 0; v < n; ++v)
      if (v != u && reach[a][v] && reach[b][v] && reach[v][u]) is_min = false;
    if (is_min) minimal.push_back(u);
  }
  if (minimal.size() != 1) return std::nullopt;
  return minimal.front();
}

std::optional<int> ClosureOrder::meet(int a, int b) const {
  int n = static_cast<int>(elements.size());
  std::vector<int> maximal;
  for (int u = 0; u < n; ++u) {
    if (!reach[u][a] || !reach[u][b]) continue;
    bool is_max = true;
    for (int v = 0; v < n; ++v)
      if (v != u && reach[v][a] && reach[v][b] && reach[u][v]) is_max = false;
    if (is_max) maximal.push_back(u);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal.front();
}

namespace {

bool extend(const Matrix& a, const Matrix& b, std::vector<int>& map, std::vector<bool>& used, int next,
            const std::vector<std::pair<int, int>>& sig_a, const std::vector<std::pair<int, int>>& sig_b) {
  int n = static_cast<int>(a.size());
  if (next == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c] || sig_a[next] != sig_b[c]) continue;
    bool ok = true;
    for (int p = 0; p < next && ok; ++p)
      ok = a[p][next] == b[map[p]][c] && a[next][p] == b[c][map[p]];
    if (!ok) continue;
    map[next] = c;
    used[c] = true;
    if (extend(a, b, map, used, next + 1, sig_a, sig_b)) return true;
    used[c] = false;
  }
  return false;
}

std::vector<std::pair<int, int>> signature(const Matrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> sig(n, {0, 0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m[x][y]) {
        ++sig[x].first;
        ++sig[y].second;
      }
  return sig;
}

}  // namespace

bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  auto sa = signature(a), sb = signature(b);
  auto ca = sa, cb = sb;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return extend(a, b, map, used, 0, sa, sb);
}

std::optional<int> lub(const Matrix& leq, int a, int b) {
  int n = static_cast<int>(leq.size());
  std::vector<int> upper;
  for (int c = 0; c < n; ++c)
    if (leq[a][c] && leq[b][c]) upper.push_back(c);
  for (int c : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int d) { return leq[c][d]; })) return c;
  return std::nullopt;
}

std::optional<int> glb(const Matrix& leq, int a, int b) {
  int n = static_cast<int>(leq.size());
  std::vector<int> lower;
  for (int c = 0; c < n; ++c)
    if (leq[c][a] && leq[c][b]) lower.push_back(c);
  for (int c : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](int d) { return leq[d][c]; })) return c;
  return std::nullopt;
}

std::vector<std::vector<long long>> mobius_right(const Matrix& leq) {
  int n = static_cast<int>(leq.size());
  std::vector<std::vector<long long>> mu(n, std::vector<long long>(n, 0));
  // process a in order of decreasing up-set size so every z above a is done first
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto up = [&](int x) { return std::count(leq[x].begin(), leq[x].end(), true); };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return up(x) < up(y); });
  for (int a : order)
    for (int b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      if (a == b) {
        mu[a][b] = 1;
        continue;
      }
      long long s = 0;
      for (int z = 0; z < n; ++z)
        if (z != a && leq[a][z] && leq[z][b]) s += mu[z][b];
      mu[a][b] = -s;
    }
  return mu;
}

BoundTables::BoundTables(const Matrix& leq) : size(leq.size()) {
  int n = static_cast<int>(size);
  std::vector<int> below(n, 0), above(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        ++above[x];
        ++below[y];
      }
  join.assign(size * size, -1);
  meet.assign(size * size, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (leq[a][c] && leq[b][c] && (best < 0 || below[c] < below[best])) best = c;
      bool ok = best >= 0;
      for (int c = 0; c < n && ok; ++c)
        if (leq[a][c] && leq[b][c] && !leq[best][c]) ok = false;
      if (ok) join[a * size + b] = best;
      best = -1;
      for (int c = 0; c < n; ++c)
        if (leq[c][a] && leq[c][b] && (best < 0 || above[c] < above[best])) best = c;
      ok = best >= 0;
      for (int c = 0; c < n && ok; ++c)
        if (leq[c][a] && leq[c][b] && !leq[c][best]) ok = false;
      if (ok) meet[a * size + b] = best;
    }
}

bool BoundTables::lattice() const {
  return std::none_of(join.begin(), join.end(), [](int v) { return v < 0; }) &&
         std::none_of(meet.begin(), meet.end(), [](int v) { return v < 0; });
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::string fixture_path(const std::string& name) { return std::string(TUBELAT_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace oracle
