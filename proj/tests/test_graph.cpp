#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles.hpp"
#include "tubelat/error.hpp"
#include "tubelat/tubing.hpp"

using namespace tubelat;

namespace {

Mask M(std::initializer_list<int> v) { return mask_of(std::vector<int>(v)); }

Tubing T(const Graph& g, std::initializer_list<std::initializer_list<int>> tubes) {
  std::vector<Mask> masks;
  for (auto t : tubes) masks.push_back(M(t));
  return Tubing(g, masks);
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n) out.push_back(make_graph(GraphKind::path, n));
  for (int n = 3; n <= 6; ++n) out.push_back(make_graph(GraphKind::cycle, n));
  for (int n = 1; n <= 5; ++n) out.push_back(make_graph(GraphKind::complete, n));
  out.push_back(Graph::from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}));
  out.push_back(Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 4 + trial % 3;
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 4 == 0) edges.emplace_back(u, v);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

}  // namespace

TEST_CASE("make_graph builds the standard families") {
  auto p3 = make_graph(GraphKind::path, 3);
  CHECK(p3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  auto c4 = make_graph(GraphKind::cycle, 4);
  CHECK(c4.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  auto k3 = make_graph(GraphKind::complete, 3);
  CHECK(k3.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(make_graph(GraphKind::cycle, 2), InvalidInput);
  CHECK_THROWS_AS(make_graph(GraphKind::path, 0), InvalidInput);
  CHECK_THROWS_AS(make_graph(GraphKind::path, 64), InvalidInput);
}

TEST_CASE("is_tube") {
  CHECK(is_tube(make_graph(GraphKind::cycle, 9), M({1, 2, 8, 9})));
  CHECK_FALSE(is_tube(make_graph(GraphKind::path, 4), M({1, 3})));
  CHECK(is_tube(make_graph(GraphKind::cycle, 4), M({1, 2, 3, 4})));
  CHECK_THROWS_AS(is_tube(make_graph(GraphKind::path, 4), 0), InvalidInput);
  CHECK_THROWS_AS(is_tube(make_graph(GraphKind::path, 4), M({5})), InvalidInput);
  for (const Graph& g : small_graphs())
    for (Mask s = 1; s < (Mask{1} << g.n()); ++s) CHECK(is_tube(g, s) == oracle::connected(g, s));
}

TEST_CASE("compatible") {
  auto p3 = make_graph(GraphKind::path, 3);
  CHECK(compatible(p3, M({1}), M({3})));
  CHECK(compatible(p3, M({2}), M({2, 3})));
  CHECK_FALSE(compatible(p3, M({2}), M({3})));
  CHECK_THROWS_AS(compatible(p3, M({1, 3}), M({2})), InvalidInput);
}

TEST_CASE("is_maximal_tubing") {
  auto p3 = make_graph(GraphKind::path, 3);
  CHECK(is_maximal_tubing(p3, {M({3}), M({2, 3}), M({1, 2, 3})}));
  CHECK_FALSE(is_maximal_tubing(p3, {M({2, 3}), M({1, 2, 3})}));
  CHECK(is_maximal_tubing(make_graph(GraphKind::cycle, 4), {M({3}), M({2, 3}), M({1, 2, 3}), M({1, 2, 3, 4})}));
  // n tubes but not compatible
  CHECK_FALSE(is_maximal_tubing(p3, {M({2}), M({3}), M({1, 2, 3})}));
  CHECK_THROWS_AS(Tubing(p3, {M({2, 3}), M({1, 2, 3})}), InvalidInput);
}

TEST_CASE("top") {
  auto p3 = make_graph(GraphKind::path, 3);
  CHECK(top(T(p3, {{3}, {2, 3}, {1, 2, 3}}), M({2, 3})) == 2);
  auto c4 = make_graph(GraphKind::cycle, 4);
  CHECK(top(minimum_tubing(c4), M({1, 2, 3, 4})) == 4);
  auto c9 = make_graph(GraphKind::cycle, 9);
  Tubing j = T(c9, {{2}, {4}, {6}, {8}, {8, 9}, {1, 2, 8, 9}, {1, 2, 3, 4, 8, 9}, {1, 2, 3, 4, 6, 7, 8, 9},
                    {1, 2, 3, 4, 5, 6, 7, 8, 9}});
  CHECK(top(j, M({1, 2, 8, 9})) == 1);
  CHECK_THROWS_AS(top(j, M({1})), InvalidInput);
}

TEST_CASE("flip examples") {
  auto p3 = make_graph(GraphKind::path, 3);
  Flip f = flip(p3, T(p3, {{3}, {2, 3}, {1, 2, 3}}), M({3}));
  CHECK(f.added == M({2}));
  auto c4 = make_graph(GraphKind::cycle, 4);
  Tubing chain = T(c4, {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
  Flip g = flip(c4, chain, M({1, 2, 3}));
  CHECK(g.added == M({1, 2, 4}));
  CHECK(flip(g.tubing, g.added).tubing == chain);
  CHECK_THROWS_AS(flip(chain, M({1, 2, 3, 4})), InvalidInput);
  CHECK_THROWS_AS(flip(chain, M({2})), InvalidInput);
}

TEST_CASE("structural flip matches the brute-force replacement search") {
  for (const Graph& g : small_graphs()) {
    if (!g.connected()) continue;
    for (const Tubing& t : enumerate_maximal_tubings(g)) {
      for (Mask x : t.tubes()) {
        if (x == g.vertices()) continue;
        auto found = oracle::replacements(g, t.tubes(), x);
        REQUIRE(found.size() == 1);
        Flip f = flip(t, x);
        CHECK(f.added == found.front());
        CHECK(f.removed == x);
        CHECK(f.tubing == Tubing(g, f.tubing.tubes()));
        CHECK(flip(f.tubing, f.added).tubing == t);
      }
    }
  }
}

TEST_CASE("enumeration agrees with exhaustive search of maximal families") {
  for (const Graph& g : small_graphs()) {
    if (g.n() > 5) continue;
    std::set<std::set<Mask>> expected;
    for (auto& s : oracle::maximal_tubings(g)) expected.insert(s);
    std::set<std::set<Mask>> got;
    for (const Tubing& t : enumerate_maximal_tubings(g)) {
      auto tubes = t.tubes();
      got.emplace(tubes.begin(), tubes.end());
    }
    CHECK(got == expected);
    for (auto& s : expected) CHECK(static_cast<int>(s.size()) == g.n());
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_maximal_tubings(make_graph(GraphKind::path, 3)).size() == 5);
  CHECK(enumerate_maximal_tubings(make_graph(GraphKind::cycle, 4)).size() == 20);
  CHECK(enumerate_maximal_tubings(make_graph(GraphKind::complete, 3)).size() == 6);
  CHECK(enumerate_maximal_tubings(make_graph(GraphKind::complete, 4)).size() == 24);
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_maximal_tubings(make_graph(GraphKind::path, n)).size() == oracle::catalan(n));
  for (int n = 3; n <= 7; ++n)
    CHECK(enumerate_maximal_tubings(make_graph(GraphKind::cycle, n)).size() == oracle::binomial(2 * n - 2, n - 1));
  CHECK_THROWS_AS(enumerate_maximal_tubings(make_graph(GraphKind::cycle, 7), 100), CapExceeded);
  CHECK_THROWS_AS(enumerate_maximal_tubings(Graph::from_edges(3, {{1, 2}})), InvalidInput);
}

TEST_CASE("enumeration order is breadth-first and deterministic") {
  auto g = make_graph(GraphKind::cycle, 5);
  auto a = enumerate_maximal_tubings(g);
  auto b = enumerate_maximal_tubings(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(a.front() == minimum_tubing(g));
  CHECK(a.front().serialize() == "[[1],[1,2],[1,2,3],[1,2,3,4],[1,2,3,4,5]]");
}

TEST_CASE("down-set and top invariants") {
  for (const Graph& g : small_graphs()) {
    for (const Tubing& t : enumerate_maximal_tubings(g)) {
      auto tubes = t.tubes();
      std::set<int> tops;
      for (Mask x : tubes) tops.insert(t.top(x));
      CHECK(static_cast<int>(tops.size()) == g.n());
      for (int v = 1; v <= g.n(); ++v) {
        Mask meet = g.vertices();
        for (Mask x : tubes)
          if (has_vertex(x, v)) meet &= x;
        CHECK(meet == t.down(v));
        CHECK(t.contains(meet));
      }
      int flips = 0;
      for (Mask x : tubes)
        if (x != g.vertices()) ++flips;
      CHECK(flips == g.n() - 1);
    }
  }
}

TEST_CASE("covers") {
  auto c4 = make_graph(GraphKind::cycle, 4);
  Tubing chain = T(c4, {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}});
  Tubing up = T(c4, {{1}, {1, 2}, {1, 2, 4}, {1, 2, 3, 4}});
  CHECK(covers(c4, chain, up));
  CHECK_FALSE(covers(c4, up, chain));
  CHECK_FALSE(covers(c4, chain, chain));
  CHECK_FALSE(covers(c4, minimum_tubing(c4), relabel_reverse(minimum_tubing(c4))));
  for (const Graph& g : small_graphs()) {
    auto all = enumerate_maximal_tubings(g);
    for (const Tubing& a : all)
      for (const Tubing& b : all)
        if (covers(a, b)) {
          Mask gone = 0;
          for (Mask x : a.tubes())
            if (!b.contains(x)) gone = x;
          CHECK(flip(a, gone).tubing == b);
        }
  }
}

TEST_CASE("relabel_reverse") {
  for (GraphKind kind : {GraphKind::path, GraphKind::cycle, GraphKind::complete}) {
    for (int n = 3; n <= 5; ++n) {
      auto g = make_graph(kind, n);
      auto all = enumerate_maximal_tubings(g);
      for (const Tubing& t : all) {
        Tubing r = relabel_reverse(t);
        CHECK(r == Tubing(g, r.tubes()));
        CHECK(relabel_reverse(r) == t);
      }
    }
  }
  auto c5 = make_graph(GraphKind::cycle, 5);
  std::vector<Mask> chain_down;
  for (int v = 5; v >= 1; --v) chain_down.push_back(range_mask(v, 5));
  std::reverse(chain_down.begin(), chain_down.end());
  // maximum: n < n-1 < ... < 1, so down(v) = {v..n}
  CHECK(relabel_reverse(minimum_tubing(c5)) == Tubing::from_down_sets(c5, chain_down));
  CHECK_THROWS_AS(relabel_reverse(minimum_tubing(Graph::from_edges(3, {{1, 2}, {1, 3}}))), InvalidInput);
}

TEST_CASE("w0 reverses the flip-closure order of C_4") {
  auto g = make_graph(GraphKind::cycle, 4);
  auto all = enumerate_maximal_tubings(g);
  std::map<std::vector<Mask>, int> idx;
  for (std::size_t i = 0; i < all.size(); ++i) idx[all[i].down_sets()] = static_cast<int>(i);
  std::vector<std::vector<int>> up(all.size());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (covers(all[a], all[b])) up[a].push_back(static_cast<int>(b));
  auto reach = oracle::closure(up);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      int ra = idx.at(relabel_reverse(all[a]).down_sets());
      int rb = idx.at(relabel_reverse(all[b]).down_sets());
      CHECK(reach[a][b] == reach[rb][ra]);
    }
}

TEST_CASE("canonical tube order and serialization") {
  CHECK(tube_less(M({3}), M({2, 3})));
  CHECK(tube_less(M({1, 4}), M({2, 3})));
  CHECK_FALSE(tube_less(M({2, 3}), M({2, 3})));
  auto c4 = make_graph(GraphKind::cycle, 4);
  CHECK(T(c4, {{1, 2, 3, 4}, {2, 3}, {3}, {1, 2, 3}}).serialize() == "[[3],[2,3],[1,2,3],[1,2,3,4]]");
}
