#include "tubelat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "tubelat/cycle_lattice.hpp"
#include "tubelat/error.hpp"
#include "tubelat/forcing.hpp"
#include "tubelat/irreducibles.hpp"
#include "tubelat/parallel.hpp"
#include "tubelat/poset.hpp"

namespace tubelat {

namespace {

const std::map<std::string, int, std::less<>> kCaps = {
    {"all", 6},    {"lattice", 6},  {"order", 6},   {"quotient", 6}, {"sdl", 6},   {"cu", 12},
    {"mobius", 6}, {"ji", 12},      {"selfdual", 7}, {"regular", 7}, {"pairs", 6},
};

// Smallest failing index, so the reported counterexample does not depend on scheduling.
std::optional<std::size_t> first_failure(std::size_t count, const std::function<bool(std::size_t)>& check) {
  std::atomic<std::size_t> best{count};
  parallel_for(count, [&](std::size_t i) {
    if (i >= best.load()) return;
    bool good = false;
    try {
      good = check(i);
    } catch (const std::exception&) {
      good = false;
    }
    if (good) return;
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  });
  if (best.load() == count) return std::nullopt;
  return best.load();
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Json ji_json(const JiIndex& j) { return Json::array({j.i, j.k}); }

class Suite {
 public:
  explicit Suite(int n) : n_(n), graph_(make_graph(GraphKind::cycle, n)) {}

  VerifyResult run(std::string_view selector) {
    if (selector == "all") {
      structure();
      for (const std::string& s : verify_selectors())
        if (s != "all" && !failed()) dispatch(s);
    } else {
      dispatch(selector);
    }
    return std::move(result_);
  }

 private:
  int n_;
  Graph graph_;
  std::optional<TubingPoset> poset_;
  std::optional<LatticeTables> tables_;
  VerifyResult result_;

  void dispatch(std::string_view selector) {
    if (selector == "lattice") lattice();
    else if (selector == "order") order();
    else if (selector == "quotient") quotient();
    else if (selector == "sdl") sdl();
    else if (selector == "cu") cu();
    else if (selector == "mobius") mobius_values();
    else if (selector == "ji") ji();
    else if (selector == "selfdual") selfdual();
    else if (selector == "regular") regular();
    else if (selector == "pairs") pairs();
  }

  const TubingPoset& tp() {
    if (!poset_) poset_.emplace(build_poset(graph_));
    return *poset_;
  }
  const LatticeTables& tables() {
    if (!tables_) tables_.emplace(tp().poset);
    return *tables_;
  }
  int size() { return tp().poset.size(); }
  const Tubing& at(int a) { return tp().tubings[a]; }

  bool failed() const { return !result_.ok; }
  void note(std::string line) { result_.report.push_back(std::move(line)); }
  void fail(const std::string& property, Json detail) {
    result_.ok = false;
    Json j;
    j["property"] = property;
    j["n"] = n_;
    for (auto it = detail.begin(); it != detail.end(); ++it) j[it.key()] = it.value();
    result_.counterexample = j;
  }
  std::string prefix() const { return "n=" + std::to_string(n_) + ": "; }

  // Runs check on all ordered pairs; returns false after recording a failure.
  bool all_pairs(const std::string& property, const std::function<bool(int, int)>& check) {
    auto n = static_cast<std::size_t>(size());
    auto bad = first_failure(n * n, [&](std::size_t p) { return check(static_cast<int>(p / n), static_cast<int>(p % n)); });
    if (!bad) return true;
    int a = static_cast<int>(*bad / n), b = static_cast<int>(*bad % n);
    fail(property, {{"a", tubing_to_json(at(a))}, {"b", tubing_to_json(at(b))}});
    return false;
  }

  bool all_elements(const std::string& property, const std::function<bool(int)>& check) {
    auto bad = first_failure(size(), [&](std::size_t a) { return check(static_cast<int>(a)); });
    if (!bad) return true;
    fail(property, {{"a", tubing_to_json(at(static_cast<int>(*bad)))}});
    return false;
  }

  void lattice() {
    LatticeCheck lc = is_lattice(tp().poset);
    if (!lc.ok) {
      Json minimal = Json::array();
      for (int m : lc.minimal) minimal.push_back(tubing_to_json(at(m)));
      fail(lc.join_failed ? "unique join" : "unique meet",
           {{"a", tubing_to_json(at(lc.a))}, {"b", tubing_to_json(at(lc.b))}, {"minimal", minimal}});
      return;
    }
    if (!all_pairs("join_cycle", [&](int a, int b) { return join_cycle(at(a), at(b)) == at(tables().join(a, b)); }))
      return;
    if (!all_pairs("meet_cycle", [&](int a, int b) { return meet_cycle(at(a), at(b)) == at(tables().meet(a, b)); }))
      return;
    note(prefix() + std::to_string(size()) + " elements form a lattice; join_cycle and meet_cycle agree on " +
         std::to_string(size() * size()) + " pairs");
  }

  void order() {
    if (!all_pairs("leq_cycle", [&](int a, int b) { return leq_cycle(at(a), at(b)) == tp().poset.leq(a, b); })) return;
    if (!all_pairs("cut preserves order",
                   [&](int a, int b) { return !tp().poset.leq(a, b) || leq_path(cut(at(a)), cut(at(b))); }))
      return;
    note(prefix() + "inversion test equals the flip closure on " + std::to_string(size() * size()) + " pairs");
  }

  void quotient() {
    if (!all_pairs("cut of join", [&](int a, int b) {
          return cut(at(tables().join(a, b))) == join_path(cut(at(a)), cut(at(b))) &&
                 cut(at(tables().meet(a, b))) == meet_path(cut(at(a)), cut(at(b)));
        }))
      return;
    auto bases = enumerate_maximal_tubings(make_graph(GraphKind::path, n_));
    std::vector<std::size_t> sizes(bases.size());
    auto bad = first_failure(bases.size(), [&](std::size_t i) {
      const Tubing& x = bases[i];
      Zippers z = zippers(gtree_of(x));
      auto words = shuffle_words(x);
      sizes[i] = words.size();
      if (words.size() != binomial(static_cast<int>(z.left.size() + z.right.size()), static_cast<int>(z.left.size())))
        return false;
      for (const ShuffleWord& w : words) {
        Tubing j = sew(x, w);
        if (!(cut(j) == x) || !(word_of(j) == w)) return false;
      }
      return true;
    });
    if (bad) {
      fail("fiber", {{"base", tubing_to_json(bases[*bad])}});
      return;
    }
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    if (total != static_cast<std::size_t>(size())) {
      fail("fiber sizes", {{"sum", total}, {"elements", size()}});
      return;
    }
    note(prefix() + "cut is a lattice quotient; " + std::to_string(bases.size()) + " fibers sum to " +
         std::to_string(total));
  }

  void sdl() {
    SemidistributiveCheck c = check_semidistributive(tables());
    if (!c.ok) {
      fail(c.meet_law ? "meet semidistributive" : "join semidistributive",
           {{"x", tubing_to_json(at(c.x))}, {"y", tubing_to_json(at(c.y))}, {"z", tubing_to_json(at(c.z))}});
      return;
    }
    note(prefix() + "semidistributive over " + std::to_string(std::uint64_t(size()) * size() * size()) + " triples");
  }

  void cu() {
    ForcingSystem fs = forcing_system(n_);
    auto pair_list = [&](const Relation& r) {
      Json arr = Json::array();
      for (auto [a, b] : r.pairs()) arr.push_back({ji_json(fs.elements[a]), ji_json(fs.elements[b])});
      return arr;
    };
    if (!(multiply(fs.onto, fs.into) == fs.to)) return fail("to = Mult(onto, into)", Json::object());
    auto [onto, into] = factorize(fs.to);
    if (!(onto == fs.onto.reflexive_closure()) || !(into == fs.into.reflexive_closure()))
      return fail("Fact(to) = (onto, into)", Json::object());
    if (!two_acyclic(fs.onto, fs.into)) return fail("two-acyclic", Json::object());
    Relation simple = force_simplified(fs.onto, fs.into);
    if (!(simple == fs.force))
      return fail("forcing simplification", {{"definition", pair_list(fs.force)}, {"simplified", pair_list(simple)}});
    for (auto [a, b] : fs.force.pairs()) {
      auto [i, k] = fs.elements[a];
      auto [s, t] = fs.elements[b];
      if (!(std::pair(i + k, k) < std::pair(s + t, t)))
        return fail("forcing increases (i+k,k)", {{"from", ji_json(fs.elements[a])}, {"to", ji_json(fs.elements[b])}});
    }
    if (auto cycle = find_cycle(fs.force)) {
      Json arr = Json::array();
      for (int v : *cycle) arr.push_back(ji_json(fs.elements[v]));
      return fail("forcing acyclic", {{"cycle", arr}});
    }
    note(prefix() + "direct forcing on " + std::to_string(fs.elements.size()) + " join irreducibles has " +
         std::to_string(fs.force.count()) + " edges and no cycle");
  }

  void mobius_values() {
    auto mu = mobius(tp().poset);
    std::size_t nonzero = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        if (mu[a][b] < -1 || mu[a][b] > 1)
          return fail("mobius in {-1,0,1}",
                      {{"a", tubing_to_json(at(a))}, {"b", tubing_to_json(at(b))}, {"mu", mu[a][b]}});
        if (mu[a][b]) ++nonzero;
      }
    note(prefix() + "Mobius function takes values in {-1,0,1}; " + std::to_string(nonzero) + " nonzero entries");
  }

  std::vector<std::vector<Mask>> canonical_set() {
    std::vector<std::vector<Mask>> out;
    for (int i = 1; i < n_; ++i)
      for (int k = 1; k < n_; ++k) out.push_back(ji_tubing(n_, i, k).down_sets());
    std::sort(out.begin(), out.end());
    return out;
  }

  void ji() {
    if (n_ <= 7) return ji_poset();
    // Too many elements for a poset: stream the trees and count single lower covers.
    std::vector<std::vector<Mask>> found;
    for_each_cycle_tree(n_, [&](const GTree& tree) {
      Tubing t = tubing_of(graph_, tree);
      int lower = 0;
      for (Mask x : t.tubes()) {
        if (x == full_mask(n_)) continue;
        Flip f = flip(t, x);
        if (f.tubing.top(f.added) < t.top(x)) ++lower;
      }
      if (lower == 1) found.push_back(t.down_sets());
    });
    std::sort(found.begin(), found.end());
    if (found != canonical_set())
      return fail("join irreducibles are the canonical trees", {{"found", found.size()}});
    note(prefix() + std::to_string(found.size()) + " join irreducibles, all canonical");
  }

  void ji_poset() {
    const FinitePoset& p = tp().poset;
    auto ji = join_irreducibles(p);
    std::vector<std::vector<Mask>> found;
    for (int j : ji) found.push_back(at(j).down_sets());
    std::sort(found.begin(), found.end());
    if (found != canonical_set()) return fail("join irreducibles are the canonical trees", {{"found", ji.size()}});
    for (int i = 1; i < n_; ++i)
      for (int k = 1; k < n_; ++k) {
        int a = tp().index_of(ji_tubing(n_, i, k));
        for (int s = 1; s < n_; ++s)
          for (int t = 1; t < n_; ++t)
            if (p.leq(a, tp().index_of(ji_tubing(n_, s, t))) != (s == i && k <= t))
              return fail("disjoint saturated chains", {{"a", ji_json({i, k})}, {"b", ji_json({s, t})}});
        if (k + 1 < n_) {
          const auto& up = p.upper_covers(a);
          if (std::find(up.begin(), up.end(), tp().index_of(ji_tubing(n_, i, k + 1))) == up.end())
            return fail("saturated chain", {{"a", ji_json({i, k})}});
        }
        MiIndex m = kappa(n_, i, k);
        auto brute = kappa_brute(p, tables(), a);
        if (!brute || *brute != tp().index_of(mi_tubing(n_, m.i, m.k)))
          return fail("kappa", {{"j", ji_json({i, k})}, {"formula", Json::array({m.i, m.k})}});
      }
    note(prefix() + std::to_string(ji.size()) + " join irreducibles, all canonical, in " + std::to_string(n_ - 1) +
         " disjoint saturated chains; kappa formula confirmed");
  }

  void selfdual() {
    std::vector<int> image(size());
    if (!all_elements("w0 involution", [&](int a) {
          Tubing w = relabel_reverse(at(a));
          image[a] = tp().index_of(w);
          return relabel_reverse(w) == at(a);
        }))
      return;
    if (!all_pairs("w0 reverses order",
                   [&](int a, int b) { return tp().poset.leq(a, b) == tp().poset.leq(image[b], image[a]); }))
      return;
    note(prefix() + "w0 is an order-reversing involution on " + std::to_string(size()) + " elements");
  }

  void regular() {
    const FinitePoset& p = tp().poset;
    if (!all_elements("Hasse degree n-1", [&](int a) {
          return static_cast<int>(p.upper_covers(a).size() + p.lower_covers(a).size()) == n_ - 1;
        }))
      return;
    note(prefix() + "Hasse diagram is " + std::to_string(n_ - 1) + "-regular on " + std::to_string(size()) +
         " elements");
  }

  void pairs() {
    PairsLattice pl = pairs_lattice(n_);
    if (pl.sets.size() != static_cast<std::size_t>(size()))
      return fail("Pairs size", {{"pairs", pl.sets.size()}, {"elements", size()}});
    ForcingSystem fs = forcing_system(n_);
    std::vector<int> ji_at;
    for (const JiIndex& e : fs.elements) ji_at.push_back(tp().index_of(ji_tubing(n_, e.i, e.k)));
    std::vector<int> match(size());
    for (int t = 0; t < size(); ++t) {
      std::uint32_t label = 0;
      for (std::size_t a = 0; a < ji_at.size(); ++a)
        if (tp().poset.leq(ji_at[a], t)) label |= 1U << a;
      auto it = std::find(pl.sets.begin(), pl.sets.end(), label);
      if (it == pl.sets.end()) return fail("Pairs labeling", {{"a", tubing_to_json(at(t))}});
      match[t] = static_cast<int>(it - pl.sets.begin());
    }
    if (!all_pairs("Pairs isomorphism",
                   [&](int a, int b) { return tp().poset.leq(a, b) == pl.poset.leq(match[a], match[b]); }))
      return;
    note(prefix() + "Pairs(->) has " + std::to_string(pl.sets.size()) + " elements and matches the lattice");
  }

  // Per-element structure checks that touch the graph and tree operations.
  void structure() {
    TreeShape cyc = TreeShape::cycle_cbt;
    if (!all_elements("tree structure", [&](int a) {
          const Tubing& t = at(a);
          GTree tree = gtree_of(t);
          if (!validate(tree, cyc) || !(tubing_of(graph_, tree) == t)) return false;
          for (Mask tube : t.tubes())
            if (!is_tube(graph_, tube)) return false;
          for (int v = 1; v <= n_; ++v) {
            if (!tree.parent(v)) continue;
            Flip f = flip(t, t.down(v));
            if (!(tubing_of(graph_, tree_move(tree, v, cyc)) == f.tubing)) return false;
            if (!covers(t, f.tubing) && !covers(f.tubing, t)) return false;
          }
          PairStats st = pair_statistics(tree);
          if (!(st.inv == inversions(t)) || !(st.coinv == coinversions(t))) return false;
          if (st.inv.size() + st.coinv.size() + st.inc.size() != n_ * (n_ - 1) / 2)
            return false;
          Tubing x = cut(t);
          if (!(lower_lift(t, x) == t) || !(lift(t, x) == t)) return false;
          return true;
        }))
      return;
    if (!all_pairs("lift", [&](int a, int b) {
          Tubing x = cut(at(a)), y = cut(at(b));
          if (!leq_path(x, y)) return true;
          Tubing up = lift(at(a), y);
          return cut(up) == y && leq_cycle(at(a), up);
        }))
      return;
    note(prefix() + "tree round trips, tree moves, pair statistics and lifts agree on " + std::to_string(size()) +
         " elements");
  }
};

}  // namespace

const std::vector<std::string>& verify_selectors() {
  static const std::vector<std::string> names = {"all",    "lattice", "order", "quotient", "sdl",  "cu",
                                                 "mobius", "ji",      "selfdual", "regular", "pairs"};
  return names;
}

int verify_cap(std::string_view selector) {
  auto it = kCaps.find(selector);
  if (it == kCaps.end()) throw InvalidInput("unknown selector: " + std::string(selector));
  return it->second;
}

VerifyResult run_verify(std::string_view selector, int n, bool force) {
  int cap = verify_cap(selector);
  if (n < 3) throw InvalidInput("verification runs on the cycle graph, which needs n >= 3");
  if (n > cap && !force)
    throw CapExceeded("verify " + std::string(selector) + " is capped at n = " + std::to_string(cap) +
                      "; pass --force to override");
  return Suite(n).run(selector);
}

}  // namespace tubelat
