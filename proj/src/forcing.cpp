#include "tubelat/forcing.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tubelat/error.hpp"

namespace tubelat {

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (auto b = rows_[a].find_first(); b != Bitset::npos; b = rows_[a].find_next(b))
      out.emplace_back(a, static_cast<int>(b));
  return out;
}

Relation Relation::reflexive_closure() const {
  Relation out = *this;
  for (int a = 0; a < size(); ++a) out.set(a, a);
  return out;
}

Relation multiply(const Relation& onto, const Relation& into) {
  Relation a = onto.reflexive_closure(), b = into.reflexive_closure();
  int n = a.size();
  Relation out(n);
  for (int x = 0; x < n; ++x) {
    Bitset row(n);
    for (auto y = a.row(x).find_first(); y != Bitset::npos; y = a.row(x).find_next(y)) row |= b.row(static_cast<int>(y));
    for (auto z = row.find_first(); z != Bitset::npos; z = row.find_next(z)) out.set(x, static_cast<int>(z));
  }
  return out;
}

std::pair<Relation, Relation> factorize(const Relation& arrow) {
  int n = arrow.size();
  std::vector<Bitset> column(n, Bitset(n));
  for (auto [x, y] : arrow.pairs()) column[y].set(x);
  Relation onto(n), into(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (arrow.row(y).is_subset_of(arrow.row(x))) onto.set(x, y);
      if (column[x].is_subset_of(column[y])) into.set(x, y);
    }
  return {onto, into};
}

std::optional<std::vector<int>> find_cycle(const Relation& r) {
  int n = r.size();
  std::vector<int> state(n, 0), parent(n, -1);
  for (int start = 0; start < n; ++start) {
    if (state[start]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto w = next == 0 ? r.row(v).find_first() : r.row(v).find_next(next - 1);
      if (w == Bitset::npos) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      next = w + 1;
      int u = static_cast<int>(w);
      if (state[u] == 1) {
        std::vector<int> cycle{u};
        for (int x = v; x != u; x = parent[x]) cycle.push_back(x);
        cycle.push_back(u);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[u] == 0) {
        state[u] = 1;
        parent[u] = v;
        stack.emplace_back(u, 0);
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Relation& r) { return !find_cycle(r); }

namespace {

bool transitive(const Relation& r) {
  for (auto [a, b] : r.pairs())
    if (!r.row(b).is_subset_of(r.row(a) | Bitset(r.size()).set(a))) return false;
  return true;
}

}  // namespace

bool two_acyclic(const Relation& onto, const Relation& into) {
  int n = onto.size();
  if (!transitive(onto) || !transitive(into)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (onto.has(x, y) && onto.has(y, x)) return false;
      if (into.has(x, y) && into.has(y, x)) return false;
      if (onto.has(x, y) && into.has(y, x)) return false;
    }
  return true;
}

ForcingSystem forcing_system(int n) {
  if (n < 3) throw InvalidInput("forcing system needs n >= 3");
  ForcingSystem fs;
  fs.n = n;
  int size = (n - 1) * (n - 1);
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 1; k <= n - 1; ++k) fs.elements.push_back({i, k});
  fs.onto = Relation(size);
  fs.into = Relation(size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      auto [i, k] = fs.elements[a];
      auto [s, t] = fs.elements[b];
      if (s == i && t < k) fs.onto.set(a, b);
      if (chain_permutation(n, i, k) == chain_permutation(n, s, t) &&
          std::pair(i + k, k) < std::pair(s + t, t))
        fs.into.set(a, b);
    }
  fs.to = multiply(fs.onto, fs.into);
  fs.force = force_by_definition(fs.onto, fs.into);
  return fs;
}

Relation force_by_definition(const Relation& onto, const Relation& into) {
  int n = onto.size();
  Relation out(n);
  for (int y = 0; y < n; ++y) {
    std::vector<int> into_y, below_y;
    for (int x = 0; x < n; ++x) {
      if (x != y && into.has(x, y)) into_y.push_back(x);
      if (x != y && onto.has(y, x)) below_y.push_back(x);
    }
    for (int x : into_y) {
      bool minimal = std::none_of(into_y.begin(), into_y.end(), [&](int z) { return z != x && onto.has(x, z); });
      if (minimal) out.set(x, y);
    }
    for (int x : below_y) {
      bool maximal = std::none_of(below_y.begin(), below_y.end(), [&](int z) { return z != x && into.has(x, z); });
      if (maximal) out.set(x, y);
    }
  }
  return out;
}

Relation force_simplified(const Relation& onto, const Relation& into) {
  int n = onto.size();
  Relation out(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && (onto.has(y, x) || into.has(x, y))) out.set(x, y);
  return out;
}

bool check_congruence_uniform(int n) { return is_acyclic(forcing_system(n).force); }

PairsLattice pairs_lattice(const Relation& arrow) {
  int n = arrow.size();
  if (n > kPairsMaxGenerators)
    throw CapExceeded("maximal orthogonal pairs are capped at " + std::to_string(kPairsMaxGenerators) + " generators");
  std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
  std::vector<std::uint32_t> out_of(n, 0), into_of(n, 0);
  for (auto [x, y] : arrow.pairs()) {
    out_of[x] |= 1U << y;
    into_of[y] |= 1U << x;
  }
  std::vector<std::uint32_t> sets;
  std::function<void(int, std::uint32_t, std::uint32_t)> rec = [&](int idx, std::uint32_t x, std::uint32_t reach) {
    if (idx == n) {
      std::uint32_t perp = all & ~reach;
      std::uint32_t hit = 0;
      for (std::uint32_t y = perp; y; y &= y - 1) hit |= into_of[std::countr_zero(y)];
      if ((all & ~hit) == x) sets.push_back(x);
      return;
    }
    rec(idx + 1, x, reach);
    rec(idx + 1, x | (1U << idx), reach | out_of[idx]);
  };
  rec(0, 0, 0);
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> labels;
  for (std::uint32_t s : sets) {
    std::string label = "[";
    for (std::uint32_t r = s; r; r &= r - 1) {
      if (label.size() > 1) label += ',';
      label += std::to_string(std::countr_zero(r));
    }
    labels.push_back(label + "]");
  }
  FinitePoset poset = poset_from_order(std::move(labels), [&sets](int a, int b) {
    return sets[a] != sets[b] && (sets[a] & sets[b]) == sets[a];
  });
  return PairsLattice{std::move(sets), std::move(poset)};
}

PairsLattice pairs_lattice(int n) { return pairs_lattice(forcing_system(n).to); }

}  // namespace tubelat
