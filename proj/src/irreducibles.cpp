#include "tubelat/irreducibles.hpp"

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

void check_indices(int n, int i, int k) {
  if (n < 3) throw InvalidInput("cycle graph needs n >= 3");
  if (i < 1 || i > n - 1 || k < 1 || k > n - 1) throw InvalidInput("index out of range 1..n-1");
}

}  // namespace

GTree canonical_ji(int n, int i, int k) {
  check_indices(n, i, k);
  std::vector<int> parent(n + 1, 0);
  if (i + k <= n - 1) {
    // n > n-1 > ... > i+k+1 > i; below i: i+k > ... > i+1 and i-1 > ... > 1
    for (int v = i + k + 1; v <= n - 1; ++v) parent[v] = v + 1;
    parent[i] = i + k + 1;
    parent[i + k] = i;
    for (int v = i + 1; v < i + k; ++v) parent[v] = v + 1;
    if (i > 1) parent[i - 1] = i;
    for (int v = 1; v < i - 1; ++v) parent[v] = v + 1;
  } else {
    // i > i-1 > ... > n-k > n; below n: n-1 > ... > i+1 and n-k-1 > ... > 1
    for (int v = n - k; v <= i - 1; ++v) parent[v] = v + 1;
    parent[n] = (n - k <= i - 1) ? n - k : i;
    if (i + 1 <= n - 1) parent[n - 1] = n;
    for (int v = i + 1; v < n - 1; ++v) parent[v] = v + 1;
    if (n - k - 1 >= 1) parent[n - k - 1] = n;
    for (int v = 1; v < n - k - 1; ++v) parent[v] = v + 1;
  }
  return GTree(n, std::move(parent));
}

Tubing ji_tubing(int n, int i, int k) {
  return tubing_of(make_graph(GraphKind::cycle, n), canonical_ji(n, i, k));
}

Tubing mi_tubing(int n, int i, int k) {
  check_indices(n, i, k);
  return relabel_reverse(ji_tubing(n, i, n - k));
}

PairSet ji_inversions_formula(int n, int i, int k) {
  check_indices(n, i, k);
  PairSet s(n);
  if (i <= n - k) {
    for (int j = i + 1; j <= i + k; ++j) s.insert(i, j);
  } else {
    for (int a = n - k; a <= i; ++a)
      for (int b = i + 1; b <= n; ++b) s.insert(a, b);
  }
  return s;
}

PairSet mi_coinversions_formula(int n, int i, int k) {
  check_indices(n, i, k);
  PairSet s(n);
  if (i <= k) {
    for (int a = k - i + 1; a <= n - i; ++a) s.insert(a, n - i + 1);
  } else {
    for (int a = 1; a <= n - i; ++a)
      for (int b = n - i + 1; b <= n - k + 1; ++b) s.insert(a, b);
  }
  return s;
}

int chain_permutation(int n, int i, int k) {
  check_indices(n, i, k);
  return k <= n - i ? n - i + 1 - k : k;
}

MiIndex kappa(int n, int i, int k) {
  check_indices(n, i, k);
  if (i + k <= n) return {n + 1 - i - k, n - k};
  return {k, n - i};
}

std::optional<int> kappa_brute(const FinitePoset& p, const LatticeTables& t, int j) {
  if (p.lower_covers(j).size() != 1) throw InvalidInput("element is not join irreducible");
  int lower = p.lower_covers(j).front();
  std::vector<int> hits;
  for (int a = 0; a < p.size(); ++a)
    if (t.meet(a, j) == lower) hits.push_back(a);
  for (int u : hits) {
    bool above_all = true;
    for (int s : hits)
      if (!p.leq(s, u)) {
        above_all = false;
        break;
      }
    if (above_all) return u;
  }
  return std::nullopt;
}

}  // namespace tubelat
