#pragma once

// Brute-force reference implementations used only by the tests. They work
// from edge lists and explicit searches, sharing no logic with the library.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubelat/tubing.hpp"

namespace oracle {

using tubelat::Graph;
using tubelat::Mask;

bool connected(const Graph& g, Mask s);
std::vector<Mask> all_tubes(const Graph& g);
bool brute_compatible(const Graph& g, Mask a, Mask b);

// Every tube that could replace x in the tubing; a valid flip has exactly one.
std::vector<Mask> replacements(const Graph& g, const std::vector<Mask>& tubes, Mask x);

// Maximal compatible families of tubes, found by exhaustive search.
std::vector<std::set<Mask>> maximal_tubings(const Graph& g);

// reach[a][b]: b reachable from a along the directed edges (reflexive).
std::vector<std::vector<bool>> closure(const std::vector<std::vector<int>>& out_edges);

// Order on enumerated tubings from the cover relation alone, with joins and
// meets found by scanning all common bounds.
struct ClosureOrder {
  explicit ClosureOrder(const Graph& g);
  std::vector<tubelat::Tubing> elements;
  std::vector<std::vector<int>> up_covers;
  std::vector<std::vector<bool>> reach;
  int index_of(const tubelat::Tubing& t) const;
  bool leq(int a, int b) const { return reach[a][b]; }
  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;
  std::vector<std::pair<std::vector<Mask>, int>> keys;
};

using Matrix = std::vector<std::vector<bool>>;

// Order isomorphism by backtracking, pruned on up/down set sizes.
bool isomorphic(const Matrix& a, const Matrix& b);

// Least upper bound from a leq matrix, or nothing when it is not unique.
std::optional<int> lub(const Matrix& leq, int a, int b);
std::optional<int> glb(const Matrix& leq, int a, int b);

// All joins and meets from a leq matrix: the common bound with the fewest
// elements below (above) it, accepted only if it is below (above) every other
// common bound. Entries are -1 where the bound is not unique.
struct BoundTables {
  explicit BoundTables(const Matrix& leq);
  std::size_t size;
  std::vector<int> join, meet;
  int join_of(int a, int b) const { return join[a * size + b]; }
  int meet_of(int a, int b) const { return meet[a * size + b]; }
  bool lattice() const;
};

// mu(a, b) via the right-hand recursion mu(a,b) = -sum_{a<z<=b} mu(z,b).
std::vector<std::vector<long long>> mobius_right(const Matrix& leq);

std::uint64_t binomial(int n, int k);
std::uint64_t catalan(int n);

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

}  // namespace oracle
