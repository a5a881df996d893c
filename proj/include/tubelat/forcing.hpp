#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tubelat/irreducibles.hpp"
#include "tubelat/poset.hpp"

namespace tubelat {

// Binary relation on {0, ..., size-1}.
class Relation {
 public:
  explicit Relation(int size = 0) : rows_(size, Bitset(size)) {}

  int size() const { return static_cast<int>(rows_.size()); }
  bool has(int a, int b) const { return rows_[a].test(b); }
  void set(int a, int b) { rows_[a].set(b); }
  const Bitset& row(int a) const { return rows_[a]; }
  std::size_t count() const;
  std::vector<std::pair<int, int>> pairs() const;
  Relation reflexive_closure() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Bitset> rows_;
};

// Mult: x -> z iff x onto y into z for some y (both relations taken reflexively).
Relation multiply(const Relation& onto, const Relation& into);
// Fact: the reflexive relations (onto, into) induced by arrow.
std::pair<Relation, Relation> factorize(const Relation& arrow);

// Returns a cycle (first vertex repeated at the end) when one exists.
std::optional<std::vector<int>> find_cycle(const Relation& r);
bool is_acyclic(const Relation& r);

// Order condition and brick condition on the strict relations.
bool two_acyclic(const Relation& onto, const Relation& into);

struct ForcingSystem {
  int n = 0;
  std::vector<JiIndex> elements;  // index (i-1)(n-1) + (k-1)
  Relation to, onto, into, force;

  int index(int i, int k) const { return (i - 1) * (n - 1) + (k - 1); }
};

ForcingSystem forcing_system(int n);

// Direct forcing from the minimal/maximal definition over strict onto/into.
Relation force_by_definition(const Relation& onto, const Relation& into);
// Direct forcing via y onto x or x into y.
Relation force_simplified(const Relation& onto, const Relation& into);

bool check_congruence_uniform(int n);

struct PairsLattice {
  std::vector<std::uint32_t> sets;  // the X of each maximal orthogonal pair
  FinitePoset poset;
};

inline constexpr int kPairsMaxGenerators = 25;

PairsLattice pairs_lattice(const Relation& arrow);
PairsLattice pairs_lattice(int n);

}  // namespace tubelat
