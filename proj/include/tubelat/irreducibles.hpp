#pragma once

#include <optional>

#include "tubelat/gtree.hpp"
#include "tubelat/poset.hpp"

namespace tubelat {

// Join irreducible J_{i,k}: chain index i, height k, both in 1..n-1.
struct JiIndex {
  int i, k;
  friend bool operator==(const JiIndex&, const JiIndex&) = default;
};

// Meet irreducible M_{i,k} = w0(J_{i,n-k}).
struct MiIndex {
  int i, k;
  friend bool operator==(const MiIndex&, const MiIndex&) = default;
};

GTree canonical_ji(int n, int i, int k);
Tubing ji_tubing(int n, int i, int k);
Tubing mi_tubing(int n, int i, int k);

PairSet ji_inversions_formula(int n, int i, int k);
PairSet mi_coinversions_formula(int n, int i, int k);

// The permutation c_i of 1..n-1.
int chain_permutation(int n, int i, int k);

MiIndex kappa(int n, int i, int k);

// max{L : L meet j = j_*} when it exists; j must be join irreducible.
std::optional<int> kappa_brute(const FinitePoset& p, const LatticeTables& t, int j);

}  // namespace tubelat
