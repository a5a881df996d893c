#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tubelat/tubing.hpp"

namespace tubelat {

using Bitset = boost::dynamic_bitset<>;

class FinitePoset {
 public:
  // upper_covers[a] lists every b with a covered by b.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<int>> upper_covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<int>& upper_covers(int a) const { return upper_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lower_[a]; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  const Bitset& up(int a) const { return up_[a]; }
  const Bitset& down(int a) const { return down_[a]; }
  // Elements in an order where a < b implies a comes first.
  const std::vector<int>& linear_extension() const { return linear_; }
  int position(int a) const { return position_[a]; }
  std::optional<int> bottom() const;
  std::optional<int> top() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> upper_, lower_;
  std::vector<Bitset> up_, down_;
  std::vector<int> linear_, position_;
};

// Cover relations from a strict order given as a reachability predicate.
FinitePoset poset_from_order(std::vector<std::string> labels,
                             const std::function<bool(int, int)>& strictly_less);

struct TubingPoset {
  Graph graph;
  std::vector<Tubing> tubings;
  FinitePoset poset;
  std::unordered_map<std::vector<Mask>, int, DownSetsHash> index;

  int index_of(const Tubing& t) const;
};

inline constexpr std::size_t kDefaultPosetCap = 1'000'000;

TubingPoset build_poset(const Graph& g, std::size_t cap = kDefaultPosetCap);

struct BoundResult {
  std::optional<int> element;
  std::vector<int> minimal;  // all minimal bounds when the bound is not unique
};

BoundResult brute_join(const FinitePoset& p, int a, int b);
BoundResult brute_meet(const FinitePoset& p, int a, int b);

struct LatticeCheck {
  bool ok = true;
  bool join_failed = false;  // otherwise the meet failed
  int a = -1, b = -1;
  std::vector<int> minimal;
};

LatticeCheck is_lattice(const FinitePoset& p);

// All joins and meets of a lattice, computed once.
class LatticeTables {
 public:
  explicit LatticeTables(const FinitePoset& p);
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size_ + b]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size_ + b]; }
  int size() const { return static_cast<int>(size_); }

 private:
  std::size_t size_;
  std::vector<int> join_, meet_;
};

// mu[a][b], zero unless a <= b.
std::vector<std::vector<long long>> mobius(const FinitePoset& p);

std::vector<int> join_irreducibles(const FinitePoset& p);
std::vector<int> meet_irreducibles(const FinitePoset& p);

struct SemidistributiveCheck {
  bool ok = true;
  bool meet_law = true;  // which law failed when !ok
  int x = -1, y = -1, z = -1;
};

SemidistributiveCheck check_semidistributive(const FinitePoset& p);
SemidistributiveCheck check_semidistributive(const LatticeTables& t);

}  // namespace tubelat
