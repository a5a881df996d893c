#include <boost/dynamic_bitset.hpp>
#include <map>
#include <mutex>
#include <unordered_map>

#include "tubelat/cycle_lattice.hpp"
#include "tubelat/error.hpp"

namespace tubelat {

struct PathOrder::Impl {
  std::unordered_map<std::vector<Mask>, std::size_t, DownSetsHash> index;
  std::vector<int> inv_count;
  std::vector<boost::dynamic_bitset<>> up, down;
};

PathOrder::PathOrder(int n) : n_(n), impl_(std::make_shared<Impl>()) {
  if (n > kPathOrderMaxN) throw CapExceeded("path order table is capped at n = " + std::to_string(kPathOrderMaxN));
  elements_ = enumerate_maximal_tubings(make_graph(GraphKind::path, n));
  std::size_t size = elements_.size();
  std::vector<PairSet> inv;
  inv.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    impl_->index.emplace(elements_[i].down_sets(), i);
    inv.push_back(inversions(elements_[i]));
    impl_->inv_count.push_back(inv.back().size());
  }
  impl_->up.assign(size, boost::dynamic_bitset<>(size));
  impl_->down.assign(size, boost::dynamic_bitset<>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (inv[a].subset_of(inv[b])) {
        impl_->up[a].set(b);
        impl_->down[b].set(a);
      }
}

std::shared_ptr<const PathOrder> PathOrder::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PathOrder>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const PathOrder>(n);
  return slot;
}

std::size_t PathOrder::index_of(const Tubing& t) const {
  auto it = impl_->index.find(t.down_sets());
  if (t.graph().kind() != GraphKind::path || it == impl_->index.end())
    throw InvalidInput("not a path tubing of this size");
  return it->second;
}

bool PathOrder::leq(std::size_t a, std::size_t b) const { return impl_->up[a].test(b); }

std::size_t PathOrder::join(std::size_t a, std::size_t b) const {
  auto bounds = impl_->up[a] & impl_->up[b];
  std::size_t best = bounds.npos;
  for (auto u = bounds.find_first(); u != bounds.npos; u = bounds.find_next(u))
    if (best == bounds.npos || impl_->inv_count[u] < impl_->inv_count[best]) best = u;
  if (best == bounds.npos || !bounds.is_subset_of(impl_->up[best]))
    throw std::logic_error("path order has no least upper bound");
  return best;
}

std::size_t PathOrder::meet(std::size_t a, std::size_t b) const {
  auto bounds = impl_->down[a] & impl_->down[b];
  std::size_t best = bounds.npos;
  for (auto u = bounds.find_first(); u != bounds.npos; u = bounds.find_next(u))
    if (best == bounds.npos || impl_->inv_count[u] > impl_->inv_count[best]) best = u;
  if (best == bounds.npos || !bounds.is_subset_of(impl_->down[best]))
    throw std::logic_error("path order has no greatest lower bound");
  return best;
}

}  // namespace tubelat
