#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tubelat/gtree.hpp"
#include "tubelat/tubing.hpp"

namespace tubelat {

bool leq_cycle(const Tubing& j, const Tubing& k);
bool leq_path(const Tubing& x, const Tubing& y);

// Splits every tube across the edge (1,n); the result lives on the path.
Tubing cut(const Tubing& j);

// An in-order shuffle of the left and right zippers of a path tubing,
// listed from the bottom of the sewn chain to the top.
class ShuffleWord {
 public:
  ShuffleWord(const Tubing& base, std::vector<int> letters);
  // Comma-separated labels; "9137" style digit strings are accepted when n <= 9.
  static ShuffleWord parse(const Tubing& base, std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  const std::vector<int>& left() const { return left_; }
  const std::vector<int>& right() const { return right_; }
  // before[r][a]: right letter r-th (0-based) precedes left letter a-th.
  std::vector<std::vector<bool>> cross_precedence() const;
  std::string to_string() const;

  friend bool operator==(const ShuffleWord& a, const ShuffleWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<int> letters_, left_, right_;
};

Tubing sew(const Tubing& x, const ShuffleWord& w);
std::vector<ShuffleWord> shuffle_words(const Tubing& x);
std::vector<Tubing> fiber(const Tubing& x);
// The word w with sew(cut(j), w) == j.
ShuffleWord word_of(const Tubing& j);

Tubing lift(const Tubing& j, const Tubing& x);
// Lift along an explicit saturated chain cut(j) = chain[0] < ... < chain.back().
Tubing lift_along(const Tubing& j, const std::vector<Tubing>& chain);
// Dual lift into the fiber of x <= cut(j): the maximum element below j.
Tubing lower_lift(const Tubing& j, const Tubing& x);

ShuffleWord shuffle_join(const Tubing& x, const ShuffleWord& a, const ShuffleWord& b);
ShuffleWord shuffle_meet(const Tubing& x, const ShuffleWord& a, const ShuffleWord& b);

// Order table of the path tubings on n vertices, built once per n.
class PathOrder {
 public:
  static std::shared_ptr<const PathOrder> get(int n);
  explicit PathOrder(int n);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Tubing& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Tubing& t) const;
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

 private:
  struct Impl;
  int n_;
  std::vector<Tubing> elements_;
  std::shared_ptr<Impl> impl_;
};

inline constexpr int kPathOrderMaxN = 10;

Tubing join_path(const Tubing& x, const Tubing& y);
Tubing meet_path(const Tubing& x, const Tubing& y);
Tubing join_cycle(const Tubing& j, const Tubing& k);
Tubing meet_cycle(const Tubing& j, const Tubing& k);

}  // namespace tubelat
