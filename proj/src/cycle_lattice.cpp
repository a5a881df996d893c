#include "tubelat/cycle_lattice.hpp"

#include <algorithm>

#include "tubelat/error.hpp"

namespace tubelat {

namespace {

void require_kind(const Tubing& t, GraphKind kind) {
  if (t.graph().kind() != kind)
    throw InvalidInput("expected a tubing of the " + to_string(kind) + " graph");
}

void require_same_n(const Tubing& a, const Tubing& b) {
  if (a.n() != b.n()) throw InvalidInput("tubings have different vertex counts");
}

std::size_t position(const std::vector<int>& word, int v) {
  return static_cast<std::size_t>(std::find(word.begin(), word.end(), v) - word.begin());
}

bool is_subsequence(const std::vector<int>& part, const std::vector<int>& word) {
  std::size_t k = 0;
  for (int v : word)
    if (k < part.size() && part[k] == v) ++k;
  return k == part.size();
}

// Word surgery for the upward tree move on the left edge c -> p of the path tree cur.
void lift_step(const Tubing& cur, int c, std::vector<int>& word) {
  GTree tree = gtree_of(cur);
  Zippers z = zippers(tree);
  int p = tree.parent(c);
  int m = tree.root();
  const auto& a = z.left;
  const auto& b = z.right;
  auto in_a = std::find(a.begin(), a.end(), c);
  if (p == m && !a.empty() && c == a.back()) {
    word.erase(word.begin() + position(word, c));
    word.push_back(m);
  } else if (in_a != a.end() && in_a + 1 != a.end() && *(in_a + 1) == p) {
    word.erase(word.begin() + position(word, c));
    word[position(word, p)] = c;
  } else if (std::find(b.begin(), b.end(), p) != b.end()) {
    word.insert(word.begin() + position(word, p) + 1, c);
  }
}

std::vector<int> lex_key(Mask tube) { return vertices_of(tube); }

}  // namespace

bool leq_cycle(const Tubing& j, const Tubing& k) {
  require_same_n(j, k);
  require_kind(j, GraphKind::cycle);
  require_kind(k, GraphKind::cycle);
  // inv(j) within inv(k) + inc(k), i.e. avoiding coinv(k)
  return inversions(j).disjoint(coinversions(k));
}

bool leq_path(const Tubing& x, const Tubing& y) {
  require_same_n(x, y);
  require_kind(x, GraphKind::path);
  require_kind(y, GraphKind::path);
  return inversions(x).subset_of(inversions(y));
}

Tubing cut(const Tubing& j) {
  require_kind(j, GraphKind::cycle);
  int n = j.n(), m = j.root();
  std::vector<Mask> down(n);
  for (int x = 1; x <= n; ++x) {
    if (x == m)
      down[x - 1] = j.down(x);
    else if (x < m)
      down[x - 1] = j.down(x) & range_mask(1, m - 1);
    else
      down[x - 1] = j.down(x) & range_mask(m + 1, n);
  }
  return Tubing::from_down_sets(make_graph(GraphKind::path, n), std::move(down));
}

ShuffleWord::ShuffleWord(const Tubing& base, std::vector<int> letters) : letters_(std::move(letters)) {
  require_kind(base, GraphKind::path);
  Zippers z = zippers(gtree_of(base));
  left_ = z.left;
  right_ = z.right;
  std::vector<int> expected = left_;
  expected.insert(expected.end(), right_.begin(), right_.end());
  std::vector<int> got = letters_;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected) throw InvalidInput("word is not a permutation of the zipper vertices");
  if (!is_subsequence(left_, letters_) || !is_subsequence(right_, letters_))
    throw InvalidInput("word does not keep the zipper orders");
}

ShuffleWord ShuffleWord::parse(const Tubing& base, std::string_view text) {
  if (text.empty()) return ShuffleWord(base, {});
  std::vector<int> letters;
  bool digits_only = text.find(',') == std::string_view::npos;
  try {
    if (digits_only && base.n() <= 9) {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw InvalidInput("bad letter in word");
        letters.push_back(ch - '0');
      }
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string piece(text.substr(start, end - start));
        if (piece.empty()) throw InvalidInput("empty letter in word");
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw InvalidInput("bad letter in word");
        letters.push_back(v);
        start = end + 1;
      }
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("cannot parse word: " + std::string(text));
  }
  return ShuffleWord(base, std::move(letters));
}

std::vector<std::vector<bool>> ShuffleWord::cross_precedence() const {
  std::vector<std::vector<bool>> before(right_.size(), std::vector<bool>(left_.size(), false));
  for (std::size_t r = 0; r < right_.size(); ++r)
    for (std::size_t a = 0; a < left_.size(); ++a)
      before[r][a] = position(letters_, right_[r]) < position(letters_, left_[a]);
  return before;
}

std::string ShuffleWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Tubing sew(const Tubing& x, const ShuffleWord& w) {
  require_kind(x, GraphKind::path);
  if (!(ShuffleWord(x, w.letters()) == w)) throw InvalidInput("word does not belong to this base");
  int n = x.n();
  if (n < 3) throw InvalidInput("cycle graph needs n >= 3");
  std::vector<Mask> down = x.down_sets();
  Mask acc = 0;
  for (int v : w.letters()) {
    acc |= x.down(v);
    down[v - 1] = acc;
  }
  return Tubing::from_down_sets(make_graph(GraphKind::cycle, n), std::move(down));
}

std::vector<ShuffleWord> shuffle_words(const Tubing& x) {
  Zippers z = zippers(gtree_of(x));
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t r) {
    if (i == z.left.size() && r == z.right.size()) {
      words.push_back(cur);
      return;
    }
    if (i < z.left.size()) {
      cur.push_back(z.left[i]);
      rec(i + 1, r);
      cur.pop_back();
    }
    if (r < z.right.size()) {
      cur.push_back(z.right[r]);
      rec(i, r + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::vector<ShuffleWord> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(x, std::move(w));
  return out;
}

std::vector<Tubing> fiber(const Tubing& x) {
  std::vector<Tubing> out;
  for (const ShuffleWord& w : shuffle_words(x)) out.push_back(sew(x, w));
  return out;
}

ShuffleWord word_of(const Tubing& j) {
  Tubing x = cut(j);
  Zippers z = zippers(gtree_of(x));
  std::vector<int> letters = z.left;
  letters.insert(letters.end(), z.right.begin(), z.right.end());
  std::sort(letters.begin(), letters.end(),
            [&j](int u, int v) { return size_of(j.down(u)) < size_of(j.down(v)); });
  return ShuffleWord(x, std::move(letters));
}

Tubing lift(const Tubing& j, const Tubing& x) {
  Tubing cur = cut(j);
  if (!leq_path(cur, x)) throw InvalidInput("lift needs cut(j) <= x");
  std::vector<int> word = word_of(j).letters();
  while (!(cur == x)) {
    int best = 0;
    std::vector<int> best_key;
    for (int c = 1; c <= cur.n(); ++c) {
      int p = cur.parent(c);
      if (!p || c > p) continue;
      Flip f = flip(cur, cur.down(c));
      if (!leq_path(f.tubing, x)) continue;
      std::vector<int> key = lex_key(f.removed);
      if (!best || key < best_key) {
        best = c;
        best_key = std::move(key);
      }
    }
    if (!best) throw std::logic_error("no upward cover below the target");
    lift_step(cur, best, word);
    cur = flip(cur, cur.down(best)).tubing;
  }
  return sew(x, ShuffleWord(x, std::move(word)));
}

Tubing lift_along(const Tubing& j, const std::vector<Tubing>& chain) {
  if (chain.empty() || !(chain.front() == cut(j))) throw InvalidInput("chain must start at cut(j)");
  std::vector<int> word = word_of(j).letters();
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    const Tubing& cur = chain[s];
    if (!covers(cur, chain[s + 1])) throw InvalidInput("chain is not saturated");
    int c = 0;
    for (Mask t : cur.down_sets())
      if (!chain[s + 1].contains(t)) c = cur.top(t);
    lift_step(cur, c, word);
  }
  return sew(chain.back(), ShuffleWord(chain.back(), std::move(word)));
}

Tubing lower_lift(const Tubing& j, const Tubing& x) {
  return relabel_reverse(lift(relabel_reverse(j), relabel_reverse(x)));
}

namespace {

void require_base(const Tubing& x, const ShuffleWord& w) {
  Zippers z = zippers(gtree_of(x));
  if (w.left() != z.left || w.right() != z.right) throw InvalidInput("word does not belong to this base");
}

ShuffleWord combine(const Tubing& x, const ShuffleWord& a, const ShuffleWord& b, bool join) {
  require_base(x, a);
  require_base(x, b);
  auto pa = a.cross_precedence();
  auto pb = b.cross_precedence();
  const auto& left = a.left();
  const auto& right = a.right();
  std::vector<int> out;
  std::size_t i = 0, r = 0;
  while (i < left.size() && r < right.size()) {
    bool right_first = join ? (pa[r][i] || pb[r][i]) : (pa[r][i] && pb[r][i]);
    out.push_back(right_first ? right[r++] : left[i++]);
  }
  while (i < left.size()) out.push_back(left[i++]);
  while (r < right.size()) out.push_back(right[r++]);
  return ShuffleWord(x, std::move(out));
}

}  // namespace

ShuffleWord shuffle_join(const Tubing& x, const ShuffleWord& a, const ShuffleWord& b) {
  return combine(x, a, b, true);
}

ShuffleWord shuffle_meet(const Tubing& x, const ShuffleWord& a, const ShuffleWord& b) {
  return combine(x, a, b, false);
}

Tubing join_path(const Tubing& x, const Tubing& y) {
  require_same_n(x, y);
  require_kind(x, GraphKind::path);
  require_kind(y, GraphKind::path);
  auto order = PathOrder::get(x.n());
  return order->element(order->join(order->index_of(x), order->index_of(y)));
}

Tubing meet_path(const Tubing& x, const Tubing& y) {
  require_same_n(x, y);
  require_kind(x, GraphKind::path);
  require_kind(y, GraphKind::path);
  auto order = PathOrder::get(x.n());
  return order->element(order->meet(order->index_of(x), order->index_of(y)));
}

Tubing join_cycle(const Tubing& j, const Tubing& k) {
  require_same_n(j, k);
  require_kind(j, GraphKind::cycle);
  require_kind(k, GraphKind::cycle);
  Tubing x = join_path(cut(j), cut(k));
  ShuffleWord w = shuffle_join(x, word_of(lift(j, x)), word_of(lift(k, x)));
  return sew(x, w);
}

Tubing meet_cycle(const Tubing& j, const Tubing& k) {
  require_same_n(j, k);
  require_kind(j, GraphKind::cycle);
  require_kind(k, GraphKind::cycle);
  Tubing x = meet_path(cut(j), cut(k));
  ShuffleWord w = shuffle_meet(x, word_of(lower_lift(j, x)), word_of(lower_lift(k, x)));
  return sew(x, w);
}

}  // namespace tubelat
