#include "guidepost/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

using Tree = FactorizationTree;
using Seq = std::vector<Tree>;

Tree leaf(int pos, int value) {
  Tree t;
  t.kind = Tree::Kind::Leaf;
  t.value = value;
  t.begin = pos;
  t.end = pos + 1;
  return t;
}

Tree binary(const FiniteSemigroup& s, Tree a, Tree b) {
  Tree t;
  t.kind = Tree::Kind::Binary;
  t.value = s.mul(a.value, b.value);
  t.begin = a.begin;
  t.end = b.end;
  t.children.push_back(std::move(a));
  t.children.push_back(std::move(b));
  return t;
}

Tree unranked(Seq parts) {
  Tree t;
  t.kind = Tree::Kind::Unranked;
  t.value = parts.front().value;
  t.begin = parts.front().begin;
  t.end = parts.back().end;
  t.children = std::move(parts);
  return t;
}

Seq slice(const Seq& seq, std::size_t from, std::size_t to) { return Seq(seq.begin() + from, seq.begin() + to); }

Seq leaves(const std::vector<int>& word, const Homomorphism& h) {
  require(!word.empty(), "the empty word has no factorization");
  require(h.semigroup != nullptr, "homomorphism without semigroup");
  Seq seq;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int a = word[i];
    require(a >= 0 && a < static_cast<int>(h.image.size()), "letter outside the alphabet");
    seq.push_back(leaf(static_cast<int>(i), h.image[a]));
  }
  return seq;
}

class GreenBuilder {
 public:
  explicit GreenBuilder(const FiniteSemigroup& s) : s_(s) {}

  // Factors whose product lies in the J-class of the whole are grouped into blocks and handled as a
  // smooth sequence; the parts in between lie strictly above and are handled recursively.
  Tree general(const Seq& seq) {
    if (seq.size() == 1) return seq.front();
    int total = product(seq);
    int target = s_.j_class()[total];
    Seq blocks;
    std::size_t start = 0;
    int p = -1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      p = i == start ? seq[i].value : s_.mul(p, seq[i].value);
      if (s_.j_class()[p] != target) continue;
      blocks.push_back(i > start ? binary(s_, general(slice(seq, start, i)), seq[i]) : seq[i]);
      start = i + 1;
    }
    ensure(!blocks.empty(), "no block reaches the J-class of the product");
    Tree head = smooth(blocks);
    if (start == seq.size()) return head;
    return binary(s_, std::move(head), general(slice(seq, start, seq.size())));
  }

  // Every infix product of seq lies in one J-class.
  Tree smooth(const Seq& seq) {
    if (seq.size() == 1) return seq.front();
    std::size_t m = seq.size();
    std::vector<int> prefix(m);
    for (std::size_t i = 0; i < m; ++i) prefix[i] = i ? s_.mul(prefix[i - 1], seq[i].value) : seq[i].value;
    std::map<std::pair<int, int>, int> count;
    for (std::size_t c = 0; c + 1 < m; ++c) ++count[{prefix[c], s_.r_class()[seq[c + 1].value]}];
    std::pair<int, int> chosen{-1, -1};
    int best = 0;
    for (const auto& [type, n] : count)
      if (n > best) {
        best = n;
        chosen = type;
      }
    std::vector<std::size_t> cuts;
    for (std::size_t c = 0; c + 1 < m; ++c)
      if (std::make_pair(prefix[c], s_.r_class()[seq[c + 1].value]) == chosen) cuts.push_back(c);
    std::vector<Tree> pieces;
    std::size_t from = 0;
    for (std::size_t c : cuts) {
      pieces.push_back(smooth(slice(seq, from, c + 1)));
      from = c + 1;
    }
    pieces.push_back(smooth(slice(seq, from, m)));
    Tree first = pieces.front();
    Tree last = pieces.back();
    if (pieces.size() == 2) return binary(s_, std::move(first), std::move(last));
    Seq middle(pieces.begin() + 1, pieces.end() - 1);
    int e = middle.front().value;
    for (const auto& piece : middle) ensure(piece.value == e, "middle pieces of a smooth word differ");
    ensure(s_.is_idempotent(e), "middle pieces of a smooth word are not idempotent");
    bool take_first = first.value == e;
    bool take_last = last.value == e;
    if (take_first) middle.insert(middle.begin(), first);
    if (take_last) middle.push_back(last);
    Tree core = middle.size() >= 2 ? unranked(std::move(middle)) : middle.front();
    if (take_first && take_last) return core;
    if (take_first) return binary(s_, std::move(core), std::move(last));
    if (take_last) return binary(s_, std::move(first), std::move(core));
    Tree left_heavy = binary(s_, binary(s_, first, core), last);
    Tree right_heavy = binary(s_, first, binary(s_, core, last));
    return rank(right_heavy) < rank(left_heavy) ? right_heavy : left_heavy;
  }

 private:
  int product(const Seq& seq) const {
    int v = seq.front().value;
    for (std::size_t i = 1; i < seq.size(); ++i) v = s_.mul(v, seq[i].value);
    return v;
  }

  const FiniteSemigroup& s_;
};

Tree balanced(const FiniteSemigroup& s, const Seq& seq, std::size_t from, std::size_t to) {
  if (to - from == 1) return seq[from];
  std::size_t mid = from + (to - from + 1) / 2;
  return binary(s, balanced(s, seq, from, mid), balanced(s, seq, mid, to));
}

// Dense bitset over word positions.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 64) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return w[i / 64] >> (i % 64) & 1; }
  bool meets(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  void unite(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
};

class OptimalBuilder {
 public:
  OptimalBuilder(const FiniteSemigroup& s, const Seq& leaves) : s_(s), leaves_(leaves), n_(leaves.size()) {
    value_.assign(n_ * n_, -1);
    for (std::size_t i = 0; i < n_; ++i) {
      int v = leaves[i].value;
      for (std::size_t j = i; j < n_; ++j) {
        if (j > i) v = s.mul(v, leaves[j].value);
        value_[i * n_ + j] = v;
      }
    }
    for (int e = 0; e < s.size(); ++e)
      if (s.is_idempotent(e)) idempotents_.push_back(e);
  }

  Tree build() {
    std::vector<Bits> rows(n_, Bits(n_));
    for (std::size_t i = 0; i < n_; ++i) rows[i].set(i);
    levels_.push_back(rows);
    while (!levels_.back()[0].test(n_ - 1)) {
      const auto& cur = levels_.back();
      std::vector<Bits> next = cur;
      // shifted[j] has bit k when [k+1, j] is good.
      std::vector<Bits> shifted(n_, Bits(n_));
      for (std::size_t k = 0; k + 1 < n_; ++k)
        for (std::size_t j = k + 1; j < n_; ++j)
          if (cur[k + 1].test(j)) shifted[j].set(k);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          if (!next[i].test(j) && cur[i].meets(shifted[j])) next[i].set(j);
      for (int e : idempotents_) {
        std::vector<Bits> ends(n_, Bits(n_ + 1));
        for (std::size_t p = 0; p < n_; ++p)
          for (std::size_t j = p; j < n_; ++j)
            if (cur[p].test(j) && value(p, j) == e) ends[p].set(j + 1);
        for (std::size_t i = 0; i < n_; ++i) {
          Bits one = ends[i];
          Bits two(n_ + 1);
          for (std::size_t p = i + 1; p < n_; ++p)
            if (one.test(p) || two.test(p)) two.unite(ends[p]);
          for (std::size_t j = i + 1; j < n_; ++j)
            if (two.test(j + 1)) next[i].set(j);
        }
      }
      levels_.push_back(std::move(next));
    }
    return make(0, n_ - 1, levels_.size() - 1);
  }

 private:
  int value(std::size_t i, std::size_t j) const { return value_[i * n_ + j]; }
  bool good(std::size_t level, std::size_t i, std::size_t j) const { return levels_[level][i].test(j); }

  Tree make(std::size_t i, std::size_t j, std::size_t level) {
    while (level > 0 && good(level - 1, i, j)) --level;
    if (i == j) return leaves_[i];
    std::size_t below = level - 1;
    for (std::size_t k = i; k < j; ++k)
      if (good(below, i, k) && good(below, k + 1, j))
        return binary(s_, make(i, k, below), make(k + 1, j, below));
    for (int e : idempotents_) {
      // reach[p]: span [p, j] splits into good factors of value e.
      std::vector<bool> reach(j + 2, false);
      reach[j + 1] = true;
      for (std::size_t p = j + 1; p-- > i;)
        for (std::size_t q = p; q <= j && !reach[p]; ++q)
          reach[p] = good(below, p, q) && value(p, q) == e && reach[q + 1];
      bool found = false;
      for (std::size_t q = i; q < j; ++q)
        if (good(below, i, q) && value(i, q) == e && reach[q + 1]) found = true;
      if (!found) continue;
      Seq parts;
      std::size_t p = i;
      while (p <= j) {
        std::size_t q = p;
        while (!(good(below, p, q) && value(p, q) == e && reach[q + 1] && !(p == i && q == j))) ++q;
        parts.push_back(make(p, q, below));
        p = q + 1;
      }
      return unranked(std::move(parts));
    }
    throw InvariantError("optimal factorization lost its witness");
  }

  const FiniteSemigroup& s_;
  const Seq& leaves_;
  std::size_t n_;
  std::vector<int> value_;
  std::vector<int> idempotents_;
  std::vector<std::vector<Bits>> levels_;
};

}  // namespace

const char* kind_name(FactorizationTree::Kind kind) {
  switch (kind) {
    case Tree::Kind::Leaf: return "leaf";
    case Tree::Kind::Binary: return "binary";
    default: return "unranked";
  }
}

int rank(const FactorizationTree& t) {
  int r = 0;
  for (const auto& c : t.children) r = std::max(r, rank(c));
  return r + 1;
}

std::vector<std::string> validate_tree(const FactorizationTree& t, const std::vector<int>& word, const Homomorphism& h) {
  std::vector<std::string> out;
  if (word.empty()) {
    out.push_back("empty word");
    return out;
  }
  if (t.begin != 0 || t.end != static_cast<int>(word.size())) out.push_back("root span does not cover the word");
  const FiniteSemigroup& s = *h.semigroup;
  auto visit = [&](auto&& self, const FactorizationTree& node) -> void {
    std::string at = "[" + std::to_string(node.begin) + "," + std::to_string(node.end) + ") ";
    switch (node.kind) {
      case Tree::Kind::Leaf:
        if (!node.children.empty()) out.push_back(at + "leaf with children");
        if (node.end != node.begin + 1 || node.begin < 0 || node.begin >= static_cast<int>(word.size())) {
          out.push_back(at + "leaf span is not one letter");
          return;
        }
        if (word[node.begin] < 0 || word[node.begin] >= static_cast<int>(h.image.size())) {
          out.push_back(at + "letter outside the alphabet");
          return;
        }
        if (node.value != h.image[word[node.begin]]) out.push_back(at + "leaf value differs from the letter image");
        return;
      case Tree::Kind::Binary:
        if (node.children.size() != 2) out.push_back(at + "binary node without exactly two children");
        break;
      case Tree::Kind::Unranked:
        if (node.children.size() < 2) out.push_back(at + "unranked node with fewer than two children");
        for (const auto& c : node.children)
          if (c.value != node.children.front().value) {
            out.push_back(at + "unranked children have different values");
            break;
          }
        break;
    }
    if (node.children.empty()) return;
    int pos = node.begin;
    int v = -1;
    for (const auto& c : node.children) {
      if (c.begin != pos) out.push_back(at + "children do not tile the span");
      pos = c.end;
      v = v < 0 ? c.value : s.mul(v, c.value);
      self(self, c);
    }
    if (pos != node.end) out.push_back(at + "children do not tile the span");
    if (v != node.value) out.push_back(at + "value is not the product of the children");
  };
  visit(visit, t);
  return out;
}

FactorizationTree green_factorization(const std::vector<int>& word, const Homomorphism& h) {
  Seq seq = leaves(word, h);
  return GreenBuilder(*h.semigroup).general(seq);
}

FactorizationTree balanced_factorization(const std::vector<int>& word, const Homomorphism& h) {
  Seq seq = leaves(word, h);
  return balanced(*h.semigroup, seq, 0, seq.size());
}

FactorizationTree optimal_factorization(const std::vector<int>& word, const Homomorphism& h) {
  Seq seq = leaves(word, h);
  return OptimalBuilder(*h.semigroup, seq).build();
}

FactorizationTree factorize(const std::vector<int>& word, const Homomorphism& h) {
  int bound = rank_bound(*h.semigroup);
  Tree t = green_factorization(word, h);
  if (rank(t) <= bound) return t;
  t = balanced_factorization(word, h);
  if (rank(t) <= bound) return t;
  t = optimal_factorization(word, h);
  ensure(rank(t) <= bound, "no factorization within rank 3|S| was found");
  return t;
}

}  // namespace guidepost
