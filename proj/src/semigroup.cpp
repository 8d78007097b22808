#include "guidepost/semigroup.hpp"

#include <algorithm>
#include <functional>

#include "guidepost/error.hpp"

namespace guidepost {

namespace {

// Strongly connected components of the graph v -> succ(v, i), i < n; ids in order of first element.
std::vector<int> strong_components(int n, const std::function<int(int, int)>& succ) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, comps = 0;
  // Iterative Tarjan to keep deep semigroups off the call stack.
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> work{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!work.empty()) {
      auto& [v, i] = work.back();
      if (i < static_cast<std::size_t>(n)) {
        int w = succ(v, static_cast<int>(i++));
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      int done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
    }
  }
  // Renumber by smallest element.
  std::vector<int> rename(comps, -1), out(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (rename[comp[v]] < 0) rename[comp[v]] = next++;
    out[v] = rename[comp[v]];
  }
  return out;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(int size, std::vector<int> table) : size_(size), table_(std::move(table)) {
  require(size >= 1, "a semigroup needs at least one element");
  require(table_.size() == static_cast<std::size_t>(size) * size, "multiplication table has the wrong size");
  for (int v : table_) require(v >= 0 && v < size, "multiplication table leaves the element set");
  compute_green();
}

std::vector<int> FiniteSemigroup::associativity_violation() const {
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return {a, b, c};
  return {};
}

void FiniteSemigroup::compute_green() {
  r_class_ = strong_components(size_, [this](int a, int s) { return mul(a, s); });
  l_class_ = strong_components(size_, [this](int a, int s) { return mul(s, a); });
  // In a finite semigroup J equals D, the join of R and L.
  std::vector<int> root(size_);
  for (int a = 0; a < size_; ++a) root[a] = a;
  std::function<int(int)> find = [&](int a) { return root[a] == a ? a : root[a] = find(root[a]); };
  std::vector<int> first_r(size_, -1), first_l(size_, -1);
  for (int a = 0; a < size_; ++a) {
    for (auto* first : {&first_r, &first_l}) {
      int cls = first == &first_r ? r_class_[a] : l_class_[a];
      int& rep = (*first)[cls];
      if (rep < 0) rep = a;
      else root[find(a)] = find(rep);
    }
  }
  std::vector<int> rename(size_, -1);
  j_class_.assign(size_, 0);
  int next = 0;
  for (int a = 0; a < size_; ++a) {
    int r = find(a);
    if (rename[r] < 0) rename[r] = next++;
    j_class_[a] = rename[r];
  }
}

int Homomorphism::apply(const std::vector<int>& word) const {
  require(semigroup != nullptr, "homomorphism without semigroup");
  require(!word.empty(), "the empty word has no image");
  int v = -1;
  for (int letter : word) {
    require(letter >= 0 && letter < static_cast<int>(image.size()), "letter outside the alphabet");
    v = v < 0 ? image[letter] : semigroup->mul(v, image[letter]);
  }
  return v;
}

}  // namespace guidepost
