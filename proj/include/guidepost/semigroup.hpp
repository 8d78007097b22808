#pragma once

#include <string>
#include <vector>

namespace guidepost {

// Finite semigroup on elements 0..n-1 given by its multiplication table.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  FiniteSemigroup(int size, std::vector<int> table);

  int size() const { return size_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * size_ + b]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  // First triple violating associativity, or an empty vector.
  std::vector<int> associativity_violation() const;

  // Green's relations as class ids per element.
  const std::vector<int>& r_class() const { return r_class_; }
  const std::vector<int>& l_class() const { return l_class_; }
  const std::vector<int>& j_class() const { return j_class_; }

 private:
  void compute_green();

  int size_ = 0;
  std::vector<int> table_;
  std::vector<int> r_class_, l_class_, j_class_;
};

// Letter index -> semigroup element.
struct Homomorphism {
  std::vector<int> image;
  const FiniteSemigroup* semigroup = nullptr;

  int apply(const std::vector<int>& word) const;
};

}  // namespace guidepost
