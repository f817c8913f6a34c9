#pragma once

// Subsets and multisets of {1..n}: the object sets of the higher Auslander
// algebras, their product order, and the predicates deciding which basis
// elements f_JI survive in A(n,d).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strandalg {

/// Strictly increasing d-element subset of {1..n}. A subset built with
/// `IndexSet::with_zero` may also contain 0 (subsets of {0..n}).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> elems);

  static IndexSet with_zero(int n, std::vector<int> elems);
  static IndexSet parse(int n, const std::string& text);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool zero_allowed() const { return zero_allowed_; }
  const std::vector<int>& elems() const { return elems_; }
  // 0-based position
  int operator[](int a) const { return elems_[static_cast<std::size_t>(a)]; }
  bool contains(int x) const;

  // "{1,3,4}"
  std::string str() const;
  // "134" for n <= 9, otherwise "1,3,4"
  std::string compact() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // Colexicographic order (compare largest elements first).
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  int n_ = 0;
  bool zero_allowed_ = false;
  std::vector<int> elems_;
};

/// Weakly increasing d-element multiset of {1..n}.
class MultiIndexSet {
 public:
  MultiIndexSet() = default;
  MultiIndexSet(int n, std::vector<int> elems);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  int operator[](int a) const { return elems_[static_cast<std::size_t>(a)]; }

  /// Some element is repeated.
  bool is_degenerate() const;
  std::string str() const;

  friend bool operator==(const MultiIndexSet&, const MultiIndexSet&) = default;
  friend std::strong_ordering operator<=>(const MultiIndexSet& a, const MultiIndexSet& b);

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

std::int64_t binomial(int n, int k);

/// All d-subsets of {1..n} in colex order.
std::vector<IndexSet> enum_subsets(int n, int d);
/// All d-subsets of {0..n} in colex order (zero permitted).
std::vector<IndexSet> enum_subsets_with_zero(int n, int d);
/// All d-multisets of {1..n} in colex order.
std::vector<MultiIndexSet> enum_multisets(int n, int d);

/// Product order: i_a <= j_a for every a. Throws on mismatched n or d.
bool poset_leq(const IndexSet& I, const IndexSet& J);
bool poset_leq(const MultiIndexSet& I, const MultiIndexSet& J);

/// rk(I) = sum_a (i_a - a); zero exactly on {1..d}.
int rank(const IndexSet& I);

/// {1..n} minus I.
IndexSet complement(const IndexSet& I);

/// I <= J and j_a < i_{a+1} for all a < d, i.e. f_JI is a nonzero basis
/// element of A(n,d).
bool interleaved(const IndexSet& I, const IndexSet& J);

/// 0 <= j_a - i_a <= 1 for every a.
bool unit_diff(const IndexSet& I, const IndexSet& J);

/// Whether some degenerate multiset K satisfies I <= K <= J. Decided by
/// exhaustive search over the multisets between I and J. Throws if I is not
/// below J.
bool factors_through_degenerate(const MultiIndexSet& I, const MultiIndexSet& J);

MultiIndexSet as_multiset(const IndexSet& I);

}  // namespace strandalg
