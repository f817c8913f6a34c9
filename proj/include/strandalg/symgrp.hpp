#pragma once

// Symmetric groups S_d, time-ordered words in simple transpositions, and the
// Bruhat order.
//
// Conventions (every sign in the strands algebra depends on these):
//
//  * A Permutation is stored in one-line notation, 1-based: p(a) for
//    a = 1..d. Composition is (p * q)(a) = p(q(a)).
//  * A Word lists crossings in *time order*: letter a at time t means that
//    the strands currently at levels a and a+1 cross. Running the wiring
//    diagram of (a_1, ..., a_k) sends the strand starting at level a to
//    level p(a), where p = s_{a_k} * ... * s_{a_1}. Hence concatenating a
//    diagram for p and then a diagram for q yields q * p.
//  * Crossings are named by the pair of *starting* levels of the two strands
//    involved.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandalg/combinat.hpp"

namespace strandalg {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int d);
  static Permutation longest(int d);
  /// s_a exchanging a and a+1.
  static Permutation simple(int d, int a);
  /// One-line digits ("312") or a comma list ("3,1,2").
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int a) const { return one_line_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string str() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

using Word = std::vector<int>;
using StrandPair = std::pair<int, int>;

Permutation word_to_perm(const Word& w, int d);
int inv_count(const Permutation& p);
bool is_reduced(const Word& w, int d);

/// Inversion pairs {a < b : p(b) < p(a)}, lexicographically sorted.
std::vector<StrandPair> inversion_set(const Permutation& p);

/// The strand pair realised by each crossing of w, in time order.
/// Throws if some pair crosses twice (w not reduced).
std::vector<StrandPair> crossing_sequence(const Word& w, int d);

/// Lexicographically smallest reduced word of p.
Word canonical_word(const Permutation& p);

/// Every reduced word of p, lexicographically sorted. Exponential; meant for
/// small d and tests.
std::vector<Word> all_reduced_words(const Permutation& p);

/// Subword criterion on canonical_word(tau).
bool bruhat_leq(const Permutation& sigma, const Permutation& tau);

/// The lower interval [e, top] with its Hasse diagram.
struct BruhatInterval {
  Permutation top;
  /// Sorted by (inv_count, one-line lex).
  std::vector<Permutation> elems;
  std::vector<int> inv;
  /// Covers (lower, upper) as element indices, sorted.
  std::vector<std::pair<int, int>> covers;

  int index_of(const Permutation& p) const;  // -1 when absent
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  int length() const { return inv_count(top); }

 private:
  friend BruhatInterval interval(const Permutation& top);
  std::map<std::vector<int>, int> index_;
};

BruhatInterval interval(const Permutation& top);

/// All permutations of S_d in lex order of their one-line notation.
std::vector<Permutation> all_permutations(int d);

/// Maximum of {p : i_a <= j_{p(a)} for all a}, or nullopt when I is not
/// below J.
std::optional<Permutation> pi0(const IndexSet& I, const IndexSet& J);

}  // namespace strandalg
