#pragma once

// The strands algebra B(n,d).
//
// A generator (I, J, p) is the class of strand diagrams from I to J whose
// underlying permutation is p, normalised to the lexicographically smallest
// reduced word of p. Degree is -inv(p).
//
// Sign rule. Diagrams differing by a braid move are equal; moving one crossing
// past a crossing of two disjoint strands multiplies by -1. For a reduced word
// w this gives sign(w) = (-1)^D(w) up to a global constant, where D(w) counts
// pairs of crossings of disjoint strand pairs occurring in decreasing
// lexicographic order of their strand pairs. relative_sign compares w with
// the canonical word.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strandalg/auslander.hpp"
#include "strandalg/combinat.hpp"
#include "strandalg/exactla.hpp"
#include "strandalg/symgrp.hpp"

namespace strandalg {

struct StrandGenerator {
  IndexSet source;
  IndexSet target;
  Permutation perm;

  int degree() const { return -inv_count(perm); }
  std::string str() const;

  friend bool operator==(const StrandGenerator&, const StrandGenerator&) = default;
  friend bool operator<(const StrandGenerator& a, const StrandGenerator& b);
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const StrandGenerator& g, const mpq_class& c) { add(g, c); }

  void add(const StrandGenerator& g, const mpq_class& c);
  const std::map<StrandGenerator, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(const StrandGenerator& g) const;
  AlgebraElement reduced(const FieldSpec& f) const;
  std::string str() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const mpq_class& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<StrandGenerator, mpq_class> terms_;
};

/// One generator per element of [e, pi0(I,J)], in interval order; empty when
/// I is not below J.
std::vector<StrandGenerator> basis(const IndexSet& I, const IndexSet& J);

/// Number of crossing pairs in w that involve four distinct strands and
/// appear in decreasing lexicographic order of their strand pairs.
int disjoint_disorder(const Word& w, int d);

/// Sign of the diagram w relative to the canonical word of p. Throws when w
/// is not a reduced word of p.
int relative_sign(const Word& w, const Permutation& p);

/// g: I -> J followed by h: J -> K.
AlgebraElement multiply(const StrandGenerator& g, const StrandGenerator& h);

/// Permutations and signs of the differential of any generator with
/// permutation p; only reduced resolutions survive.
std::vector<std::pair<Permutation, int>> differential_terms(const Permutation& p);

AlgebraElement differential(const StrandGenerator& g);
AlgebraElement differential(const AlgebraElement& x);
/// Extends multiply bilinearly; x followed by y.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// Sign and permutation level data of S_d, shared by every hom(I,J).
class PermTables {
 public:
  explicit PermTables(int d);

  int d() const { return d_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const Permutation& perm(int k) const { return perms_[static_cast<std::size_t>(k)]; }
  int index_of(const Permutation& p) const;
  int inv(int k) const { return inv_[static_cast<std::size_t>(k)]; }
  int identity() const { return identity_; }

  /// Diagram a followed by diagram b: (index of b*a, sign), or sign 0 when the
  /// product vanishes.
  std::pair<int, int> product(int a, int b) const { return prod_[static_cast<std::size_t>(a * size() + b)]; }
  /// Terms (index, sign) of the differential of the generator with permutation k.
  const std::vector<std::pair<int, int>>& diff(int k) const { return diff_[static_cast<std::size_t>(k)]; }

 private:
  int d_;
  int identity_ = 0;
  std::vector<Permutation> perms_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> inv_;
  std::vector<std::pair<int, int>> prod_;
  std::vector<std::vector<std::pair<int, int>>> diff_;
};

struct DgaReport {
  bool ok = true;
  int n = 0, d = 0;
  std::string field;
  long generators = 0;
  long pairs = 0;
  long triples = 0;
  long single_crossings = 0;
  std::string failure;
};

/// Checks d^2 = 0, the graded Leibniz rule on composable pairs,
/// associativity on composable triples and d(single crossing) = e_JI.
DgaReport verify_dga(int n, int d, const FieldSpec& f);

struct HomCohomology {
  IndexSet source;
  IndexSet target;
  Permutation top;
  /// degree -> dimension, for every degree from -inv(top) to 0
  std::map<int, int> dims;
};

struct H0Result {
  FinDimAlgebra algebra;
  std::vector<HomCohomology> blocks;
  /// Every hom(I,J) has cohomology only in degree 0, of dimension 1 exactly
  /// when pi0(I,J) = e.
  bool concentrated = true;
  IsoCertificate certificate;  // e_JI -> f_JI onto build_A(n,d)
};

/// Degree-0 cohomology of B(n,d) with its induced product.
H0Result h0_algebra(int n, int d, const FieldSpec& f);

}  // namespace strandalg
