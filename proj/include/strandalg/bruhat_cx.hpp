#pragma once

// Signed Hasse diagrams of Bruhat intervals [e, p] and the complexes C[e, p]
// they span. An element q of the interval sits in degree -inv(q); the
// differential raises degree by one.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strandalg/exactla.hpp"
#include "strandalg/symgrp.hpp"

namespace strandalg {

struct Signature {
  BruhatInterval interval;
  /// One sign per entry of interval.covers.
  std::vector<int> signs;

  /// Sign of the cover lower <| upper; throws when it is not a cover.
  int sign(const Permutation& lower, const Permutation& upper) const;
};

/// Edge signs read off the strands differential: the sign of lower <| upper
/// is the coefficient of lower in the differential of upper.
Signature canonical_signature(const Permutation& p);

/// Builds a signature from explicit (lower, upper) -> sign entries; every
/// cover must be listed.
Signature signature_from_edges(const Permutation& top,
                               const std::map<std::pair<Permutation, Permutation>, int>& edges);

struct Square {
  int bottom, left, right, top;  // interval element indices
};

/// All length-two subintervals of the interval.
std::vector<Square> squares(const BruhatInterval& iv);

/// Squares on which the signs do not anticommute (empty when balanced).
std::vector<Square> unbalanced_squares(const Signature& s);
inline bool is_balanced(const Signature& s) { return unbalanced_squares(s).empty(); }

/// Negate every edge touching v.
Signature flip_vertex(const Signature& s, const Permutation& v);

/// A set of vertices whose flips turn a into b, or nullopt when none exists.
std::optional<std::vector<int>> flip_equivalent(const Signature& a, const Signature& b);

struct ChainComplex {
  FieldSpec field;
  int lo = 0;  // lowest degree; degrees run lo .. lo + size - 1
  std::vector<std::vector<std::string>> labels;
  /// diffs[k]: degree lo+k -> lo+k+1, shape dim(lo+k+1) x dim(lo+k). The
  /// last entry maps into the zero space.
  std::vector<Matrix> diffs;

  int hi() const { return lo + static_cast<int>(labels.size()) - 1; }
  int dim(int degree) const;
  /// Differential leaving the given degree.
  Matrix d(int degree) const;
  /// First degree where d o d != 0, or nullopt.
  std::optional<int> square_failure() const;
};

/// C[e, p] with the given signature. Throws when the signature is not
/// balanced or the differential does not square to zero.
ChainComplex interval_complex(const Permutation& p, const Signature& s, const FieldSpec& f);

/// degree -> dimension of cohomology over the complex's field.
std::map<int, int> homology(const ChainComplex& c);

struct IntegerHomology {
  std::map<int, int> free_rank;
  /// degree -> invariant factors > 1
  std::map<int, std::vector<mpz_class>> torsion;
};

/// Cohomology over Z via Smith normal form; needs integer entries.
IntegerHomology integer_homology(const ChainComplex& c);

/// Hasse diagram with signed edges.
std::string signature_dot(const Signature& s);

}  // namespace strandalg
