#pragma once

// Basic finite-dimensional algebras given by structure constants, and the
// higher Auslander algebras A(n,d) together with their Koszul-graded
// relatives.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandalg/combinat.hpp"

namespace strandalg {

struct BasisElement {
  int source = 0;
  int target = 0;
  int degree = 0;
  std::string label;
};

/// An algebra with a complete set of orthogonal idempotents, one per object,
/// and a basis of elements each living in a single e_target A e_source.
///
/// Products are written as composition: mul(x, y) means "x after y" and is
/// only nonzero when target(y) == source(x).
class FinDimAlgebra {
 public:
  struct Term {
    int index;
    mpq_class coeff;
  };

  std::vector<IndexSet> objects;
  std::vector<BasisElement> basis;
  /// Basis index of the idempotent at each object.
  std::vector<int> idempotent;
  /// (x, y) -> x*y, absent when zero.
  std::map<std::pair<int, int>, Term> products;

  int dim() const { return static_cast<int>(basis.size()); }
  int num_objects() const { return static_cast<int>(objects.size()); }
  int object_index(const IndexSet& I) const;  // -1 when absent

  std::optional<Term> mul(int x, int y) const;
  /// Basis elements with the given source (resp. target), in basis order.
  std::vector<int> from(int source) const;
  std::vector<int> into(int target) const;
  /// The unique basis element source -> target, or -1. Throws when not unique.
  int element(int source, int target) const;

  FinDimAlgebra opposite() const;

  /// Empty when the axioms hold, otherwise a description of the first failure.
  std::string check_axioms() const;

  /// Rebuilds the lookup tables; call after editing objects or basis.
  void reindex();

 private:
  std::map<std::vector<int>, int> object_lookup_;
  std::map<std::pair<int, int>, std::vector<int>> endpoint_lookup_;
  std::vector<std::vector<int>> from_, into_;
};

/// A basis and object bijection that carries structure constants across.
struct IsoCertificate {
  bool ok = false;
  std::vector<int> object_map;
  std::vector<int> basis_map;
  std::string failure;
};

/// Verifies that object_map / basis_map define an isomorphism A -> B
/// (degrees are ignored when ignore_degrees is set).
IsoCertificate certify_isomorphism(const FinDimAlgebra& A, const FinDimAlgebra& B,
                                   std::vector<int> object_map, std::vector<int> basis_map,
                                   bool ignore_degrees = false);

/// For algebras with at most one basis element per (source, target): matches
/// objects through obj_fn and elements through their endpoints.
template <class ObjFn>
IsoCertificate certify_by_endpoints(const FinDimAlgebra& A, const FinDimAlgebra& B, ObjFn obj_fn,
                                    bool ignore_degrees = false) {
  IsoCertificate cert;
  std::vector<int> omap;
  for (const auto& I : A.objects) {
    int k = B.object_index(obj_fn(I));
    if (k < 0) {
      cert.failure = "object " + I.str() + " has no partner";
      return cert;
    }
    omap.push_back(k);
  }
  std::vector<int> bmap;
  for (const auto& b : A.basis) {
    int k = B.element(omap[static_cast<std::size_t>(b.source)], omap[static_cast<std::size_t>(b.target)]);
    if (k < 0) {
      cert.failure = "basis element " + b.label + " has no partner";
      return cert;
    }
    bmap.push_back(k);
  }
  return certify_isomorphism(A, B, std::move(omap), std::move(bmap), ignore_degrees);
}

/// Basis f_JI (source I, target J) for interleaved pairs; f_KJ f_JI = f_KI
/// when (I,K) is interleaved, else 0.
FinDimAlgebra build_A(int n, int d);

struct MultichooseResult {
  FinDimAlgebra algebra;
  /// Number of d-multisets, degenerate ones included.
  int multiset_count = 0;
  IsoCertificate certificate;  // against build_A(n,d)
};

/// Incidence algebra of the multiset poset modulo the ideal generated by the
/// idempotents at degenerate multisets.
MultichooseResult build_A_multichoose(int n, int d);

/// Basis g_IJ for unit-difference pairs I <= J, with source J, target I and
/// degree rk J - rk I; g_IJ g_JK = g_IK when (I,K) is again a unit-difference
/// pair.
FinDimAlgebra build_koszul_graded(int n, int d);

/// Degree-m basis elements that are not products of m degree-one elements.
/// Empty when the graded algebra is generated in degrees 0 and 1.
std::vector<int> not_generated_in_degree_one(const FinDimAlgebra& A);

struct SharpResult {
  FinDimAlgebra regraded;  // Koszul-graded algebra with all degrees set to 0
  FinDimAlgebra target;    // build_A(n, n-d)
  IsoCertificate certificate;
};

/// Complement bijection I -> {1..n}\I, g_IJ -> f_{I'J'}.
SharpResult iso_sharp(int n, int d);

/// The gap condition deciding unit-difference pairs through complements:
/// J' <= I' and u_b < v_{b+1}, with u = I', v = J'.
bool complement_gap_condition(const IndexSet& I, const IndexSet& J);
/// The same with the inequality the other way round (v_b < u_{b+1}).
bool complement_gap_condition_reversed(const IndexSet& I, const IndexSet& J);

/// Subtract 1 modulo n+1 from every element of a subset of {0..n}.
IndexSet rotate(const IndexSet& I);

/// Text table of which objects of A(n,d) admit morphisms, and of the
/// Koszul-graded pattern with degrees. Deterministic; used for golden files.
std::string hom_pattern_table(int n, int d);

/// Quiver with relations: arrows are the degree-one generators (covers).
std::string algebra_dot(const FinDimAlgebra& A, const std::string& name);

}  // namespace strandalg
