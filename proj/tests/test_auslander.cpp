#include <doctest.h>

#include "strandalg/auslander.hpp"

using namespace strandalg;

TEST_CASE("A(3,2) is small and explicit") {
  const FinDimAlgebra A = build_A(3, 2);
  CHECK(A.dim() == 5);
  CHECK(A.num_objects() == 3);
  CHECK(A.check_axioms().empty());
  const int i12 = A.object_index(IndexSet(3, {1, 2}));
  const int i13 = A.object_index(IndexSet(3, {1, 3}));
  const int i23 = A.object_index(IndexSet(3, {2, 3}));
  const int x = A.element(i12, i13), y = A.element(i13, i23);
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  CHECK(A.element(i12, i23) == -1);
  CHECK_FALSE(A.mul(y, x).has_value());  // the composite factors through {2,2}
}

TEST_CASE("structure constants of A(n,d)") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= std::min(n, 3); ++d) {
      const FinDimAlgebra A = build_A(n, d);
      CHECK(A.check_axioms().empty());
      CHECK(A.dim() == binomial(n + d, 2 * d));
      for (int a = 0; a < A.num_objects(); ++a) {
        for (int b = 0; b < A.num_objects(); ++b) {
          CHECK((A.element(a, b) >= 0) == interleaved(A.objects[a], A.objects[b]));
          for (int c = 0; c < A.num_objects(); ++c) {
            const int x = A.element(a, b), y = A.element(b, c);
            if (x < 0 || y < 0) continue;
            const auto p = A.mul(y, x);
            CHECK(p.has_value() == interleaved(A.objects[a], A.objects[c]));
            if (p) {
              CHECK(p->index == A.element(a, c));
              CHECK(p->coeff == 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("the multiset model agrees") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= std::min(n, 3); ++d) {
      const MultichooseResult r = build_A_multichoose(n, d);
      CHECK(r.multiset_count == binomial(n + d - 1, d));
      CHECK_MESSAGE(r.certificate.ok, r.certificate.failure);
    }
  }
}

TEST_CASE("the opposite algebra reverses arrows") {
  const FinDimAlgebra A = build_A(4, 2);
  const FinDimAlgebra op = A.opposite();
  CHECK(op.check_axioms().empty());
  for (int x = 0; x < A.dim(); ++x) {
    CHECK(op.basis[x].source == A.basis[x].target);
    CHECK(op.basis[x].target == A.basis[x].source);
  }
}

TEST_CASE("Koszul-graded algebra") {
  // pinned at (2,1): one arrow from {2} to {1} of degree 1
  const FinDimAlgebra K21 = build_koszul_graded(2, 1);
  REQUIRE(K21.dim() == 3);
  const int g = K21.element(K21.object_index(IndexSet(2, {2})), K21.object_index(IndexSet(2, {1})));
  REQUIRE(g >= 0);
  CHECK(K21.basis[g].degree == 1);
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      const FinDimAlgebra K = build_koszul_graded(n, d);
      CHECK(K.check_axioms().empty());
      CHECK(not_generated_in_degree_one(K).empty());
      long pairs = 0;
      for (const auto& I : K.objects) {
        for (const auto& J : K.objects) pairs += unit_diff(I, J);
      }
      CHECK(K.dim() == pairs);
      for (const auto& b : K.basis) {
        CHECK(unit_diff(K.objects[b.target], K.objects[b.source]));
        CHECK(b.degree == rank(K.objects[b.source]) - rank(K.objects[b.target]));
      }
    }
  }
}

TEST_CASE("complement duality") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= n; ++d) {
      const SharpResult s = iso_sharp(n, d);
      CHECK_MESSAGE(s.certificate.ok, s.certificate.failure);
      CHECK(s.regraded.dim() == s.target.dim());
    }
  }
  // the gap condition with u_b < v_{b+1} describes unit-difference pairs ...
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (const auto& I : enum_subsets(n, d)) {
        for (const auto& J : enum_subsets(n, d)) CHECK(complement_gap_condition(I, J) == unit_diff(I, J));
      }
    }
  }
  // ... while the other inequality does not
  const IndexSet I(4, {1, 4}), J(4, {3, 4});
  CHECK_FALSE(unit_diff(I, J));
  CHECK(complement_gap_condition_reversed(I, J));
}

TEST_CASE("rotation of subsets of {0..n}") {
  CHECK(rotate(IndexSet::with_zero(4, {0, 2})).elems() == std::vector<int>{1, 4});
  for (const auto& I : enum_subsets_with_zero(5, 3)) {
    IndexSet J = I;
    for (int k = 0; k < 6; ++k) J = rotate(J);
    CHECK(J == I);
  }
}

TEST_CASE("rendered tables and quivers are deterministic") {
  CHECK(hom_pattern_table(4, 2) == hom_pattern_table(4, 2));
  const std::string dot = algebra_dot(build_A(3, 1), "A31");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot == algebra_dot(build_A(3, 1), "A31"));
}

TEST_CASE("isomorphism certificates reject wrong maps") {
  const FinDimAlgebra A = build_A(3, 1);
  const FinDimAlgebra B = build_A(3, 1);
  std::vector<int> omap{0, 1, 2}, bmap;
  for (int x = 0; x < A.dim(); ++x) bmap.push_back(x);
  CHECK(certify_isomorphism(A, B, omap, bmap).ok);
  std::swap(bmap[0], bmap[1]);
  CHECK_FALSE(certify_isomorphism(A, B, omap, bmap).ok);
}
