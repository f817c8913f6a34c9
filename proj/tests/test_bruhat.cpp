#include <doctest.h>

#include <algorithm>
#include <random>

#include "strandalg/bruhat_cx.hpp"

using namespace strandalg;

namespace {

const FieldSpec kFields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};

}  // namespace

TEST_CASE("the S3 interval complex") {
  const Permutation w0 = Permutation::parse("321");
  const ChainComplex c = interval_complex(w0, canonical_signature(w0), FieldSpec::rationals());
  CHECK(c.lo == -3);
  CHECK(c.hi() == 0);
  CHECK(c.dim(-3) == 1);
  CHECK(c.dim(-2) == 2);
  CHECK(c.dim(-1) == 2);
  CHECK(c.dim(0) == 1);
  // the last differential hits e with both single crossings
  CHECK(c.d(-1) == Matrix::from_rows({{1, 1}}));
  for (const auto& f : kFields) {
    for (const auto& [k, h] : homology(interval_complex(w0, canonical_signature(w0), f))) CHECK(h == 0);
  }
  CHECK(squares(interval(w0)).size() == 4);
}

TEST_CASE("every nontrivial interval is acyclic, also over Z") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : all_permutations(d)) {
      const Signature s = canonical_signature(p);
      CHECK(is_balanced(s));
      for (const auto& f : kFields) {
        const auto h = homology(interval_complex(p, s, f));
        for (const auto& [k, v] : h) CHECK(v == (p.is_identity() && k == 0 ? 1 : 0));
      }
      const IntegerHomology z = integer_homology(interval_complex(p, s, FieldSpec::rationals()));
      for (const auto& [k, v] : z.free_rank) {
        CHECK(v == (p.is_identity() && k == 0 ? 1 : 0));
        CHECK(z.torsion.at(k).empty());
      }
    }
  }
}

TEST_CASE("vertex flips preserve balance and homology") {
  std::mt19937 rng(17);
  for (int d = 2; d <= 4; ++d) {
    for (const auto& p : all_permutations(d)) {
      const Signature s = canonical_signature(p);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(s.interval.elems.size()) - 1);
      for (int trial = 0; trial < 10; ++trial) {
        Signature t = s;
        std::vector<int> flipped(s.interval.elems.size(), 0);
        for (int k = 0; k < 5; ++k) {
          const int v = pick(rng);
          flipped[v] ^= 1;
          t = flip_vertex(t, s.interval.elems[v]);
        }
        CHECK(is_balanced(t));
        const auto witness = flip_equivalent(s, t);
        REQUIRE(witness.has_value());
        // the witness is the flipped set up to complementing a component
        Signature back = t;
        for (int v : *witness) back = flip_vertex(back, s.interval.elems[v]);
        CHECK(back.signs == s.signs);
        for (const auto& f : kFields) CHECK(homology(interval_complex(p, t, f)) == homology(interval_complex(p, s, f)));
      }
    }
  }
}

TEST_CASE("a single edge sign change unbalances the signature") {
  const Permutation w0 = Permutation::longest(3);
  Signature s = canonical_signature(w0);
  s.signs[0] = -s.signs[0];
  CHECK_FALSE(is_balanced(s));
  CHECK_FALSE(flip_equivalent(canonical_signature(w0), s).has_value());
  CHECK_THROWS(interval_complex(w0, s, FieldSpec::rationals()));
}

TEST_CASE("signatures from explicit edges") {
  const Permutation p = Permutation::parse("21");
  std::map<std::pair<Permutation, Permutation>, int> edges{{{Permutation::identity(2), p}, -1}};
  const Signature s = signature_from_edges(p, edges);
  CHECK(s.sign(Permutation::identity(2), p) == -1);
  CHECK_THROWS(signature_from_edges(p, {}));
  CHECK_THROWS(s.sign(p, p));
  CHECK(signature_dot(s).find("v0 -- v1 [label=\"-\"]") != std::string::npos);
}

TEST_CASE("every balanced signature is a vertex flip of the canonical one") {
  // Over F2 a signature is a vector on the edges; balance is an affine
  // condition on squares and flips add coboundaries. All balanced signatures
  // are flip equivalent iff the square-condition kernel equals the coboundaries.
  const FieldSpec f2 = FieldSpec::prime(2);
  for (int d = 2; d <= 4; ++d) {
    for (const auto& p : all_permutations(d)) {
      if (p.is_identity()) continue;
      const BruhatInterval iv = interval(p);
      const int E = static_cast<int>(iv.covers.size()), V = static_cast<int>(iv.elems.size());
      const auto sq = squares(iv);
      auto edge = [&](int lo, int hi) {
        return static_cast<int>(std::find(iv.covers.begin(), iv.covers.end(), std::make_pair(lo, hi)) - iv.covers.begin());
      };
      Matrix S(static_cast<int>(sq.size()), E);
      for (std::size_t k = 0; k < sq.size(); ++k) {
        for (int e : {edge(sq[k].bottom, sq[k].left), edge(sq[k].bottom, sq[k].right), edge(sq[k].left, sq[k].top),
                      edge(sq[k].right, sq[k].top)}) {
          S.at(static_cast<int>(k), e) = 1;
        }
      }
      Matrix delta(E, V);
      for (int e = 0; e < E; ++e) {
        delta.at(e, iv.covers[e].first) = 1;
        delta.at(e, iv.covers[e].second) = 1;
      }
      CHECK((S * delta).reduced(f2).is_zero());
      CHECK(E - rank(S, f2) == rank(delta, f2));
      CHECK(rank(delta, f2) == V - 1);
    }
  }
}
