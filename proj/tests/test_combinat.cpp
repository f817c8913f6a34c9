#include <doctest.h>

#include <algorithm>

#include "strandalg/combinat.hpp"

using namespace strandalg;

namespace {

// Subsets of {1..n} of size d by bitmask, sorted colex.
std::vector<std::vector<int>> brute_subsets(int n, int d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i + 1);
    }
    if (static_cast<int>(s.size()) == d) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    return a < b;
  });
  return out;
}

bool brute_interleaved(const std::vector<int>& I, const std::vector<int>& J) {
  for (std::size_t a = 0; a < I.size(); ++a) {
    if (I[a] > J[a]) return false;
    if (a + 1 < I.size() && !(J[a] < I[a + 1])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  std::vector<std::vector<std::int64_t>> pascal(31, std::vector<std::int64_t>(31, 0));
  for (int n = 0; n <= 30; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  }
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("subsets are enumerated in colex order") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto got = enum_subsets(n, d);
      const auto want = brute_subsets(n, d);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].elems() == want[k]);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
  CHECK(enum_subsets_with_zero(3, 2).size() == 6);
  CHECK(enum_subsets_with_zero(3, 2).front().elems() == std::vector<int>{0, 1});
}

TEST_CASE("multisets count and degeneracy") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 4; ++d) {
      const auto ms = enum_multisets(n, d);
      CHECK(static_cast<std::int64_t>(ms.size()) == binomial(n + d - 1, d));
      const auto nondegenerate = std::count_if(ms.begin(), ms.end(), [](const auto& m) { return !m.is_degenerate(); });
      CHECK(nondegenerate == binomial(n, d));
    }
  }
}

TEST_CASE("parsing and printing") {
  const IndexSet I = IndexSet::parse(5, "1,3,4");
  CHECK(I.str() == "{1,3,4}");
  CHECK(I.compact() == "134");
  CHECK(I.contains(3));
  CHECK_FALSE(I.contains(2));
  CHECK_THROWS(IndexSet::parse(5, "1,6"));
  CHECK(IndexSet::parse(5, "3,1") == IndexSet(5, {1, 3}));
  CHECK(IndexSet::parse(5, "134") == I);
  CHECK_THROWS(IndexSet::parse(5, "1,1"));
  CHECK_THROWS(IndexSet::parse(5, "x"));
  CHECK(IndexSet(12, {2, 11}).compact() == "2,11");
}

TEST_CASE("rank, complement and the order") {
  CHECK(rank(IndexSet(5, {1, 2, 3})) == 0);
  CHECK(rank(IndexSet(5, {3, 4, 5})) == 6);
  CHECK(complement(IndexSet(5, {2, 4})).elems() == std::vector<int>{1, 3, 5});
  CHECK(poset_leq(IndexSet(5, {1, 3}), IndexSet(5, {2, 3})));
  CHECK_FALSE(poset_leq(IndexSet(5, {1, 4}), IndexSet(5, {2, 3})));
  CHECK_THROWS(poset_leq(IndexSet(5, {1}), IndexSet(5, {2, 3})));
  for (int n = 1; n <= 7; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (const auto& I : enum_subsets(n, d)) {
        CHECK(complement(complement(I)) == I);
        // the rank of I and of its complement add up to d(n-d)
        CHECK(rank(I) + rank(complement(I)) == d * (n - d));
      }
    }
  }
}

TEST_CASE("interleaved pairs number C(n+d, 2d)") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= std::min(n, 4); ++d) {
      const auto subs = enum_subsets(n, d);
      std::int64_t count = 0;
      for (const auto& I : subs) {
        for (const auto& J : subs) {
          const bool want = brute_interleaved(I.elems(), J.elems());
          CHECK(interleaved(I, J) == want);
          count += want;
        }
      }
      CHECK(count == binomial(n + d, 2 * d));
    }
  }
}

TEST_CASE("unit difference pairs") {
  CHECK(unit_diff(IndexSet(4, {1, 2}), IndexSet(4, {2, 3})));
  CHECK_FALSE(unit_diff(IndexSet(4, {1, 4}), IndexSet(4, {3, 4})));
  CHECK_FALSE(unit_diff(IndexSet(4, {2, 3}), IndexSet(4, {1, 2})));
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d < n; ++d) {
      for (const auto& I : enum_subsets(n, d)) {
        for (const auto& J : enum_subsets(n, d)) {
          bool want = true;
          for (int a = 0; a < d; ++a) want = want && (J[a] - I[a] == 0 || J[a] - I[a] == 1);
          CHECK(unit_diff(I, J) == want);
        }
      }
    }
  }
}

TEST_CASE("a pair of subsets survives exactly when no degenerate multiset lies between") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= std::min(n, 3); ++d) {
      for (const auto& I : enum_subsets(n, d)) {
        for (const auto& J : enum_subsets(n, d)) {
          if (!poset_leq(I, J)) continue;
          CHECK(factors_through_degenerate(as_multiset(I), as_multiset(J)) == !interleaved(I, J));
        }
      }
    }
  }
  CHECK_THROWS(factors_through_degenerate(MultiIndexSet(3, {2, 3}), MultiIndexSet(3, {1, 2})));
}
