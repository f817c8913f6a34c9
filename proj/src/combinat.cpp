#include "strandalg/combinat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace strandalg {

namespace {

std::strong_ordering colex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << sep;
    os << v[k];
  }
  return os.str();
}

void check_same_shape(int n1, int d1, int n2, int d2) {
  if (n1 != n2 || d1 != d2) {
    throw std::invalid_argument("index sets have different ambient size or cardinality");
  }
}

}  // namespace

IndexSet::IndexSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n_ < 0) throw std::invalid_argument("IndexSet: negative ambient size");
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] < 1 || elems_[k] > n_) {
      throw std::invalid_argument("IndexSet: element " + std::to_string(elems_[k]) +
                                  " outside [1," + std::to_string(n_) + "]");
    }
    if (k && elems_[k - 1] >= elems_[k]) {
      throw std::invalid_argument("IndexSet: elements must be strictly increasing");
    }
  }
}

IndexSet IndexSet::with_zero(int n, std::vector<int> elems) {
  IndexSet s;
  s.n_ = n;
  s.zero_allowed_ = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k] < 0 || elems[k] > n) {
      throw std::invalid_argument("IndexSet: element outside [0,n]");
    }
    if (k && elems[k - 1] >= elems[k]) {
      throw std::invalid_argument("IndexSet: elements must be strictly increasing");
    }
  }
  s.elems_ = std::move(elems);
  return s;
}

IndexSet IndexSet::parse(int n, const std::string& text) {
  std::vector<int> v;
  bool zero = false;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      v.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("IndexSet: cannot parse '" + text + "'");
      v.push_back(c - '0');
    }
  }
  std::sort(v.begin(), v.end());
  for (int x : v) zero = zero || x == 0;
  return zero ? with_zero(n, std::move(v)) : IndexSet(n, std::move(v));
}

bool IndexSet::contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::string IndexSet::str() const { return "{" + join(elems_, ",") + "}"; }

std::string IndexSet::compact() const { return n_ <= 9 ? join(elems_, "") : join(elems_, ","); }

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  return colex(a.elems_, b.elems_);
}

MultiIndexSet::MultiIndexSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] < 1 || elems_[k] > n_) throw std::invalid_argument("MultiIndexSet: element out of range");
    if (k && elems_[k - 1] > elems_[k]) {
      throw std::invalid_argument("MultiIndexSet: elements must be weakly increasing");
    }
  }
}

bool MultiIndexSet::is_degenerate() const {
  for (std::size_t k = 1; k < elems_.size(); ++k) {
    if (elems_[k - 1] == elems_[k]) return true;
  }
  return false;
}

std::string MultiIndexSet::str() const { return "{" + join(elems_, ",") + "}"; }

std::strong_ordering operator<=>(const MultiIndexSet& a, const MultiIndexSet& b) {
  return colex(a.elems_, b.elems_);
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// Colex enumeration of increasing (strict) or non-decreasing sequences with
// values in [lo, hi].
std::vector<std::vector<int>> colex_sequences(int lo, int hi, int d, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  // Fill position k (from the top) given the bound for its value.
  std::function<void(int, int)> rec = [&](int k, int top) {
    if (k < 0) {
      out.push_back(cur);
      return;
    }
    int low = strict ? lo + k : lo;
    for (int v = low; v <= top; ++v) {
      cur[static_cast<std::size_t>(k)] = v;
      rec(k - 1, strict ? v - 1 : v);
    }
  };
  if (d == 0) return {{}};
  rec(d - 1, hi);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return colex(a, b) == std::strong_ordering::less; });
  return out;
}

}  // namespace

std::vector<IndexSet> enum_subsets(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("enum_subsets: negative argument");
  std::vector<IndexSet> out;
  if (d > n) return out;
  for (auto& v : colex_sequences(1, n, d, true)) out.emplace_back(n, std::move(v));
  return out;
}

std::vector<IndexSet> enum_subsets_with_zero(int n, int d) {
  std::vector<IndexSet> out;
  if (d > n + 1) return out;
  for (auto& v : colex_sequences(0, n, d, true)) out.push_back(IndexSet::with_zero(n, std::move(v)));
  return out;
}

std::vector<MultiIndexSet> enum_multisets(int n, int d) {
  std::vector<MultiIndexSet> out;
  if (n == 0 && d > 0) return out;
  for (auto& v : colex_sequences(1, n, d, false)) out.emplace_back(n, std::move(v));
  return out;
}

bool poset_leq(const IndexSet& I, const IndexSet& J) {
  check_same_shape(I.n(), I.size(), J.n(), J.size());
  for (int a = 0; a < I.size(); ++a) {
    if (I[a] > J[a]) return false;
  }
  return true;
}

bool poset_leq(const MultiIndexSet& I, const MultiIndexSet& J) {
  check_same_shape(I.n(), I.size(), J.n(), J.size());
  for (int a = 0; a < I.size(); ++a) {
    if (I[a] > J[a]) return false;
  }
  return true;
}

int rank(const IndexSet& I) {
  int r = 0;
  for (int a = 0; a < I.size(); ++a) r += I[a] - (a + 1);
  return r;
}

IndexSet complement(const IndexSet& I) {
  std::vector<int> out;
  for (int x = 1; x <= I.n(); ++x) {
    if (!I.contains(x)) out.push_back(x);
  }
  return IndexSet(I.n(), std::move(out));
}

bool interleaved(const IndexSet& I, const IndexSet& J) {
  if (!poset_leq(I, J)) return false;
  for (int a = 0; a + 1 < I.size(); ++a) {
    if (J[a] >= I[a + 1]) return false;
  }
  return true;
}

bool unit_diff(const IndexSet& I, const IndexSet& J) {
  check_same_shape(I.n(), I.size(), J.n(), J.size());
  for (int a = 0; a < I.size(); ++a) {
    int gap = J[a] - I[a];
    if (gap < 0 || gap > 1) return false;
  }
  return true;
}

bool factors_through_degenerate(const MultiIndexSet& I, const MultiIndexSet& J) {
  if (!poset_leq(I, J)) throw std::invalid_argument("factors_through_degenerate: I is not below J");
  const int d = I.size();
  std::vector<int> k(static_cast<std::size_t>(d));
  // Depth-first over weakly increasing K with i_a <= k_a <= j_a.
  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == d) return MultiIndexSet(I.n(), k).is_degenerate();
    int low = std::max(I[a], a ? k[static_cast<std::size_t>(a - 1)] : 1);
    for (int v = low; v <= J[a]; ++v) {
      k[static_cast<std::size_t>(a)] = v;
      if (rec(a + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

MultiIndexSet as_multiset(const IndexSet& I) { return MultiIndexSet(I.n(), I.elems()); }

}  // namespace strandalg
