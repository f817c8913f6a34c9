#include "strandalg/bruhat_cx.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "strandalg/strands.hpp"

namespace strandalg {

namespace {

int cover_index(const BruhatInterval& iv, int lower, int upper) {
  auto it = std::lower_bound(iv.covers.begin(), iv.covers.end(), std::make_pair(lower, upper));
  if (it == iv.covers.end() || *it != std::make_pair(lower, upper)) return -1;
  return static_cast<int>(it - iv.covers.begin());
}

}  // namespace

int Signature::sign(const Permutation& lower, const Permutation& upper) const {
  const int c = cover_index(interval, interval.index_of(lower), interval.index_of(upper));
  if (c < 0) throw std::invalid_argument("Signature::sign: " + lower.str() + " <| " + upper.str() + " is not a cover");
  return signs[static_cast<std::size_t>(c)];
}

Signature canonical_signature(const Permutation& p) {
  Signature s;
  s.interval = interval(p);
  s.signs.assign(s.interval.covers.size(), 0);
  for (std::size_t u = 0; u < s.interval.elems.size(); ++u) {
    for (const auto& [q, c] : differential_terms(s.interval.elems[u])) {
      const int idx = cover_index(s.interval, s.interval.index_of(q), static_cast<int>(u));
      if (idx < 0) throw std::logic_error("canonical_signature: differential term is not a cover");
      s.signs[static_cast<std::size_t>(idx)] = c;
    }
  }
  for (int x : s.signs) {
    if (x != 1 && x != -1) throw std::logic_error("canonical_signature: some cover missing from the differential");
  }
  return s;
}

Signature signature_from_edges(const Permutation& top,
                               const std::map<std::pair<Permutation, Permutation>, int>& edges) {
  Signature s;
  s.interval = interval(top);
  s.signs.assign(s.interval.covers.size(), 0);
  for (const auto& [e, sign] : edges) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("signature_from_edges: signs must be +-1");
    const int c = cover_index(s.interval, s.interval.index_of(e.first), s.interval.index_of(e.second));
    if (c < 0) throw std::invalid_argument("signature_from_edges: " + e.first.str() + " <| " + e.second.str() + " is not a cover");
    s.signs[static_cast<std::size_t>(c)] = sign;
  }
  for (int x : s.signs) {
    if (x == 0) throw std::invalid_argument("signature_from_edges: some cover has no sign");
  }
  return s;
}

std::vector<Square> squares(const BruhatInterval& iv) {
  const int m = static_cast<int>(iv.elems.size());
  std::vector<std::vector<int>> up(static_cast<std::size_t>(m));
  for (const auto& [lo, hi] : iv.covers) up[lo].push_back(hi);
  std::vector<Square> out;
  for (int b = 0; b < m; ++b) {
    std::map<int, std::vector<int>> via;  // top -> middles
    for (int mid : up[b]) {
      for (int t : up[mid]) via[t].push_back(mid);
    }
    for (const auto& [t, mids] : via) {
      // length-two Bruhat intervals are diamonds
      if (mids.size() != 2) throw std::logic_error("squares: length-two interval with " + std::to_string(mids.size()) + " middle elements");
      out.push_back({b, mids[0], mids[1], t});
    }
  }
  return out;
}

std::vector<Square> unbalanced_squares(const Signature& s) {
  std::vector<Square> bad;
  const auto& iv = s.interval;
  auto e = [&](int lo, int hi) { return s.signs[static_cast<std::size_t>(cover_index(iv, lo, hi))]; };
  for (const auto& q : squares(iv)) {
    if (e(q.left, q.top) * e(q.bottom, q.left) + e(q.right, q.top) * e(q.bottom, q.right) != 0) bad.push_back(q);
  }
  return bad;
}

Signature flip_vertex(const Signature& s, const Permutation& v) {
  const int k = s.interval.index_of(v);
  if (k < 0) throw std::invalid_argument("flip_vertex: " + v.str() + " is not in the interval");
  Signature out = s;
  for (std::size_t c = 0; c < out.signs.size(); ++c) {
    const auto& [lo, hi] = out.interval.covers[c];
    if (lo == k || hi == k) out.signs[c] = -out.signs[c];
  }
  return out;
}

std::optional<std::vector<int>> flip_equivalent(const Signature& a, const Signature& b) {
  if (a.interval.elems != b.interval.elems) throw std::invalid_argument("flip_equivalent: different intervals");
  // Two-colour the Hasse graph so that an edge joins different colours
  // exactly when the two signatures disagree on it.
  const int m = static_cast<int>(a.interval.elems.size());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < a.signs.size(); ++c) {
    const auto& [lo, hi] = a.interval.covers[c];
    const int parity = a.signs[c] != b.signs[c] ? 1 : 0;
    adj[lo].emplace_back(hi, parity);
    adj[hi].emplace_back(lo, parity);
  }
  std::vector<int> colour(static_cast<std::size_t>(m), -1);
  for (int start = 0; start < m; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, parity] : adj[u]) {
        const int want = colour[u] ^ parity;
        if (colour[v] < 0) {
          colour[v] = want;
          queue.push_back(v);
        } else if (colour[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<int> flips;
  for (int u = 0; u < m; ++u) {
    if (colour[u] == 1) flips.push_back(u);
  }
  return flips;
}

int ChainComplex::dim(int degree) const {
  if (degree < lo || degree > hi()) return 0;
  return static_cast<int>(labels[static_cast<std::size_t>(degree - lo)].size());
}

Matrix ChainComplex::d(int degree) const {
  if (degree < lo || degree > hi()) return Matrix(dim(degree + 1), 0);
  return diffs[static_cast<std::size_t>(degree - lo)];
}

std::optional<int> ChainComplex::square_failure() const {
  for (int k = lo; k < hi(); ++k) {
    if (!(d(k + 1) * d(k)).reduced(field).is_zero()) return k;
  }
  return std::nullopt;
}

ChainComplex interval_complex(const Permutation& p, const Signature& s, const FieldSpec& f) {
  if (s.interval.top != p) throw std::invalid_argument("interval_complex: signature belongs to another interval");
  if (!is_balanced(s)) throw std::invalid_argument("interval_complex: signature is not balanced");
  const auto& iv = s.interval;
  const int L = inv_count(p);
  ChainComplex c;
  c.field = f;
  c.lo = -L;
  c.labels.resize(static_cast<std::size_t>(L + 1));
  std::vector<int> pos(iv.elems.size());  // position within its degree
  for (std::size_t k = 0; k < iv.elems.size(); ++k) {
    auto& lab = c.labels[static_cast<std::size_t>(L - iv.inv[k])];
    pos[k] = static_cast<int>(lab.size());
    lab.push_back(iv.elems[k].str());
  }
  for (int deg = -L; deg <= 0; ++deg) c.diffs.emplace_back(c.dim(deg + 1), c.dim(deg));
  // upper (degree -inv) maps to lower (degree -inv + 1)
  for (std::size_t e = 0; e < iv.covers.size(); ++e) {
    const auto& [lo, hi] = iv.covers[e];
    c.diffs[static_cast<std::size_t>(L - iv.inv[hi])].at(pos[lo], pos[hi]) = f.reduce(s.signs[e]);
  }
  if (auto bad = c.square_failure()) {
    throw std::logic_error("interval_complex: d^2 != 0 at degree " + std::to_string(*bad));
  }
  return c;
}

std::map<int, int> homology(const ChainComplex& c) {
  std::map<int, int> out;
  for (int k = c.lo; k <= c.hi(); ++k) {
    const int out_rank = rank(c.d(k), c.field);
    const int in_rank = k > c.lo ? rank(c.d(k - 1), c.field) : 0;
    out[k] = c.dim(k) - out_rank - in_rank;
  }
  return out;
}

IntegerHomology integer_homology(const ChainComplex& c) {
  IntegerHomology h;
  const FieldSpec q = FieldSpec::rationals();
  for (int k = c.lo; k <= c.hi(); ++k) {
    const int out_rank = rank(c.d(k), q);
    std::vector<mpz_class> torsion;
    int in_rank = 0;
    if (k > c.lo) {
      for (const auto& x : snf(c.d(k - 1))) {
        ++in_rank;
        if (x > 1) torsion.push_back(x);
      }
    }
    h.free_rank[k] = c.dim(k) - out_rank - in_rank;
    h.torsion[k] = torsion;
  }
  return h;
}

std::string signature_dot(const Signature& s) {
  std::ostringstream os;
  const auto& iv = s.interval;
  os << "graph \"bruhat_" << iv.top.str() << "\" {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < iv.elems.size(); ++k) {
    os << "  v" << k << " [label=\"" << iv.elems[k].str() << "\"];\n";
  }
  for (std::size_t e = 0; e < iv.covers.size(); ++e) {
    os << "  v" << iv.covers[e].first << " -- v" << iv.covers[e].second << " [label=\""
       << (s.signs[e] > 0 ? "+" : "-") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace strandalg
