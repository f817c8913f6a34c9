#include "strandalg/strands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "strandalg/bruhat_cx.hpp"

namespace strandalg {

std::string StrandGenerator::str() const {
  return "(" + source.compact() + "->" + target.compact() + ", " + (perm.size() ? perm.str() : "()") + ")";
}

bool operator<(const StrandGenerator& a, const StrandGenerator& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  int ia = inv_count(a.perm), ib = inv_count(b.perm);
  if (ia != ib) return ia < ib;
  return a.perm < b.perm;
}

void AlgebraElement::add(const StrandGenerator& g, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

mpq_class AlgebraElement::coeff(const StrandGenerator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

AlgebraElement AlgebraElement::reduced(const FieldSpec& f) const {
  AlgebraElement out;
  for (const auto& [g, c] : terms_) out.add(g, f.reduce(c));
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << g.str();
  }
  return os.str();
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (const auto& [g, c] : b.terms_) out.add(g, c);
  return out;
}

AlgebraElement operator*(const mpq_class& c, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [g, x] : a.terms_) out.add(g, c * x);
  return out;
}

std::vector<StrandGenerator> basis(const IndexSet& I, const IndexSet& J) {
  std::vector<StrandGenerator> out;
  auto top = pi0(I, J);
  if (!top) return out;
  for (const auto& p : interval(*top).elems) out.push_back({I, J, p});
  return out;
}

int disjoint_disorder(const Word& w, int d) {
  const auto c = crossing_sequence(w, d);
  int D = 0;
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t t = s + 1; t < c.size(); ++t) {
      const bool disjoint = c[s].first != c[t].first && c[s].first != c[t].second &&
                            c[s].second != c[t].first && c[s].second != c[t].second;
      if (disjoint && c[t] < c[s]) ++D;
    }
  }
  return D;
}

int relative_sign(const Word& w, const Permutation& p) {
  const int d = p.size();
  if (!is_reduced(w, d) || word_to_perm(w, d) != p) {
    throw std::invalid_argument("relative_sign: word is not a reduced word of " + p.str());
  }
  const int diff = disjoint_disorder(w, d) - disjoint_disorder(canonical_word(p), d);
  return diff % 2 == 0 ? 1 : -1;
}

namespace {

// 0 when the concatenation has a double crossing, else the sign of the
// concatenated canonical words.
int concat_sign(const Permutation& first, const Permutation& second) {
  const Permutation composite = second * first;
  if (inv_count(composite) != inv_count(first) + inv_count(second)) return 0;
  Word w = canonical_word(first);
  const Word tail = canonical_word(second);
  w.insert(w.end(), tail.begin(), tail.end());
  return relative_sign(w, composite);
}

}  // namespace

std::vector<std::pair<Permutation, int>> differential_terms(const Permutation& p) {
  const Word w = canonical_word(p);
  const int k = static_cast<int>(w.size());
  const int d = p.size();
  std::vector<std::pair<Permutation, int>> out;
  for (int t = 1; t <= k; ++t) {
    Word rest = w;
    rest.erase(rest.begin() + (t - 1));
    const Permutation q = word_to_perm(rest, d);
    if (inv_count(q) != k - 1) continue;  // resolving made two strands cross twice
    const int position_sign = (k - t) % 2 == 0 ? 1 : -1;
    out.emplace_back(q, position_sign * relative_sign(rest, q));
  }
  return out;
}

AlgebraElement multiply(const StrandGenerator& g, const StrandGenerator& h) {
  if (g.target != h.source) throw std::invalid_argument("multiply: " + g.str() + " and " + h.str() + " do not compose");
  AlgebraElement out;
  const int s = concat_sign(g.perm, h.perm);
  if (s != 0) out.add({g.source, h.target, h.perm * g.perm}, s);
  return out;
}

AlgebraElement differential(const StrandGenerator& g) {
  AlgebraElement out;
  for (const auto& [q, s] : differential_terms(g.perm)) out.add({g.source, g.target, q}, s);
  return out;
}

AlgebraElement differential(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) out = out + c * differential(g);
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) {
      if (g.target != h.source) continue;
      out = out + (a * b) * multiply(g, h);
    }
  }
  return out;
}

PermTables::PermTables(int d) : d_(d), perms_(all_permutations(d)) {
  const int P = size();
  for (int k = 0; k < P; ++k) {
    index_[perms_[k].one_line()] = k;
    inv_.push_back(inv_count(perms_[k]));
    if (perms_[k].is_identity()) identity_ = k;
  }
  prod_.resize(static_cast<std::size_t>(P * P));
  for (int a = 0; a < P; ++a) {
    for (int b = 0; b < P; ++b) {
      const int s = concat_sign(perms_[a], perms_[b]);
      prod_[static_cast<std::size_t>(a * P + b)] = {s ? index_of(perms_[b] * perms_[a]) : -1, s};
    }
  }
  diff_.resize(static_cast<std::size_t>(P));
  for (int k = 0; k < P; ++k) {
    for (const auto& [q, s] : differential_terms(perms_[k])) diff_[k].emplace_back(index_of(q), s);
  }
}

int PermTables::index_of(const Permutation& p) const {
  auto it = index_.find(p.one_line());
  if (it == index_.end()) throw std::invalid_argument("PermTables: permutation of the wrong size");
  return it->second;
}

namespace {

// Integer vectors indexed by permutation, compared in the chosen field.
struct Accumulator {
  std::vector<long> c;
  explicit Accumulator(int P) : c(static_cast<std::size_t>(P), 0) {}
  void clear() { std::fill(c.begin(), c.end(), 0); }
};

bool vanishes(long x, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::Prime) return x % f.p == 0;
  return x == 0;
}

}  // namespace

DgaReport verify_dga(int n, int d, const FieldSpec& f) {
  DgaReport rep;
  rep.n = n;
  rep.d = d;
  rep.field = f.name();
  if (!f.is_field()) throw std::invalid_argument("verify_dga needs a field");
  const auto objs = enum_subsets(n, d);
  const int N = static_cast<int>(objs.size());
  const PermTables T(d);
  const int P = T.size();

  // allowed[i][j]: permutations in [e, pi0(I_i, I_j)], empty when I_i is not below I_j
  std::vector<std::vector<std::vector<int>>> allowed(static_cast<std::size_t>(N), std::vector<std::vector<int>>(static_cast<std::size_t>(N)));
  std::vector<std::vector<std::vector<char>>> member(static_cast<std::size_t>(N), std::vector<std::vector<char>>(static_cast<std::size_t>(N)));
  std::map<std::vector<int>, std::vector<int>> interval_cache;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      auto top = pi0(objs[i], objs[j]);
      member[i][j].assign(static_cast<std::size_t>(P), 0);
      if (!top) continue;
      auto it = interval_cache.find(top->one_line());
      if (it == interval_cache.end()) {
        std::vector<int> ks;
        for (const auto& p : interval(*top).elems) ks.push_back(T.index_of(p));
        it = interval_cache.emplace(top->one_line(), std::move(ks)).first;
      }
      allowed[i][j] = it->second;
      for (int k : it->second) member[i][j][k] = 1;
      rep.generators += static_cast<long>(it->second.size());
    }
  }

  auto gen = [&](int i, int j, int k) { return StrandGenerator{objs[i], objs[j], T.perm(k)}.str(); };
  auto fail = [&](const std::string& why) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = why;
    }
  };

  Accumulator acc(P);
  for (int i = 0; i < N && rep.ok; ++i) {
    for (int j = 0; j < N && rep.ok; ++j) {
      for (int k : allowed[i][j]) {
        acc.clear();
        for (const auto& [q, s] : T.diff(k)) {
          if (!member[i][j][q]) fail("differential of " + gen(i, j, k) + " leaves hom(I,J)");
          for (const auto& [r, s2] : T.diff(q)) acc.c[r] += s * s2;
        }
        for (int r = 0; r < P; ++r) {
          if (!vanishes(acc.c[r], f)) fail("d^2 != 0 on " + gen(i, j, k));
        }
        if (T.inv(k) == 1) {
          ++rep.single_crossings;
          const auto& t = T.diff(k);
          if (t.size() != 1 || t[0].first != T.identity() || !vanishes(t[0].second - 1, f)) {
            fail("differential of single crossing " + gen(i, j, k) + " is not e_JI");
          }
        }
      }
    }
  }

  // Leibniz on composable pairs g: I -> J, h: J -> K, then associativity.
  Accumulator lhs(P), rhs(P);
  for (int i = 0; i < N && rep.ok; ++i) {
    for (int j = 0; j < N && rep.ok; ++j) {
      if (allowed[i][j].empty()) continue;
      for (int k = 0; k < N && rep.ok; ++k) {
        if (allowed[j][k].empty()) continue;
        for (int g : allowed[i][j]) {
          for (int h : allowed[j][k]) {
            ++rep.pairs;
            lhs.clear();
            rhs.clear();
            const auto [hg, s] = T.product(g, h);
            if (s != 0) {
              if (!member[i][k][hg]) fail("product " + gen(j, k, h) + " * " + gen(i, j, g) + " leaves hom(I,K)");
              for (const auto& [r, s2] : T.diff(hg)) lhs.c[r] += s * s2;
            }
            for (const auto& [dh, s1] : T.diff(h)) {
              const auto [r, s2] = T.product(g, dh);
              if (s2) rhs.c[r] += s1 * s2;
            }
            const int sign_h = T.inv(h) % 2 == 0 ? 1 : -1;
            for (const auto& [dg, s1] : T.diff(g)) {
              const auto [r, s2] = T.product(dg, h);
              if (s2) rhs.c[r] += sign_h * s1 * s2;
            }
            for (int r = 0; r < P; ++r) {
              if (!vanishes(lhs.c[r] - rhs.c[r], f)) {
                fail("Leibniz fails on " + gen(j, k, h) + " * " + gen(i, j, g));
                break;
              }
            }
          }
        }
      }
    }
  }

  for (int i = 0; i < N && rep.ok; ++i) {
    for (int j = 0; j < N && rep.ok; ++j) {
      if (allowed[i][j].empty()) continue;
      for (int k = 0; k < N && rep.ok; ++k) {
        if (allowed[j][k].empty()) continue;
        for (int l = 0; l < N && rep.ok; ++l) {
          if (allowed[k][l].empty()) continue;
          for (int g : allowed[i][j]) {
            for (int h : allowed[j][k]) {
              const auto [hg, s1] = T.product(g, h);
              for (int x : allowed[k][l]) {
                ++rep.triples;
                const auto [xh, s3] = T.product(h, x);
                int left_idx = -1, left = 0, right_idx = -1, right = 0;
                if (s1) {
                  auto [r, s2] = T.product(hg, x);
                  left_idx = r;
                  left = s1 * s2;
                }
                if (s3) {
                  auto [r, s4] = T.product(g, xh);
                  right_idx = r;
                  right = s3 * s4;
                }
                const bool same = vanishes(left - right, f) && (vanishes(left, f) || left_idx == right_idx);
                if (!same) fail("associativity fails on " + gen(i, j, g) + ", " + gen(j, k, h) + ", " + gen(k, l, x));
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

H0Result h0_algebra(int n, int d, const FieldSpec& f) {
  H0Result out;
  const auto objs = enum_subsets(n, d);
  const int N = static_cast<int>(objs.size());
  FinDimAlgebra& A = out.algebra;
  A.objects = objs;
  A.idempotent.assign(static_cast<std::size_t>(N), -1);
  // per (source, target): representative scalar of e_JI and the 1 x 1 projection
  std::map<std::pair<int, int>, std::pair<int, Quotient>> h0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      auto top = pi0(objs[i], objs[j]);
      if (!top) continue;
      const ChainComplex c = interval_complex(*top, canonical_signature(*top), f);
      HomCohomology block{objs[i], objs[j], *top, homology(c)};
      for (const auto& [deg, dim] : block.dims) {
        const int expected = deg == 0 && top->is_identity() ? 1 : 0;
        if (dim != expected) out.concentrated = false;
      }
      // Degree-zero span is k*e_JI; coboundaries come from the single crossings.
      Matrix span = Matrix::identity(1);
      Matrix coboundaries = c.lo < 0 ? c.d(-1) : Matrix(1, 0);
      Quotient q = quotient_basis(span, coboundaries, f);
      out.blocks.push_back(std::move(block));
      if (q.dim() == 0) continue;
      if (i == j) A.idempotent[i] = A.dim();
      h0.emplace(std::make_pair(i, j), std::make_pair(A.dim(), std::move(q)));
      A.basis.push_back({i, j, 0, "[e[" + objs[j].compact() + "," + objs[i].compact() + "]]"});
    }
  }
  // Product of classes: multiply representatives (e_KJ e_JI = e_KI), then project.
  for (const auto& [ij, y] : h0) {
    for (int k = 0; k < N; ++k) {
      auto x = h0.find({ij.second, k});
      if (x == h0.end()) continue;
      auto z = h0.find({ij.first, k});
      if (z == h0.end()) continue;
      const mpq_class rep = f.reduce(x->second.second.reps.at(0, 0) * y.second.reps.at(0, 0));
      const mpq_class c = f.reduce(z->second.second.projection.at(0, 0) * rep);
      if (sgn(c) != 0) A.products[{x->second.first, y.first}] = {z->second.first, c};
    }
  }
  A.reindex();
  const FinDimAlgebra target = build_A(n, d);
  if (std::any_of(A.idempotent.begin(), A.idempotent.end(), [](int e) { return e < 0; })) {
    out.certificate.failure = "some identity e_II is a coboundary";
  } else {
    out.certificate = certify_by_endpoints(A, target, [](const IndexSet& I) { return I; });
  }
  return out;
}

}  // namespace strandalg
