#include "strandalg/auslander.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strandalg {

void FinDimAlgebra::reindex() {
  object_lookup_.clear();
  endpoint_lookup_.clear();
  from_.assign(objects.size(), {});
  into_.assign(objects.size(), {});
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (!object_lookup_.emplace(objects[k].elems(), static_cast<int>(k)).second) {
      throw std::logic_error("FinDimAlgebra: duplicate object " + objects[k].str());
    }
  }
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& e = basis[b];
    endpoint_lookup_[{e.source, e.target}].push_back(static_cast<int>(b));
    from_[static_cast<std::size_t>(e.source)].push_back(static_cast<int>(b));
    into_[static_cast<std::size_t>(e.target)].push_back(static_cast<int>(b));
  }
}

int FinDimAlgebra::object_index(const IndexSet& I) const {
  auto it = object_lookup_.find(I.elems());
  return it == object_lookup_.end() ? -1 : it->second;
}

std::optional<FinDimAlgebra::Term> FinDimAlgebra::mul(int x, int y) const {
  auto it = products.find({x, y});
  if (it == products.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FinDimAlgebra::from(int source) const { return from_.at(static_cast<std::size_t>(source)); }

std::vector<int> FinDimAlgebra::into(int target) const { return into_.at(static_cast<std::size_t>(target)); }

int FinDimAlgebra::element(int source, int target) const {
  auto it = endpoint_lookup_.find({source, target});
  if (it == endpoint_lookup_.end()) return -1;
  if (it->second.size() != 1) throw std::logic_error("FinDimAlgebra::element: several basis elements");
  return it->second.front();
}

FinDimAlgebra FinDimAlgebra::opposite() const {
  FinDimAlgebra op;
  op.objects = objects;
  op.idempotent = idempotent;
  op.basis = basis;
  for (auto& b : op.basis) {
    std::swap(b.source, b.target);
    b.label += "^op";
  }
  for (const auto& [xy, t] : products) op.products.emplace(std::make_pair(xy.second, xy.first), t);
  op.reindex();
  return op;
}

std::string FinDimAlgebra::check_axioms() const {
  std::ostringstream err;
  if (static_cast<int>(idempotent.size()) != num_objects()) return "idempotent list has wrong length";
  for (int o = 0; o < num_objects(); ++o) {
    const auto& e = basis[static_cast<std::size_t>(idempotent[static_cast<std::size_t>(o)])];
    if (e.source != o || e.target != o || e.degree != 0) return "idempotent at " + objects[o].str() + " misplaced";
  }
  for (int x = 0; x < dim(); ++x) {
    const auto& b = basis[static_cast<std::size_t>(x)];
    auto left = mul(idempotent[static_cast<std::size_t>(b.target)], x);
    auto right = mul(x, idempotent[static_cast<std::size_t>(b.source)]);
    if (!left || left->index != x || left->coeff != 1 || !right || right->index != x || right->coeff != 1) {
      return "idempotents do not act as units on " + b.label;
    }
  }
  for (const auto& [xy, t] : products) {
    const auto& bx = basis[static_cast<std::size_t>(xy.first)];
    const auto& by = basis[static_cast<std::size_t>(xy.second)];
    const auto& bt = basis[static_cast<std::size_t>(t.index)];
    if (by.target != bx.source) return "product of non-composable " + bx.label + " * " + by.label;
    if (bt.source != by.source || bt.target != bx.target) return "product lands in the wrong block: " + bx.label + " * " + by.label;
    if (bt.degree != bx.degree + by.degree) return "degrees not additive on " + bx.label + " * " + by.label;
    if (sgn(t.coeff) == 0) return "stored zero coefficient";
  }
  // (x y) z = x (y z) for composable triples z: A -> B, y: B -> C, x: C -> D
  for (int z = 0; z < dim(); ++z) {
    for (int y : from_[static_cast<std::size_t>(basis[static_cast<std::size_t>(z)].target)]) {
      auto yz = mul(y, z);
      for (int x : from_[static_cast<std::size_t>(basis[static_cast<std::size_t>(y)].target)]) {
        auto xy = mul(x, y);
        std::optional<Term> lhs, rhs;
        if (xy) {
          if (auto r = mul(xy->index, z)) lhs = Term{r->index, r->coeff * xy->coeff};
        }
        if (yz) {
          if (auto r = mul(x, yz->index)) rhs = Term{r->index, r->coeff * yz->coeff};
        }
        bool same = lhs.has_value() == rhs.has_value() &&
                    (!lhs || (lhs->index == rhs->index && lhs->coeff == rhs->coeff));
        if (!same) {
          err << "associativity fails on " << basis[x].label << ", " << basis[y].label << ", "
              << basis[z].label;
          return err.str();
        }
      }
    }
  }
  return "";
}

IsoCertificate certify_isomorphism(const FinDimAlgebra& A, const FinDimAlgebra& B,
                                   std::vector<int> object_map, std::vector<int> basis_map,
                                   bool ignore_degrees) {
  IsoCertificate cert;
  cert.object_map = std::move(object_map);
  cert.basis_map = std::move(basis_map);
  auto fail = [&](const std::string& why) {
    cert.ok = false;
    cert.failure = why;
    return cert;
  };
  if (A.num_objects() != B.num_objects()) return fail("object counts differ");
  if (A.dim() != B.dim()) {
    return fail("dimensions differ: " + std::to_string(A.dim()) + " vs " + std::to_string(B.dim()));
  }
  if (static_cast<int>(cert.object_map.size()) != A.num_objects() || static_cast<int>(cert.basis_map.size()) != A.dim()) {
    return fail("maps have the wrong length");
  }
  std::set<int> seen_o(cert.object_map.begin(), cert.object_map.end());
  std::set<int> seen_b(cert.basis_map.begin(), cert.basis_map.end());
  if (static_cast<int>(seen_o.size()) != A.num_objects()) return fail("object map is not injective");
  if (static_cast<int>(seen_b.size()) != A.dim()) return fail("basis map is not injective");
  for (int o = 0; o < A.num_objects(); ++o) {
    if (cert.basis_map[A.idempotent[o]] != B.idempotent[cert.object_map[o]]) {
      return fail("idempotent at " + A.objects[o].str() + " not preserved");
    }
  }
  for (int x = 0; x < A.dim(); ++x) {
    const auto& a = A.basis[x];
    const auto& b = B.basis[cert.basis_map[x]];
    if (cert.object_map[a.source] != b.source || cert.object_map[a.target] != b.target) {
      return fail("endpoints of " + a.label + " not preserved");
    }
    if (!ignore_degrees && a.degree != b.degree) return fail("degree of " + a.label + " not preserved");
  }
  // Bijective on basis, so checking every composable pair of A covers B too.
  for (int y = 0; y < A.dim(); ++y) {
    for (int x : A.from(A.basis[y].target)) {
      auto pa = A.mul(x, y);
      auto pb = B.mul(cert.basis_map[x], cert.basis_map[y]);
      bool same = pa.has_value() == pb.has_value() &&
                  (!pa || (cert.basis_map[pa->index] == pb->index && pa->coeff == pb->coeff));
      if (!same) {
        return fail("structure constants differ on " + A.basis[x].label + " * " + A.basis[y].label);
      }
    }
  }
  cert.ok = true;
  return cert;
}

namespace {

std::string pair_label(const char* head, const IndexSet& a, const IndexSet& b) {
  return std::string(head) + "[" + a.compact() + "," + b.compact() + "]";
}

}  // namespace

FinDimAlgebra build_A(int n, int d) {
  FinDimAlgebra A;
  A.objects = enum_subsets(n, d);
  const int N = A.num_objects();
  A.idempotent.assign(static_cast<std::size_t>(N), -1);
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (!interleaved(A.objects[i], A.objects[j])) continue;
      idx[{i, j}] = A.dim();
      if (i == j) A.idempotent[i] = A.dim();
      A.basis.push_back({i, j, 0, pair_label("f", A.objects[j], A.objects[i])});
    }
  }
  for (const auto& [ij, y] : idx) {
    const int i = ij.first, j = ij.second;
    for (int k = 0; k < N; ++k) {
      auto x = idx.find({j, k});
      if (x == idx.end()) continue;
      auto z = idx.find({i, k});
      if (z != idx.end()) A.products[{x->second, y}] = {z->second, 1};
    }
  }
  A.reindex();
  return A;
}

MultichooseResult build_A_multichoose(int n, int d) {
  MultichooseResult out;
  const auto ms = enum_multisets(n, d);
  out.multiset_count = static_cast<int>(ms.size());
  // The ideal is spanned by the f_JI that factor through a degenerate K; the
  // remaining pairs give a basis of the quotient. Degenerate objects have
  // zero idempotent and drop out.
  std::vector<int> keep;
  for (int k = 0; k < static_cast<int>(ms.size()); ++k) {
    if (!ms[k].is_degenerate()) keep.push_back(k);
  }
  FinDimAlgebra& A = out.algebra;
  for (int k : keep) A.objects.emplace_back(n, ms[k].elems());
  const int N = A.num_objects();
  A.idempotent.assign(static_cast<std::size_t>(N), -1);
  std::map<std::pair<int, int>, int> idx;
  auto survives = [&](int i, int j) {
    const auto& I = ms[keep[i]];
    const auto& J = ms[keep[j]];
    return poset_leq(I, J) && !factors_through_degenerate(I, J);
  };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (!survives(i, j)) continue;
      idx[{i, j}] = A.dim();
      if (i == j) A.idempotent[i] = A.dim();
      A.basis.push_back({i, j, 0, pair_label("f", A.objects[j], A.objects[i])});
    }
  }
  // Incidence product f_KJ f_JI = f_KI, then pass to the quotient.
  for (const auto& [ij, y] : idx) {
    for (int k = 0; k < N; ++k) {
      auto x = idx.find({ij.second, k});
      if (x == idx.end()) continue;
      auto z = idx.find({ij.first, k});
      if (z != idx.end()) A.products[{x->second, y}] = {z->second, 1};
    }
  }
  A.reindex();
  const FinDimAlgebra B = build_A(n, d);
  out.certificate = certify_by_endpoints(A, B, [](const IndexSet& I) { return I; });
  return out;
}

FinDimAlgebra build_koszul_graded(int n, int d) {
  FinDimAlgebra A;
  A.objects = enum_subsets(n, d);
  const int N = A.num_objects();
  A.idempotent.assign(static_cast<std::size_t>(N), -1);
  // g_IJ: source J, target I
  std::map<std::pair<int, int>, int> idx;  // (source, target)
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const auto& I = A.objects[i];
      const auto& J = A.objects[j];
      if (!unit_diff(I, J)) continue;
      idx[{j, i}] = A.dim();
      if (i == j) A.idempotent[i] = A.dim();
      A.basis.push_back({j, i, rank(J) - rank(I), pair_label("g", I, J)});
    }
  }
  // g_IJ g_JK = g_IK
  for (const auto& [kj, y] : idx) {
    for (int i = 0; i < N; ++i) {
      auto x = idx.find({kj.second, i});
      if (x == idx.end()) continue;
      auto z = idx.find({kj.first, i});
      if (z != idx.end()) A.products[{x->second, y}] = {z->second, 1};
    }
  }
  A.reindex();
  return A;
}

std::vector<int> not_generated_in_degree_one(const FinDimAlgebra& A) {
  // Basis elements reachable as products of m degree-one elements; all
  // products here are monomial so spans are sets of basis elements.
  std::set<int> reached;
  std::set<int> layer;
  for (int x = 0; x < A.dim(); ++x) {
    if (A.basis[x].degree == 1) layer.insert(x);
  }
  reached = layer;
  while (!layer.empty()) {
    std::set<int> next;
    for (int y : layer) {
      for (int x : A.from(A.basis[y].target)) {
        if (A.basis[x].degree != 1) continue;
        if (auto p = A.mul(x, y)) next.insert(p->index);
      }
    }
    layer.clear();
    for (int z : next) {
      if (reached.insert(z).second) layer.insert(z);
    }
  }
  std::vector<int> missing;
  for (int x = 0; x < A.dim(); ++x) {
    if (A.basis[x].degree >= 1 && !reached.count(x)) missing.push_back(x);
  }
  return missing;
}

SharpResult iso_sharp(int n, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("iso_sharp: need 0 <= d <= n");
  SharpResult out;
  out.regraded = build_koszul_graded(n, d);
  for (auto& b : out.regraded.basis) b.degree = 0;
  out.regraded.reindex();
  out.target = build_A(n, n - d);
  out.certificate = certify_by_endpoints(out.regraded, out.target, [](const IndexSet& I) { return complement(I); });
  return out;
}

bool complement_gap_condition(const IndexSet& I, const IndexSet& J) {
  const IndexSet u = complement(I), v = complement(J);
  if (!poset_leq(v, u)) return false;
  for (int b = 0; b + 1 < u.size(); ++b) {
    if (!(u[b] < v[b + 1])) return false;
  }
  return true;
}

bool complement_gap_condition_reversed(const IndexSet& I, const IndexSet& J) {
  const IndexSet u = complement(I), v = complement(J);
  if (!poset_leq(v, u)) return false;
  for (int b = 0; b + 1 < u.size(); ++b) {
    if (!(v[b] < u[b + 1])) return false;
  }
  return true;
}

IndexSet rotate(const IndexSet& I) {
  const int n = I.n();
  std::vector<int> v;
  for (int x : I.elems()) v.push_back((x + n) % (n + 1));
  std::sort(v.begin(), v.end());
  return IndexSet::with_zero(n, std::move(v));
}

namespace {

// Non-idempotent basis elements that are not products of two non-idempotents.
std::vector<int> irreducible_elements(const FinDimAlgebra& A) {
  std::set<int> decomposable;
  for (const auto& [xy, t] : A.products) {
    const auto& bx = A.basis[xy.first];
    const auto& by = A.basis[xy.second];
    if (bx.source != bx.target && by.source != by.target) decomposable.insert(t.index);
  }
  std::vector<int> out;
  for (int x = 0; x < A.dim(); ++x) {
    if (A.basis[x].source != A.basis[x].target && !decomposable.count(x)) out.push_back(x);
  }
  return out;
}

void write_pattern(std::ostream& os, const FinDimAlgebra& A, bool with_degrees) {
  std::size_t w = 1;
  for (const auto& I : A.objects) w = std::max(w, I.compact().size());
  auto pad = [&](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };
  os << std::string(w + 1, ' ');
  for (const auto& J : A.objects) os << pad(J.compact());
  os << '\n';
  for (int s = 0; s < A.num_objects(); ++s) {
    os << pad(A.objects[s].compact());
    for (int t = 0; t < A.num_objects(); ++t) {
      int x = A.element(s, t);
      os << pad(x < 0 ? "." : with_degrees ? std::to_string(A.basis[x].degree) : "1");
    }
    os << '\n';
  }
}

}  // namespace

std::string hom_pattern_table(int n, int d) {
  std::ostringstream os;
  const FinDimAlgebra A = build_A(n, d);
  const FinDimAlgebra K = build_koszul_graded(n, d);
  os << "n=" << n << " d=" << d << '\n';
  os << "objects:";
  for (const auto& I : A.objects) os << ' ' << I.compact();
  os << "\n\n";
  os << "A(n,d): dim " << A.dim() << "; row = source, column = target\n";
  write_pattern(os, A, false);
  os << "arrows:";
  for (int x : irreducible_elements(A)) {
    os << ' ' << A.objects[A.basis[x].source].compact() << "->" << A.objects[A.basis[x].target].compact();
  }
  os << "\n\n";
  os << "Koszul-graded: dim " << K.dim() << "; row = source, column = target, entry = degree\n";
  write_pattern(os, K, true);
  os << "arrows:";
  for (int x : irreducible_elements(K)) {
    os << ' ' << K.objects[K.basis[x].source].compact() << "->" << K.objects[K.basis[x].target].compact();
  }
  os << '\n';
  return os.str();
}

std::string algebra_dot(const FinDimAlgebra& A, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (int o = 0; o < A.num_objects(); ++o) os << "  o" << o << " [label=\"" << A.objects[o].compact() << "\"];\n";
  const auto arrows = irreducible_elements(A);
  std::set<int> is_arrow(arrows.begin(), arrows.end());
  for (int x : arrows) {
    const auto& b = A.basis[x];
    os << "  o" << b.source << " -> o" << b.target << " [label=\"" << b.label;
    if (b.degree) os << " (" << b.degree << ")";
    os << "\"];\n";
  }
  // Zero relations: composable arrow pairs whose product vanishes.
  for (int y : arrows) {
    for (int x : A.from(A.basis[y].target)) {
      if (!is_arrow.count(x) || A.mul(x, y)) continue;
      os << "  // relation: " << A.basis[x].label << " * " << A.basis[y].label << " = 0\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace strandalg
