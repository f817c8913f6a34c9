#pragma once

// Finite-dimensional modules over a FinDimAlgebra, projective resolutions and
// Ext.
//
// An AModule is a left module, i.e. a covariant representation: a basis
// element x with source s and target t acts by a matrix from the s-block to
// the t-block. Right modules are left modules over A.opposite().
//
// All algebras handled here are directed (the only element from an object to
// itself is its idempotent), so the radical of a module is the sum of the
// images of the non-idempotent basis elements.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "strandalg/auslander.hpp"
#include "strandalg/exactla.hpp"

namespace strandalg {

using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

struct AModule {
  AlgebraPtr alg;
  FieldSpec field;
  std::vector<int> dims;        // per object
  std::vector<Matrix> action;   // per basis element: dims[target] x dims[source]

  int total_dim() const;
  /// Empty when the module axioms hold, otherwise the first violation.
  std::string check() const;
};

/// A module map as one matrix per object block.
struct ModuleMap {
  std::vector<Matrix> blocks;  // blocks[o]: dims_target[o] x dims_source[o]
};

/// Empty when f commutes with the actions of M and N.
std::string check_module_map(const AModule& M, const AModule& N, const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

/// P_o = A e_o: basis the elements with source o.
AModule projective(const AlgebraPtr& A, int o, const FieldSpec& f);
/// E_o = D(e_o A): dual of the elements with target o.
AModule injective(const AlgebraPtr& A, int o, const FieldSpec& f);
AModule simple(const AlgebraPtr& A, int o, const FieldSpec& f);
AModule direct_sum(const std::vector<AModule>& parts);
/// A as a left module over itself.
AModule regular_module(const AlgebraPtr& A, const FieldSpec& f);
/// D(A): the direct sum of all E_o.
AModule dual_regular_module(const AlgebraPtr& A, const FieldSpec& f);
/// Vector-space dual, a left module over op (which must be M.alg->opposite()).
AModule dual(const AModule& M, const AlgebraPtr& op);

/// Submodule spanned blockwise by the columns of bases (which must be
/// invariant under the action and linearly independent).
AModule submodule(const AModule& M, const std::vector<Matrix>& bases);
/// Cokernel of a map into N, with the projection N -> cokernel.
std::pair<AModule, ModuleMap> cokernel(const AModule& N, const ModuleMap& f);

/// Basis of Hom_A(M, N), each element flattened block by block.
std::vector<ModuleMap> hom_space(const AModule& M, const AModule& N);
int hom_dim(const AModule& M, const AModule& N);

/// Isomorphism test: a random element of Hom(M, N) is tried for
/// invertibility several times. A positive answer is always correct.
bool is_isomorphic(const AModule& M, const AModule& N);

/// Minimal projective resolution ... -> P_1 -> P_0 -> M.
struct ProjResolution {
  /// generators[k]: object of each generator of P_k
  std::vector<std::vector<int>> generators;
  std::vector<AModule> terms;
  /// maps[k]: P_k -> P_{k-1} for k >= 1 (maps[0] is unused and empty)
  std::vector<ModuleMap> maps;
  ModuleMap augmentation;  // P_0 -> M
  /// layout[k][o][r]: (generator, algebra basis element) spanning row r of
  /// block o of P_k; the element x stands for x applied to the generator.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> layout;
  /// False when cut off at max_len with a nonzero kernel left over.
  bool complete = true;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

class ResolutionOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ResolutionOverflow when more than max_len + 1 terms would be
/// needed, unless truncate is set (then complete is false).
ProjResolution min_proj_resolution(const AModule& M, int max_len, bool truncate = false);

/// dim Ext^k(M, N) for k = 0..k_max.
std::vector<int> ext_dims(const AModule& M, const AModule& N, int k_max);
/// Same, reusing a resolution of M that reaches at least k_max + 1 terms or
/// is complete.
std::vector<int> ext_dims(const ProjResolution& res, const AModule& N, int k_max);

int gldim(const AlgebraPtr& A, const FieldSpec& f);

struct DominantDimension {
  int value = 0;
  bool infinite = false;
  /// The count reached the cap, so only value <= domdim is known.
  bool at_least = false;
};

/// Leading projective-injective terms of the minimal injective coresolution
/// of A, obtained by resolving D(A) over the opposite algebra. At most cap
/// terms are examined.
DominantDimension domdim(const AlgebraPtr& A, const FieldSpec& f, int cap);

int gldim(int n, int d, const FieldSpec& f);
DominantDimension domdim(int n, int d, const FieldSpec& f);

struct StandardResolution {
  IndexSet index;                   // the (d+1)-subset I of {1..n}
  std::vector<IndexSet> terms;      // terms[a] = I minus its a-th element, a = 0..d
  /// Block dimensions of the homology at each term (index a), all zero except
  /// possibly at a = 0.
  std::vector<int> homology_dims;
  bool is_complex = false;
  bool exact = false;
  /// When n is in I: the index K of the injective the cokernel should match.
  std::optional<IndexSet> predicted_injective;
  bool cokernel_matches = false;
  bool verdict = false;
  std::string detail;
};

/// The complex P_{I - i_d} -> ... -> P_{I - i_0} of right A(n,d)-modules with
/// every map given by the basis element between consecutive terms.
StandardResolution standard_resolution(int n, int d, const IndexSet& I, const FieldSpec& f);

struct ClusterTiltingReport {
  int n = 0, d = 0;
  /// ext[k][pair] for 1 <= k <= d, pair in {"A,A","A,DA","DA,A","DA,DA"}
  std::map<int, std::map<std::string, int>> ext;
  bool vanishing = false;
  bool top_nonzero = false;
  bool verdict = false;
};

ClusterTiltingReport cluster_tilting_check(int n, int d, const FieldSpec& f);

struct KoszulExtReport {
  int n = 0, d = 0;
  /// (source object, target object, k) -> dim Ext^k(S_I, S_J), nonzero entries only
  std::map<std::tuple<int, int, int>, int> table;
  int total = 0;
  bool verdict = false;
  std::string mismatch;
};

/// Compares dim Ext^k(S_I, S_J) over A(n,d) with the Koszul-graded basis:
/// one dimension exactly for unit-difference pairs I <= J at k = rk J - rk I.
KoszulExtReport koszul_ext_table(int n, int d, const FieldSpec& f);

}  // namespace strandalg
