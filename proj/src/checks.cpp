#include "strandalg/checks.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "strandalg/auslander.hpp"
#include "strandalg/bruhat_cx.hpp"
#include "strandalg/combinat.hpp"
#include "strandalg/homalg.hpp"
#include "strandalg/strands.hpp"
#include "strandalg/symgrp.hpp"

namespace strandalg {

namespace {

using Cells = std::vector<std::pair<int, int>>;

// (n, d) with 1 <= d <= d_hi, d <= n <= n_hi, clipped to the scope.
Cells cells(const CheckScope& s, int n_hi, int d_hi, int n_lo_offset = 0) {
  Cells out;
  for (int d = 1; d <= std::min(d_hi, s.d_max); ++d) {
    for (int n = d + n_lo_offset; n <= std::min(n_hi, s.n_max); ++n) out.emplace_back(n, d);
  }
  return out;
}

std::string cell(int n, int d, const FieldSpec& f) {
  return "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + "," + f.name() + ")";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome dga_axioms(const CheckScope& s) {
  Outcome o;
  Cells cs = cells(s, 7, 4);
  if (s.n_max >= 8 && s.d_max >= 4) cs.emplace_back(8, 4);
  long pairs = 0, triples = 0;
  for (const auto& f : s.fields) {
    for (auto [n, d] : cs) {
      const DgaReport r = verify_dga(n, d, f);
      if (!r.ok) o.fail(cell(n, d, f) + ": " + r.failure);
      pairs += r.pairs;
      triples += r.triples;
    }
  }
  if (o.pass) o.detail = std::to_string(cs.size()) + " cells, " + std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
  return o;
}

Outcome cohomology_concentration(const CheckScope& s) {
  Outcome o;
  Cells cs = cells(s, 7, 4);
  if (s.n_max >= 8 && s.d_max >= 4) cs.emplace_back(8, 4);
  for (const auto& f : s.fields) {
    for (auto [n, d] : cs) {
      const H0Result h = h0_algebra(n, d, f);
      if (!h.concentrated) o.fail(cell(n, d, f) + ": cohomology outside degree 0");
      const long expected = binomial(n + d, 2 * d);
      if (h.algebra.dim() != expected) {
        o.fail(cell(n, d, f) + ": dim H0 = " + std::to_string(h.algebra.dim()) + ", expected " + std::to_string(expected));
      }
      if (!h.certificate.ok) o.fail(cell(n, d, f) + ": " + h.certificate.failure);
    }
  }
  if (o.pass) o.detail = std::to_string(cs.size()) + " cells per field";
  return o;
}

std::string homology_str(const std::map<int, int>& h) {
  std::ostringstream os;
  for (const auto& [k, v] : h) os << (k == h.begin()->first ? "" : ",") << v;
  return os.str();
}

Outcome bruhat_acyclicity(const CheckScope& s) {
  Outcome o;
  std::mt19937 rng(2024);
  int intervals = 0;
  for (int d = 1; d <= std::min(4, s.d_max); ++d) {
    for (const auto& p : all_permutations(d)) {
      if (p.is_identity()) continue;
      ++intervals;
      const Signature sig = canonical_signature(p);
      for (const auto& f : s.fields) {
        const auto h = homology(interval_complex(p, sig, f));
        for (const auto& [k, v] : h) {
          if (v != 0) o.fail(p.str() + " over " + f.name() + ": H^" + std::to_string(k) + " = " + std::to_string(v));
        }
      }
      const IntegerHomology zh = integer_homology(interval_complex(p, sig, FieldSpec::rationals()));
      for (const auto& [k, v] : zh.free_rank) {
        if (v != 0 || !zh.torsion.at(k).empty()) o.fail(p.str() + " over Z: nonzero homology at " + std::to_string(k));
      }
      std::uniform_int_distribution<int> len(1, 12);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(sig.interval.elems.size()) - 1);
      for (int trial = 0; trial < 100; ++trial) {
        Signature t = sig;
        for (int k = len(rng); k > 0; --k) t = flip_vertex(t, t.interval.elems[pick(rng)]);
        if (!is_balanced(t)) {
          o.fail(p.str() + ": flipped signature unbalanced");
          continue;
        }
        if (!flip_equivalent(sig, t)) o.fail(p.str() + ": flip equivalence not detected");
        for (const auto& f : s.fields) {
          if (homology(interval_complex(p, t, f)) != homology(interval_complex(p, sig, f))) {
            o.fail(p.str() + " over " + f.name() + ": homology changed under flips");
          }
        }
      }
    }
  }
  if (s.d_max >= 3) {
    const ChainComplex c = interval_complex(Permutation({3, 2, 1}), canonical_signature(Permutation({3, 2, 1})), FieldSpec::rationals());
    std::map<int, int> dims;
    for (int k = c.lo; k <= c.hi(); ++k) dims[k] = c.dim(k);
    if (homology_str(dims) != "1,2,2,1") o.fail("S3 complex has ranks " + homology_str(dims));
  }
  if (o.pass) o.detail = std::to_string(intervals) + " intervals, 100 flip sequences each";
  return o;
}

Outcome multichoose_equivalence(const CheckScope& s) {
  Outcome o;
  const Cells cs = cells(s, 6, 3);
  for (auto [n, d] : cs) {
    const MultichooseResult r = build_A_multichoose(n, d);
    if (!r.certificate.ok) o.fail("(n=" + std::to_string(n) + ",d=" + std::to_string(d) + "): " + r.certificate.failure);
  }
  if (o.pass) o.detail = std::to_string(cs.size()) + " cells";
  return o;
}

Outcome complement_duality(const CheckScope& s) {
  Outcome o;
  const int n_hi = std::min(8, s.n_max);
  long pairs = 0, reversed_mismatch = 0;
  for (int n = 1; n <= n_hi; ++n) {
    for (int d = 1; d <= n; ++d) {
      const SharpResult r = iso_sharp(n, d);
      const std::string at = "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
      if (!r.certificate.ok) o.fail(at + ": " + r.certificate.failure);
      if (r.regraded.dim() != build_A(n, n - d).dim()) o.fail(at + ": dimension differs from A(n,n-d)");
      const auto subsets = enum_subsets(n, d);
      for (const auto& I : subsets) {
        for (const auto& J : subsets) {
          ++pairs;
          if (complement_gap_condition(I, J) != unit_diff(I, J)) {
            o.fail(at + ": gap condition disagrees with unit_diff at " + I.str() + "," + J.str());
          }
          if (complement_gap_condition_reversed(I, J) != unit_diff(I, J)) ++reversed_mismatch;
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs agree; the reversed inequality disagrees on " + std::to_string(reversed_mismatch);
  }
  return o;
}

Outcome homological_dimensions(const CheckScope& s) {
  Outcome o;
  Cells cs = cells(s, 6, 3);
  for (const auto& f : s.fields) {
    for (auto [n, d] : cs) {
      const int g = gldim(n, d, f);
      const int want = n == d ? 0 : d;
      if (g != want) o.fail(cell(n, d, f) + ": gldim " + std::to_string(g) + ", expected " + std::to_string(want));
      const DominantDimension dd = domdim(n, d, f);
      if (!dd.infinite && dd.value < d) o.fail(cell(n, d, f) + ": domdim " + std::to_string(dd.value) + " < d");
    }
  }
  if (o.pass) o.detail = std::to_string(cs.size()) + " cells per field";
  return o;
}

Outcome koszul_ext(const CheckScope& s) {
  Outcome o;
  const Cells cs = cells(s, 5, 2);
  for (const auto& f : s.fields) {
    for (auto [n, d] : cs) {
      const KoszulExtReport r = koszul_ext_table(n, d, f);
      if (!r.verdict) o.fail(cell(n, d, f) + ": " + r.mismatch);
    }
  }
  if (o.pass) o.detail = std::to_string(cs.size()) + " cells per field";
  return o;
}

Outcome resolutions_and_tilting(const CheckScope& s) {
  Outcome o;
  int resolutions = 0;
  for (const auto& f : s.fields) {
    for (auto [n, d] : cells(s, 5, 2, 1)) {
      for (const auto& I : enum_subsets(n, d + 1)) {
        ++resolutions;
        const StandardResolution r = standard_resolution(n, d, I, f);
        if (!r.verdict) o.fail(cell(n, d, f) + " " + I.str() + ": " + r.detail);
      }
    }
    for (auto [n, d] : Cells{{3, 2}, {4, 2}, {5, 2}, {4, 3}}) {
      if (n > s.n_max || d > s.d_max) continue;
      const ClusterTiltingReport r = cluster_tilting_check(n, d, f);
      if (!r.vanishing) o.fail(cell(n, d, f) + ": Ext^k(A+DA, A+DA) nonzero for some 0 < k < d");
      if (n > d && !r.top_nonzero) o.fail(cell(n, d, f) + ": Ext^d(DA, A) vanishes");
    }
  }
  if (o.pass) o.detail = std::to_string(resolutions) + " resolutions over all fields";
  return o;
}

Outcome golden_files(const CheckScope& s) {
  Outcome o;
  if (s.golden_dir.empty()) {
    o.fail("no golden directory given");
    return o;
  }
  for (int d = 1; d <= 4; ++d) {
    const std::string path = s.golden_dir + "/" + golden_file_name(d);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      o.fail("cannot read " + path);
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != hom_pattern_table(5, d)) o.fail(golden_file_name(d) + " differs from the regenerated table");
  }
  if (o.pass) o.detail = "4 tables identical";
  return o;
}

Outcome end_to_end(const CheckScope& s, bool& skipped) {
  Outcome o;
  if (s.cli_path.empty()) {
    skipped = true;
    o.detail = "no command given";
    return o;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system((s.cli_path + " check --n-max 5 --d-max 3 > /dev/null 2>&1").c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream os;
  os << "exit " << code << " after " << secs << "s";
  if (code != 0 || secs >= 300) o.fail(os.str());
  else o.detail = os.str();
  return o;
}

}  // namespace

std::string check_name(int id) {
  static const char* names[] = {"dga-axioms",          "cohomology-concentration", "bruhat-acyclicity",
                                "multichoose-equivalence", "complement-duality", "homological-dimensions",
                                "koszul-ext-table",    "resolutions-cluster-tilting", "golden-files",
                                "end-to-end"};
  if (id < 1 || id > kCheckCount) throw std::out_of_range("check_name: no criterion " + std::to_string(id));
  return names[id - 1];
}

std::string golden_file_name(int d) { return "hom_pattern_n5_d" + std::to_string(d) + ".txt"; }

CheckResult run_check(int id, const CheckScope& scope) {
  CheckResult r;
  r.id = id;
  r.name = check_name(id);
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    switch (id) {
      case 1: o = dga_axioms(scope); break;
      case 2: o = cohomology_concentration(scope); break;
      case 3: o = bruhat_acyclicity(scope); break;
      case 4: o = multichoose_equivalence(scope); break;
      case 5: o = complement_duality(scope); break;
      case 6: o = homological_dimensions(scope); break;
      case 7: o = koszul_ext(scope); break;
      case 8: o = resolutions_and_tilting(scope); break;
      case 9: o = golden_files(scope); break;
      case 10: o = end_to_end(scope, r.skipped); break;
    }
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  r.pass = o.pass;
  r.detail = o.detail;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace strandalg
