#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "strandalg/auslander.hpp"
#include "strandalg/bruhat_cx.hpp"
#include "strandalg/checks.hpp"
#include "strandalg/combinat.hpp"
#include "strandalg/homalg.hpp"
#include "strandalg/strands.hpp"
#include "strandalg/symgrp.hpp"

#ifndef STRANDALG_GOLDEN_DIR
#define STRANDALG_GOLDEN_DIR ""
#endif

using json = nlohmann::ordered_json;
using namespace strandalg;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  bool pass = true;
};

json report(const std::string& command, json parameters, bool pass, json payload) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["parameters"] = std::move(parameters);
  r["status"] = pass ? "pass" : "fail";
  r["payload"] = std::move(payload);
  return r;
}

Output emit(const json& r) { return {r.dump(2) + "\n", r["status"] == "pass"}; }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json cert_json(const IsoCertificate& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) j["failure"] = c.failure;
  return j;
}

FieldSpec field_of(const std::string& text) {
  try {
    return FieldSpec::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

IndexSet subset_of(int n, const std::string& text) {
  try {
    return IndexSet::parse(n, text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void require_nd(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw UsageError("need 1 <= d <= n");
}

json params(int n, int d) { return json{{"n", n}, {"d", d}}; }

Output cmd_auslander(int n, int d, bool multichoose, const std::string& format) {
  require_nd(n, d);
  const FinDimAlgebra A = build_A(n, d);
  if (format == "dot") return {algebra_dot(A, "A_" + std::to_string(n) + "_" + std::to_string(d)), true};
  if (format == "text") return {hom_pattern_table(n, d), true};
  const std::string axioms = A.check_axioms();
  bool pass = axioms.empty();
  json p;
  p["dim"] = A.dim();
  p["idempotents"] = A.num_objects();
  json objs = json::array();
  for (const auto& I : A.objects) objs.push_back(I.str());
  p["objects"] = objs;
  json basis = json::array();
  for (const auto& b : A.basis) {
    basis.push_back({{"label", b.label}, {"source", A.objects[b.source].str()}, {"target", A.objects[b.target].str()}});
  }
  p["basis"] = basis;
  p["nonzero_products"] = A.products.size();
  p["axioms"] = axioms.empty() ? "ok" : axioms;
  json par = params(n, d);
  par["multichoose"] = multichoose;
  if (multichoose) {
    const MultichooseResult m = build_A_multichoose(n, d);
    p["multichoose"] = {{"multisets", m.multiset_count}, {"dim", m.algebra.dim()}, {"certificate", cert_json(m.certificate)}};
    pass = pass && m.certificate.ok;
  }
  return emit(report("auslander", par, pass, p));
}

Output cmd_strands(int n, int d, const std::vector<std::string>& pair, const FieldSpec& f) {
  require_nd(n, d);
  json par = params(n, d);
  par["field"] = f.name();
  json p;
  bool pass = true;
  if (!pair.empty()) {
    const IndexSet I = subset_of(n, pair[0]), J = subset_of(n, pair[1]);
    if (I.size() != d || J.size() != d) throw UsageError("--pair needs two d-subsets");
    par["pair"] = {I.str(), J.str()};
    json gens = json::array();
    for (const auto& g : basis(I, J)) {
      gens.push_back({{"generator", g.str()},
                      {"degree", g.degree()},
                      {"word", canonical_word(g.perm)},
                      {"differential", differential(g).reduced(f).str()}});
    }
    p["basis"] = gens;
  }
  const DgaReport r = verify_dga(n, d, f);
  p["verify_dga"] = {{"ok", r.ok},
                     {"generators", r.generators},
                     {"pairs", r.pairs},
                     {"triples", r.triples},
                     {"single_crossings", r.single_crossings}};
  if (!r.ok) p["verify_dga"]["counterexample"] = r.failure;
  pass = r.ok;
  return emit(report("strands", par, pass, p));
}

Output cmd_cohomology(int n, int d, const FieldSpec& f) {
  require_nd(n, d);
  json par = params(n, d);
  par["field"] = f.name();
  const H0Result h = h0_algebra(n, d, f);
  json blocks = json::array();
  for (const auto& b : h.blocks) {
    json dims = json::object();
    for (const auto& [k, v] : b.dims) dims[std::to_string(k)] = v;
    blocks.push_back({{"source", b.source.str()}, {"target", b.target.str()}, {"top", b.top.str()}, {"dims", dims}});
  }
  const long expected = binomial(n + d, 2 * d);
  json p;
  p["concentrated"] = h.concentrated;
  p["h0_dim"] = h.algebra.dim();
  p["expected_dim"] = expected;
  p["certificate"] = cert_json(h.certificate);
  p["blocks"] = blocks;
  const bool pass = h.concentrated && h.certificate.ok && h.algebra.dim() == expected;
  return emit(report("cohomology", par, pass, p));
}

Output cmd_bruhat(int d, const std::string& perm_text, int flips, const std::string& format) {
  Permutation p;
  try {
    p = Permutation::parse(perm_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (p.size() != d) throw UsageError("--perm must be a permutation of 1.." + std::to_string(d));
  if (flips < 0) throw UsageError("--flips must be nonnegative");
  Signature sig = canonical_signature(p);
  std::vector<std::string> flipped;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(sig.interval.elems.size()) - 1);
  const Signature canonical = sig;
  for (int k = 0; k < flips; ++k) {
    const Permutation& v = sig.interval.elems[pick(rng)];
    flipped.push_back(v.str());
    sig = flip_vertex(sig, v);
  }
  if (format == "dot") return {signature_dot(sig), true};
  const ChainComplex c = interval_complex(p, sig, FieldSpec::rationals());
  json par{{"d", d}, {"perm", p.str()}, {"flips", flips}};
  json p_;
  json elems = json::array();
  for (std::size_t k = 0; k < sig.interval.elems.size(); ++k) {
    elems.push_back({{"perm", sig.interval.elems[k].str()}, {"inv", sig.interval.inv[k]}});
  }
  p_["interval"] = elems;
  json edges = json::array();
  for (std::size_t e = 0; e < sig.interval.covers.size(); ++e) {
    const auto& [lo, hi] = sig.interval.covers[e];
    edges.push_back({{"lower", sig.interval.elems[lo].str()}, {"upper", sig.interval.elems[hi].str()}, {"sign", sig.signs[e]}});
  }
  p_["signature"] = edges;
  p_["balanced"] = is_balanced(sig);
  if (flips > 0) {
    p_["flipped_vertices"] = flipped;
    p_["flip_equivalent"] = flip_equivalent(canonical, sig).has_value();
  }
  json ranks = json::array(), diffs = json::object();
  for (int k = c.lo; k <= c.hi(); ++k) {
    ranks.push_back(c.dim(k));
    diffs[std::to_string(k)] = matrix_json(c.d(k));
  }
  p_["ranks"] = ranks;
  p_["differentials"] = diffs;
  bool acyclic = true;
  json hom = json::object();
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    json h = json::object();
    for (const auto& [k, v] : homology(interval_complex(p, sig, f))) {
      h[std::to_string(k)] = v;
      if (v != 0 && !p.is_identity()) acyclic = false;
    }
    hom[f.name()] = h;
  }
  const IntegerHomology zh = integer_homology(c);
  json z = json::object();
  for (const auto& [k, v] : zh.free_rank) {
    json t = json::array();
    for (const auto& x : zh.torsion.at(k)) t.push_back(x.get_str());
    z[std::to_string(k)] = {{"free", v}, {"torsion", t}};
    if (!p.is_identity() && (v != 0 || !t.empty())) acyclic = false;
  }
  hom["Z"] = z;
  p_["homology"] = hom;
  p_["acyclic"] = !p.is_identity() && acyclic;
  if (format == "text") {
    std::ostringstream os;
    os << "interval [e," << p.str() << "] ranks";
    for (int k = c.lo; k <= c.hi(); ++k) os << " " << c.dim(k);
    os << "\n" << (p_["acyclic"].get<bool>() ? "acyclic" : "not acyclic") << "\n";
    return {os.str(), p.is_identity() || acyclic};
  }
  return emit(report("bruhat", par, p.is_identity() || acyclic, p_));
}

Output cmd_koszul(int n, int d, const FieldSpec& f) {
  require_nd(n, d);
  json par = params(n, d);
  par["field"] = f.name();
  const FinDimAlgebra K = build_koszul_graded(n, d);
  json basis = json::array();
  for (const auto& b : K.basis) {
    basis.push_back({{"label", b.label}, {"source", K.objects[b.source].str()}, {"target", K.objects[b.target].str()}, {"degree", b.degree}});
  }
  const auto stray = not_generated_in_degree_one(K);
  const SharpResult s = iso_sharp(n, d);
  const KoszulExtReport e = koszul_ext_table(n, d, f);
  json table = json::array();
  for (const auto& [key, v] : e.table) {
    const auto& [i, j, k] = key;
    table.push_back({{"source", K.objects[i].str()}, {"target", K.objects[j].str()}, {"k", k}, {"dim", v}});
  }
  json p;
  p["dim"] = K.dim();
  p["basis"] = basis;
  p["generated_in_degree_one"] = stray.empty();
  p["iso_sharp"] = {{"target_dim", s.target.dim()}, {"certificate", cert_json(s.certificate)}};
  p["ext_table"] = {{"verdict", e.verdict}, {"total", e.total}, {"entries", table}};
  if (!e.verdict) p["ext_table"]["counterexample"] = e.mismatch;
  return emit(report("koszul", par, s.certificate.ok && e.verdict && stray.empty(), p));
}

Output cmd_resolve(int n, int d, const std::string& object, const FieldSpec& f) {
  require_nd(n, d);
  const IndexSet I = subset_of(n, object);
  if (I.size() != d + 1) throw UsageError("--object must be a (d+1)-subset of 1..n");
  json par = params(n, d);
  par["object"] = I.str();
  par["field"] = f.name();
  const StandardResolution r = standard_resolution(n, d, I, f);
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(t.str());
  json p;
  p["terms"] = terms;
  p["is_complex"] = r.is_complex;
  p["exact"] = r.exact;
  p["homology_dims"] = r.homology_dims;
  if (r.predicted_injective) {
    p["predicted_injective"] = r.predicted_injective->str();
    p["cokernel_matches"] = r.cokernel_matches;
  }
  p["detail"] = r.detail;
  p["verdict"] = r.verdict;
  return emit(report("resolve", par, r.verdict, p));
}

Output cmd_homdim(int n, int d, const FieldSpec& f) {
  require_nd(n, d);
  json par = params(n, d);
  par["field"] = f.name();
  const int g = gldim(n, d, f);
  const DominantDimension dd = domdim(n, d, f);
  const ClusterTiltingReport c = cluster_tilting_check(n, d, f);
  json ext = json::object();
  for (const auto& [k, m] : c.ext) {
    json row = json::object();
    for (const auto& [key, v] : m) row[key] = v;
    ext[std::to_string(k)] = row;
  }
  json p;
  p["gldim"] = g;
  p["domdim"] = dd.infinite ? json("infinite") : json(dd.value);
  if (dd.at_least) p["domdim_at_least"] = true;
  p["cluster_tilting"] = {{"ext", ext}, {"vanishing", c.vanishing}, {"top_nonzero", c.top_nonzero}, {"verdict", c.verdict}};
  const bool pass = g == (n == d ? 0 : d) && (dd.infinite || dd.value >= d) && c.verdict;
  return emit(report("homdim", par, pass, p));
}

Output cmd_check(int n_max, int d_max, const std::string& field, const std::string& golden_dir) {
  if (n_max < 1 || d_max < 1) throw UsageError("--n-max and --d-max must be positive");
  CheckScope scope;
  scope.n_max = n_max;
  scope.d_max = d_max;
  if (!field.empty()) scope.fields = {field_of(field)};
  scope.golden_dir = golden_dir;
  json par{{"n_max", n_max}, {"d_max", d_max}};
  json fields = json::array();
  for (const auto& f : scope.fields) fields.push_back(f.name());
  par["fields"] = fields;
  json results = json::array();
  bool pass = true;
  // criterion 10 is this command itself
  for (int id = 1; id < kCheckCount; ++id) {
    const CheckResult r = run_check(id, scope);
    pass = pass && r.pass;
    results.push_back({{"id", r.id}, {"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
  }
  return emit(report("check", par, pass, json{{"criteria", results}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strands algebras, higher Auslander algebras and their verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_file;
  app.add_option("--out", out_file, "Write the report to FILE instead of stdout");

  int n = 0, d = 0;
  std::string field = "q", format = "json";
  auto add_nd = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Number of positions")->required();
    sub->add_option("--d", d, "Number of strands")->required();
  };
  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field, "q, z, f2, f3 or fP")->capture_default_str(); };

  auto* auslander = app.add_subcommand("auslander", "Higher Auslander algebra A(n,d)");
  add_nd(auslander);
  bool multichoose = false;
  auslander->add_flag("--multichoose", multichoose, "Also build the multiset model and certify the isomorphism");
  auslander->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}))->capture_default_str();

  auto* strands = app.add_subcommand("strands", "Strands algebra basis, differentials and DGA axioms");
  add_nd(strands);
  std::vector<std::string> pair;
  strands->add_option("--pair", pair, "Two subsets I J as comma lists")->expected(2);
  add_field(strands);

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology of B(n,d) and the degree-0 isomorphism");
  add_nd(cohomology);
  add_field(cohomology);

  auto* bruhat = app.add_subcommand("bruhat", "Signed Bruhat interval complex");
  bruhat->add_option("--d", d, "Size of the symmetric group")->required();
  std::string perm;
  bruhat->add_option("--perm", perm, "One-line permutation, e.g. 321 or 3,2,1")->required();
  int flips = 0;
  bruhat->add_option("--flips", flips, "Number of random vertex flips applied to the signature");
  bruhat->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}))->capture_default_str();

  auto* koszul = app.add_subcommand("koszul", "Koszul-graded algebra, complement duality and Ext of simples");
  add_nd(koszul);
  add_field(koszul);

  auto* resolve = app.add_subcommand("resolve", "Standard resolution attached to a (d+1)-subset");
  add_nd(resolve);
  std::string object;
  resolve->add_option("--object", object, "Comma list, e.g. 1,3,4")->required();
  add_field(resolve);

  auto* homdim = app.add_subcommand("homdim", "Global and dominant dimension, cluster tilting");
  add_nd(homdim);
  add_field(homdim);

  auto* check = app.add_subcommand("check", "Run the verification suite");
  int n_max = 5, d_max = 3;
  std::string check_field, golden_dir = STRANDALG_GOLDEN_DIR;
  check->add_option("--n-max", n_max)->capture_default_str();
  check->add_option("--d-max", d_max)->capture_default_str();
  check->add_option("--field", check_field, "Restrict to one field (default: Q, F2 and F3)");
  check->add_option("--golden-dir", golden_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  try {
    if (*auslander) out = cmd_auslander(n, d, multichoose, format);
    else if (*strands) out = cmd_strands(n, d, pair, field_of(field));
    else if (*cohomology) out = cmd_cohomology(n, d, field_of(field));
    else if (*bruhat) out = cmd_bruhat(d, perm, flips, format);
    else if (*koszul) out = cmd_koszul(n, d, field_of(field));
    else if (*resolve) out = cmd_resolve(n, d, object, field_of(field));
    else if (*homdim) out = cmd_homdim(n, d, field_of(field));
    else if (*check) out = cmd_check(n_max, d_max, check_field, golden_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_file.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 2;
    }
    f << out.text;
  }
  return out.pass ? 0 : 1;
}
