// qhopf: build, verify and compare finite quasi-Hopf algebras.
// Exit codes: 0 pass or trivial, 1 verified false or non-trivial, 2 usage or input error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

#include "qhopf/classify.hpp"
#include "qhopf/cohomology.hpp"
#include "qhopf/repro.hpp"
#include "qhopf/serialize.hpp"
#include "qhopf/twist.hpp"

#ifndef QHOPF_FIXTURE_DIR
#define QHOPF_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace qhopf;

constexpr int kPass = 0;
constexpr int kFalse = 1;

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(1) << '\n';
  } else {
    write_json_file(out, j);
  }
}

struct BuildArgs {
  std::string family;
  int p = 3;
  int s = 1;
  int q_exp = 1;
  std::string datum;
  std::string out;
};

int cmd_build(const BuildArgs& a) {
  if (a.family == "hps") {
    const HpsParams params{a.p, a.s};
    params.validate();
    emit(AlgebraFile{build_Hps(params), std::vector<int>(a.p, 0)}.to_json(), a.out);
    return kPass;
  }
  if (a.family == "aq") {
    const AqParams params{a.p, a.q_exp};
    params.validate();
    emit(AlgebraFile::from(build_Aq(params)).to_json(), a.out);
    return kPass;
  }
  if (a.datum.empty()) throw InputError("--datum is required for family " + a.family);
  const auto datum = SkewPrimitiveDatum::from_json(read_json_file(a.datum));
  const SkewHopf h = build_skew_primitive_hopf(datum);
  if (a.family == "skew-hopf") {
    emit(AlgebraFile{h.hopf, nil_degrees(*h.hopf.group, *h.nil)}.to_json(), a.out);
    return kPass;
  }
  const ExtractedA e = extract_subalgebra_A(h);
  emit(AlgebraFile::from(e.a).to_json(), a.out);
  if (!e.lemmas.all_pass()) {
    std::cerr << e.lemmas.to_json().dump(1) << '\n';
    return kFalse;
  }
  return kPass;
}

const std::map<std::string, std::function<CheckResult(const AlgebraFile&)>>& axiom_table() {
  static const std::map<std::string, std::function<CheckResult(const AlgebraFile&)>> t = {
      {"associativity", [](const AlgebraFile& f) { return check_associativity(*f.hopf.alg); }},
      {"unit", [](const AlgebraFile& f) { return check_unit(*f.hopf.alg); }},
      {"hom", [](const AlgebraFile& f) { return check_hom(f.hopf); }},
      {"counit", [](const AlgebraFile& f) { return check_counit(f.hopf); }},
      {"phi_inverse", [](const AlgebraFile& f) { return check_phi_inverse(f.hopf); }},
      {"counit_phi", [](const AlgebraFile& f) { return check_counit_phi(f.hopf); }},
      {"quasi_coassociativity", [](const AlgebraFile& f) { return check_quasi_coassociativity(f.hopf); }},
      {"pentagon", [](const AlgebraFile& f) { return check_pentagon(f.hopf); }},
      {"antipode", [](const AlgebraFile& f) { return check_antipode(f.hopf); }},
      {"grading", [](const AlgebraFile& f) { return check_grading(f.graded()); }},
  };
  return t;
}

const std::vector<std::string> kAxiomOrder = {"associativity", "unit", "hom", "counit", "phi_inverse",
                                              "counit_phi", "quasi_coassociativity", "pentagon",
                                              "antipode", "grading"};

int cmd_verify(const std::string& in, std::vector<std::string> axioms, const std::string& report) {
  const AlgebraFile f = AlgebraFile::read(in);
  if (axioms.empty() || (axioms.size() == 1 && axioms[0] == "all")) {
    axioms.clear();
    for (const auto& a : kAxiomOrder) {
      if (a != "grading" || !f.degree.empty()) axioms.push_back(a);
    }
  }
  Report r;
  for (const auto& a : axioms) {
    const auto it = axiom_table().find(a);
    if (it == axiom_table().end()) throw InputError("unknown axiom '" + a + "'");
    r.checks.push_back(it->second(f));
  }
  const json j = r.to_json();
  std::cout << j.dump(1) << '\n';
  if (!report.empty()) write_json_file(report, j);
  return r.all_pass() ? kPass : kFalse;
}

Cocycle3 load_cocycle(const std::string& in) {
  const json j = read_json_file(in);
  if (j.contains("table") && !j.contains("struct_consts")) return Cocycle3::from_json(j);
  const AlgebraFile f = AlgebraFile::read(in);
  try {
    return cocycle_from_phi(f.hopf);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("associator is not diagonal: ") + e.what());
  }
}

int cmd_cocycle(const std::string& in, const std::string& action, int axis, const std::string& out) {
  const Cocycle3 w = load_cocycle(in);
  if (action == "check") {
    const CheckResult c = check_cocycle(w);
    emit(c.to_json(), out);
    return c.pass ? kPass : kFalse;
  }
  if (action == "triviality") {
    const CoboundaryResult c = is_coboundary(w);
    json j{{"status", c.trivial ? "trivial" : "non-trivial"}};
    if (c.witness) j["witness"] = c.witness->to_json();
    if (!c.trivial) j["obstruction"] = c.obstruction;
    emit(j, out);
    return c.trivial ? kPass : kFalse;
  }
  if (action == "restrict") {
    const int k = static_cast<int>(w.group.orders.size());
    if (axis < 1 || axis > k) {
      throw InputError("--axis must lie in 1.." + std::to_string(k));
    }
    std::vector<int> e(k, 0);
    e[axis - 1] = 1;
    emit(restrict_to_cyclic(w, w.group.encode(e)).to_json(), out);
    return kPass;
  }
  throw InputError("unknown cocycle action '" + action + "'");
}

int cmd_twist(const std::string& datum_path, const std::string& out, const std::string& report) {
  const auto datum = SkewPrimitiveDatum::from_json(read_json_file(datum_path));
  const ExtractedA e = extract_subalgebra_A(build_skew_primitive_hopf(datum));
  Report r = e.lemmas;
  r.checks.push_back(check_twisted_antipode(e));
  json j = r.to_json();
  j["dim"] = e.a.base.alg->dim();
  j["certificate"] = not_twist_equivalent_certificate(e.a, datum);
  std::cout << j.dump(1) << '\n';
  if (!report.empty()) write_json_file(report, j);
  if (!out.empty()) AlgebraFile::from(e.a).write(out);
  return r.all_pass() ? kPass : kFalse;
}

int cmd_classify(const std::vector<int>& primes, const std::string& in, std::int64_t b,
                 std::int64_t d) {
  Report r;
  json j;
  if (!in.empty()) {
    const AlgebraFile f = AlgebraFile::read(in);
    const GradedQuasiHopf g = f.graded();
    json eig = json::object();
    for (const auto& [k, dim] : eigenspace_decomposition(g)) eig[std::to_string(k)] = dim;
    j["eigenspaces"] = eig;
    j["rank_degree_one"] = rank_degree_one(g).to_string();
    r.checks.push_back(check_census_entry(g));
  } else if (b != 0 || d != 0) {
    if (primes.size() != 1) throw InputError("--b/--d need exactly one --p");
    const CartanPair c = cartan_from_braiding({primes[0], b, d, true});
    j["a12"] = c.a12;
    j["a21"] = c.a21;
    j["product_mod_p"] = mod(c.a12 * c.a21, primes[0]);
  } else {
    json hps = json::object();
    for (int p : primes) {
      r.checks.push_back(check_product_is_4(p));
      json row = json::object();
      for (int s = 1; s < p; ++s) row[std::to_string(s)] = to_string(classify_Hps({p, s}));
      hps[std::to_string(p)] = row;
      j["orbits"][std::to_string(p)] = hps_automorphism_orbits(p);
    }
    j["hps_classes"] = hps;
    r.checks.push_back(check_p3_contradiction());
    json ft = json::object();
    for (int prod = 0; prod <= 4; ++prod) ft[std::to_string(prod)] = to_string(finite_type_filter(1, prod));
    j["finite_types"] = ft;
  }
  json rep = r.to_json();
  rep.update(j);
  std::cout << rep.dump(1) << '\n';
  return r.all_pass() ? kPass : kFalse;
}

int cmd_repro(const ReproOptions& opts, const std::string& json_out) {
  std::cout << "qhopf " << kToolVersion << " reproduction suite (fixtures: " << opts.fixtures.string()
            << ")\n";
  ReproOptions o = opts;
  o.log = &std::cout;
  Stopwatch sw;
  const ReproResult r = run_repro(o);
  std::cout << "\ncriteria:";
  for (const auto& [n, ok] : r.criteria()) std::cout << ' ' << n << (ok ? ":PASS" : ":FAIL");
  std::cout << "\n" << (r.all_pass() ? "all selected steps pass" : "some steps FAILED") << " ("
            << static_cast<long>(sw.ms()) << " ms)\n";
  if (!json_out.empty()) write_json_file(json_out, r.to_json());
  return r.all_pass() ? kPass : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of finite quasi-Hopf algebras"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build an algebra and write it as JSON");
  b->add_option("--family", build.family, "hps | aq | skew-hopf | twist-A")
      ->required()
      ->check(CLI::IsMember({"hps", "aq", "skew-hopf", "twist-A"}));
  b->add_option("--p", build.p, "odd prime");
  b->add_option("--s", build.s, "H(p,s) parameter, 1 <= s < p");
  b->add_option("--q-exp", build.q_exp, "q = zeta_{p^2}^k, gcd(k, p) = 1");
  b->add_option("--datum", build.datum, "datum JSON for skew-hopf and twist-A");
  b->add_option("--out", build.out, "output file (stdout when omitted)");

  std::string in, report, action, out;
  std::vector<std::string> axioms;
  auto* v = app.add_subcommand("verify", "Check the quasi-Hopf axioms of an algebra file");
  v->add_option("in", in, "algebra file")->required();
  v->add_option("--axioms", axioms, "all or a list of axioms")->delimiter(',');
  v->add_option("--report", report, "also write the report here");

  int axis = 0;
  auto* c = app.add_subcommand("cocycle", "3-cocycle of a diagonal associator");
  c->add_option("in", in, "algebra or cocycle file")->required();
  c->add_option("action", action, "check | triviality | restrict")
      ->required()
      ->check(CLI::IsMember({"check", "triviality", "restrict"}));
  c->add_option("--axis", axis, "1-based group factor for restrict");
  c->add_option("--out", out, "output file (stdout when omitted)");

  std::string datum;
  auto* t = app.add_subcommand("twist", "Twist a datum's Hopf algebra and extract A");
  t->add_option("--datum", datum, "datum JSON")->required();
  t->add_option("--out", out, "write A here");
  t->add_option("--report", report, "also write the report here");

  std::vector<int> primes;
  std::int64_t braid_b = 0, braid_d = 0;
  auto* k = app.add_subcommand("classify", "Arithmetic of the rank bound and census entries");
  k->add_option("--p", primes, "primes (default 3 5 7)");
  k->add_option("--in", in, "census entry for an algebra file with degrees");
  k->add_option("--b", braid_b, "braiding exponent b (with --d and one --p)");
  k->add_option("--d", braid_d, "braiding exponent d");

  ReproOptions repro;
  repro.fixtures = QHOPF_FIXTURE_DIR;
  std::string repro_json;
  auto* r = app.add_subcommand("repro", "Run the acceptance suite");
  r->add_option("--only", repro.only, "step keys or criterion numbers")->delimiter(',');
  r->add_option("--fixtures", repro.fixtures, "fixture directory");
  r->add_flag("--stretch", repro.stretch, "include the larger fixtures");
  r->add_option("--json", repro_json, "write the results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (b->parsed()) return cmd_build(build);
    if (v->parsed()) return cmd_verify(in, axioms, report);
    if (c->parsed()) return cmd_cocycle(in, action, axis, out);
    if (t->parsed()) return cmd_twist(datum, out, report);
    if (k->parsed()) return cmd_classify(primes.empty() ? std::vector<int>{3, 5, 7} : primes, in, braid_b, braid_d);
    if (r->parsed()) return cmd_repro(repro, repro_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << " (raise QHOPF_SIZE_LIMIT to override)\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "false: " << e.what() << '\n';
    return kFalse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
