#include "qhopf/repro.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <set>

#include "qhopf/classify.hpp"
#include "qhopf/cohomology.hpp"
#include "qhopf/serialize.hpp"
#include "qhopf/twist.hpp"

namespace qhopf {

namespace {

const char* kSl2 = "sl2_n3.json";
const char* kSl2Big = "sl2_n5.json";
const std::vector<std::string> kDatumFixtures = {"sl2_n3.json", "trivial_n3.json", "a11_n3.json",
                                                 "qls_n3.json"};

std::vector<int> units_mod(int m) {
  std::vector<int> out;
  for (int k = 1; k < m; ++k) {
    if (std::gcd(k, m) == 1) out.push_back(k);
  }
  return out;
}

json failed_names(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks) {
    if (!c.pass) out.push_back(c.to_json());
  }
  return out;
}

/// Folds a report into one line item; failing sub-checks become the witness.
CheckResult fold(std::string name, const Report& r, const Stopwatch& sw) {
  CheckResult c{std::move(name)};
  c.pass = r.all_pass();
  if (!c.pass) c.witness = failed_names(r);
  c.timing_ms = sw.ms();
  return c;
}

CheckResult expect(std::string name, bool ok, json witness, const Stopwatch& sw,
                   std::string message = {}) {
  CheckResult c{std::move(name)};
  c.pass = ok;
  c.witness = std::move(witness);
  if (!ok) c.message = std::move(message);
  c.timing_ms = sw.ms();
  return c;
}

CheckResult from_lemmas(const Report& lemmas, const std::string& name) {
  if (const CheckResult* c = lemmas.find(name)) return *c;
  CheckResult c{name};
  c.message = "not evaluated";
  return c;
}

class Context {
 public:
  explicit Context(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const SkewPrimitiveDatum& datum(const std::string& file) {
    auto it = data_.find(file);
    if (it == data_.end()) {
      it = data_.emplace(file, SkewPrimitiveDatum::from_json(read_json_file(dir_ / file))).first;
    }
    return it->second;
  }

  const SkewHopf& hopf(const std::string& file) {
    auto it = hopfs_.find(file);
    if (it == hopfs_.end()) {
      it = hopfs_.emplace(file, std::make_unique<SkewHopf>(build_skew_primitive_hopf(datum(file)))).first;
    }
    return *it->second;
  }

  /// Extraction outcome; a structure map leaving A is reported as an error string.
  const ExtractedA* extracted(const std::string& file, std::string* error = nullptr) {
    auto it = extracted_.find(file);
    if (it == extracted_.end()) {
      std::unique_ptr<ExtractedA> e;
      std::string msg;
      try {
        e = std::make_unique<ExtractedA>(extract_subalgebra_A(hopf(file)));
      } catch (const AlgebraError& ex) {
        msg = ex.what();
      }
      errors_[file] = msg;
      it = extracted_.emplace(file, std::move(e)).first;
    }
    if (error) *error = errors_[file];
    return it->second.get();
  }

 private:
  std::filesystem::path dir_;
  std::map<std::string, SkewPrimitiveDatum> data_;
  std::map<std::string, std::unique_ptr<SkewHopf>> hopfs_;
  std::map<std::string, std::unique_ptr<ExtractedA>> extracted_;
  std::map<std::string, std::string> errors_;
};

// ---------------------------------------------------------------------------

Report step_hps() {
  Report out;
  for (int p : {3, 5, 7}) {
    for (int s = 1; s < p; ++s) {
      Stopwatch sw;
      const QuasiHopf h = build_Hps({p, s});
      Report r = verify_all(h);
      r.checks.push_back(expect("dim", h.alg->dim() == static_cast<Index>(p), h.alg->dim(), sw));
      out.checks.push_back(fold("H(" + std::to_string(p) + "," + std::to_string(s) + ")", r, sw));
    }
  }
  return out;
}

CheckResult aq_entry(int p, int k) {
  Stopwatch sw;
  const GradedQuasiHopf g = build_Aq({p, k});
  Report r = verify_all(g.base);
  r.checks.push_back(check_grading(g));
  const Index dim = g.base.alg->dim();
  r.checks.push_back(expect("dim", dim == static_cast<Index>(p) * p * p, dim, sw));
  const BigRational rk = rank_degree_one(g);
  r.checks.push_back(expect("rank", rk == BigRational(1), rk.to_string(), sw));
  return fold("A(" + std::to_string(p) + ", q=zeta^" + std::to_string(k) + ")", r, sw);
}

Report step_aq(int p, bool all) {
  Report out;
  for (int k : units_mod(p * p)) {
    if (!all && k != 1) continue;
    out.checks.push_back(aq_entry(p, k));
  }
  return out;
}

Report step_dj() {
  Report out;
  for (int p : {3, 5}) {
    for (int k : units_mod(p * p)) {
      CheckResult c = check_dJ_phi_s(p, k);
      c.name = "p=" + std::to_string(p) + ", q=zeta^" + std::to_string(k);
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

Report step_periodicity() {
  Report out;
  for (int n : {3, 5}) {
    for (int k : units_mod(n * n)) {
      CheckResult c = check_c_periodicity(root_of_unity(n * n, k), n);
      c.name = "n=" + std::to_string(n) + ", q=zeta^" + std::to_string(k);
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

Report step_skew_hopf(Context& ctx, const std::string& file) {
  Stopwatch sw;
  const SkewHopf& h = ctx.hopf(file);
  Report r = verify_all(h.hopf);
  r.checks.push_back(check_group_projection(h));
  const int n = h.datum.n;
  const Index expect_dim = static_cast<Index>(n) * n * n * n;
  r.checks.push_back(expect("dim", h.hopf.alg->dim() == expect_dim, h.hopf.alg->dim(), sw));
  Report out;
  out.checks.push_back(fold(h.datum.name, r, sw));
  return out;
}

Report step_lemma(Context& ctx, const std::vector<std::string>& names) {
  Report out;
  std::string error;
  const ExtractedA* e = ctx.extracted(kSl2, &error);
  for (const auto& name : names) {
    if (e) {
      out.checks.push_back(from_lemmas(e->lemmas, name));
    } else {
      CheckResult c{name};
      c.message = error;
      out.checks.push_back(std::move(c));
    }
  }
  return out;
}

Index int_pow(Index b, int e) {
  Index r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Report extracted_checks(Context& ctx, const std::string& file, int lie_dim) {
  Stopwatch sw;
  Report out;
  std::string error;
  const ExtractedA* e = ctx.extracted(file, &error);
  if (!e) {
    out.checks.push_back(expect("extract", false, nullptr, sw, error));
    return out;
  }
  const Index dim = e->a.base.alg->dim();
  const Index want = int_pow(ctx.datum(file).n, lie_dim);
  out.checks.push_back(expect("dim A = n^dim g", dim == want, json{{"dim", dim}, {"expected", want}}, sw));
  for (const auto& c : e->lemmas.checks) out.checks.push_back(c);
  for (const auto& c : verify_all(e->a.base).checks) out.checks.push_back(c);
  out.checks.push_back(check_grading(e->a));
  out.checks.push_back(check_twisted_antipode(*e));
  return out;
}

Report step_certificate(Context& ctx) {
  Stopwatch sw;
  Report out;
  std::string error;
  const ExtractedA* e = ctx.extracted(kSl2, &error);
  if (!e) {
    out.checks.push_back(expect("certificate", false, nullptr, sw, error));
    return out;
  }
  const SkewPrimitiveDatum& d = ctx.datum(kSl2);
  const json cert = not_twist_equivalent_certificate(e->a, d);
  out.checks.push_back(expect("certificate", cert.at("certificate").get<bool>(), cert, sw,
                              "no axis restriction is non-trivial"));
  // The restriction to the first axis, decided directly.
  const Cocycle3 w = cocycle_from_phi(e->a.base);
  std::vector<int> axis(d.m, 0);
  axis[0] = 1;
  const CoboundaryResult c = is_coboundary(restrict_to_cyclic(w, w.group.encode(axis)));
  out.checks.push_back(expect("is_coboundary(restriction) = false", !c.trivial, c.obstruction, sw,
                              "restriction is a coboundary"));
  return out;
}

Report step_qr() {
  Report out;
  for (int p : {3, 5, 7}) {
    Stopwatch sw;
    std::set<int> squares, rest;
    for (int x = 1; x < p; ++x) squares.insert(x * x % p);
    for (int s = 1; s < p; ++s) {
      if (!squares.count(s)) rest.insert(s);
    }
    std::set<std::set<int>> orbits;
    for (const auto& o : hps_automorphism_orbits(p)) orbits.insert(std::set<int>(o.begin(), o.end()));
    bool agree = true;
    json labels = json::object();
    for (int s = 1; s < p; ++s) {
      const HpsClass cls = classify_Hps({p, s});
      labels[std::to_string(s)] = to_string(cls);
      agree = agree && ((cls == HpsClass::Plus) == (squares.count(s) > 0));
    }
    const bool two = orbits == std::set<std::set<int>>{squares, rest};
    out.checks.push_back(expect("p=" + std::to_string(p), two && agree,
                                json{{"orbits", orbits}, {"classify", labels}}, sw,
                                "orbits or labels differ from the residue split"));
  }
  return out;
}

Report step_arithmetic() {
  Report out;
  for (int p : {3, 5, 7}) {
    CheckResult c = check_product_is_4(p);
    c.name += " p=" + std::to_string(p);
    out.checks.push_back(std::move(c));
  }
  out.checks.push_back(check_p3_contradiction());
  Stopwatch sw;
  const std::vector<std::pair<std::int64_t, FiniteType>> table = {
      {0, FiniteType::A1xA1}, {1, FiniteType::A2}, {2, FiniteType::B2},
      {3, FiniteType::G2},    {4, FiniteType::NotFiniteType}};
  bool ok = true;
  json seen = json::object();
  for (const auto& [prod, want] : table) {
    const FiniteType got = finite_type_filter(1, prod);
    seen[std::to_string(prod)] = to_string(got);
    ok = ok && got == want;
  }
  out.checks.push_back(expect("finite_type_filter", ok, seen, sw));
  return out;
}

/// Diagonal-associator algebras used by the cross-validation and the census.
std::vector<std::pair<std::string, GradedQuasiHopf>> diagonal_fixtures(Context& ctx) {
  std::vector<std::pair<std::string, GradedQuasiHopf>> out;
  for (int p : {3, 5, 7}) {
    for (int s = 1; s < p; ++s) {
      QuasiHopf h = build_Hps({p, s});
      out.emplace_back(h.name, GradedQuasiHopf{h, std::vector<int>(p, 0)});
    }
  }
  for (int k : units_mod(9)) {
    GradedQuasiHopf g = build_Aq({3, k});
    out.emplace_back(g.base.name, std::move(g));
  }
  for (const auto& file : kDatumFixtures) {
    std::string error;
    const ExtractedA* e = ctx.extracted(file, &error);
    if (!e) throw AlgebraError(file + ": " + error);
    out.emplace_back("A of " + ctx.datum(file).name, e->a);
  }
  return out;
}

QuasiHopf corrupt_phi(QuasiHopf h) {
  auto terms = h.phi.terms();
  auto& c = terms[terms.size() / 2].second;
  c = c * root_of_unity(h.alg->scalar_order(), 1);
  h.phi = AlgElement(h.phi.space(), SparseVec::from_terms(std::move(terms)));
  return h;
}

CheckResult agreement(const std::string& name, const QuasiHopf& h, bool expected) {
  Stopwatch sw;
  const bool pent = check_pentagon(h).pass;
  const bool coc = check_cocycle(cocycle_from_phi(h)).pass;
  return expect(name, pent == coc && pent == expected,
                json{{"pentagon", pent}, {"cocycle", coc}}, sw,
                "pentagon and cocycle identity disagree");
}

Report step_cocycle_agreement(Context& ctx) {
  Report out;
  for (const auto& [name, g] : diagonal_fixtures(ctx)) out.checks.push_back(agreement(name, g.base, true));
  out.checks.push_back(agreement("corrupted H(3,1)", corrupt_phi(build_Hps({3, 1})), false));
  out.checks.push_back(agreement("corrupted A(3,1)", corrupt_phi(build_Aq({3, 1}).base), false));
  return out;
}

Report step_coboundary_roundtrip() {
  Report out;
  std::mt19937_64 rng(20261016);
  for (const auto& orders : std::vector<std::vector<int>>{{3}, {5}, {3, 3}}) {
    Stopwatch sw;
    const AbelianGroup g{orders};
    const std::int64_t order = 15;
    std::uniform_int_distribution<std::int64_t> value(0, order - 1);
    int ok = 0;
    json first_failure;
    for (int t = 0; t < 100; ++t) {
      Cochain2 mu{g, order, {}};
      for (Index i = 0; i < g.size() * g.size(); ++i) mu.table.push_back(value(rng));
      if (is_coboundary(coboundary(mu)).trivial) {
        ++ok;
      } else if (first_failure.is_null()) {
        first_failure = mu.to_json();
      }
    }
    std::string name = "Z";
    for (std::size_t i = 0; i < orders.size(); ++i) name += (i ? "xZ" : "") + std::to_string(orders[i]);
    out.checks.push_back(expect(name, ok == 100, json{{"trivial", ok}, {"failure", first_failure}}, sw,
                                "some coboundary was not recognised"));
  }
  return out;
}

Report step_census(Context& ctx) {
  Report out;
  for (const auto& [name, g] : diagonal_fixtures(ctx)) {
    CheckResult c = check_census_entry(g);
    c.name = name;
    out.checks.push_back(std::move(c));
  }
  return out;
}

using StepFn = std::function<Report(Context&, const ReproOptions&)>;

std::vector<std::string> fixtures_of(const std::string& key) {
  if (key == "sl2_hopf" || key == "lemma41" || key == "lemma42" || key == "sl2_A" ||
      key == "certificate") {
    return {kSl2};
  }
  if (key == "cocycle_agreement" || key == "census") return kDatumFixtures;
  if (key == "sl2_n5") return {kSl2Big};
  return {};
}

StepFn function_of(const std::string& key) {
  static const std::map<std::string, StepFn> fns = {
      {"hps_axioms", [](Context&, const ReproOptions&) { return step_hps(); }},
      {"aq_p3", [](Context&, const ReproOptions&) { return step_aq(3, true); }},
      {"aq_p5", [](Context&, const ReproOptions& o) { return step_aq(5, o.stretch); }},
      {"dj_phi_s", [](Context&, const ReproOptions&) { return step_dj(); }},
      {"periodicity", [](Context&, const ReproOptions&) { return step_periodicity(); }},
      {"sl2_hopf", [](Context& c, const ReproOptions&) { return step_skew_hopf(c, kSl2); }},
      {"lemma41", [](Context& c, const ReproOptions&) { return step_lemma(c, {"closure", "lemma41"}); }},
      {"lemma42", [](Context& c, const ReproOptions&) { return step_lemma(c, {"lemma42"}); }},
      {"sl2_A", [](Context& c, const ReproOptions&) { return extracted_checks(c, kSl2, 3); }},
      {"sl2_n5", [](Context& c, const ReproOptions&) { return extracted_checks(c, kSl2Big, 3); }},
      {"certificate", [](Context& c, const ReproOptions&) { return step_certificate(c); }},
      {"qr_dichotomy", [](Context&, const ReproOptions&) { return step_qr(); }},
      {"arithmetic", [](Context&, const ReproOptions&) { return step_arithmetic(); }},
      {"cocycle_agreement", [](Context& c, const ReproOptions&) { return step_cocycle_agreement(c); }},
      {"coboundary_roundtrip", [](Context&, const ReproOptions&) { return step_coboundary_roundtrip(); }},
      {"census", [](Context& c, const ReproOptions&) { return step_census(c); }},
  };
  return fns.at(key);
}

std::vector<const StepInfo*> selected(const ReproOptions& opts) {
  for (const auto& name : opts.only) {
    const bool known = std::any_of(repro_steps().begin(), repro_steps().end(), [&](const StepInfo& s) {
      return name == s.key || name == std::to_string(s.criterion);
    });
    if (!known) throw InputError("unknown repro step '" + name + "'");
  }
  std::vector<const StepInfo*> out;
  for (const auto& s : repro_steps()) {
    const bool named = std::find(opts.only.begin(), opts.only.end(), s.key) != opts.only.end();
    const bool by_number =
        std::find(opts.only.begin(), opts.only.end(), std::to_string(s.criterion)) != opts.only.end();
    if (opts.only.empty() ? (!s.stretch || opts.stretch) : (named || (by_number && (!s.stretch || opts.stretch)))) {
      out.push_back(&s);
    }
  }
  return out;
}

}  // namespace

const std::vector<StepInfo>& repro_steps() {
  static const std::vector<StepInfo> steps = {
      {1, "hps_axioms", "H(p,s) passes every axiom, p in {3,5,7}", false},
      {2, "aq_p3", "A(q), p = 3: dim 27, axioms, grading, rank 1", false},
      {2, "aq_p5", "A(q), p = 5: dim 125 (q = zeta, all q with --stretch)", false},
      {3, "dj_phi_s", "dJ of the cyclic twist restricts to Phi_s", false},
      {4, "periodicity", "c(i,j)/c(i-1,j) q^j is n-periodic", false},
      {5, "sl2_hopf", "u_q(b) for sl2, n = 3: dim 81, Hopf axioms", false},
      {5, "lemma41", "Delta_J maps A into A x A", false},
      {5, "lemma42", "dJ on A^3 equals the closed form", false},
      {5, "sl2_A", "A for sl2, n = 3: dim 27 and every axiom", false},
      {5, "sl2_n5", "A for sl2, n = 5: dim 125 and every axiom", true},
      {6, "certificate", "sl2 A is not twist equivalent to a Hopf algebra", false},
      {7, "qr_dichotomy", "H(p,s) orbits are the squares and the non-squares", false},
      {8, "arithmetic", "a12 a21 = 4 mod p, no p = 3 solution, finite types", false},
      {9, "cocycle_agreement", "pentagon agrees with the cocycle identity", false},
      {9, "coboundary_roundtrip", "is_coboundary(d mu) for random mu", false},
      {10, "census", "non-trivial associators: rank <= 1, dim in {p, p^3}", false},
  };
  return steps;
}

bool ReproResult::all_pass() const {
  return std::all_of(steps.begin(), steps.end(), [](const ReproStep& s) { return s.pass(); });
}

std::vector<std::pair<int, bool>> ReproResult::criteria() const {
  std::map<int, bool> m;
  for (const auto& s : steps) {
    auto [it, fresh] = m.emplace(s.criterion, true);
    it->second = it->second && s.pass();
  }
  return {m.begin(), m.end()};
}

json ReproResult::to_json() const {
  json j;
  j["tool"] = "qhopf";
  j["version"] = kToolVersion;
  j["status"] = all_pass() ? "pass" : "fail";
  j["steps"] = json::array();
  for (const auto& s : steps) {
    json e = s.report.to_json();
    e.erase("tool");
    e.erase("version");
    json step{{"criterion", s.criterion}, {"key", s.key}, {"title", s.title}};
    step.update(e);
    step["timing_ms"] = s.timing_ms;
    j["steps"].push_back(std::move(step));
  }
  return j;
}

std::vector<std::string> required_fixtures(const ReproOptions& opts) {
  std::set<std::string> out;
  for (const StepInfo* s : selected(opts)) {
    for (auto& f : fixtures_of(s->key)) out.insert(f);
  }
  return {out.begin(), out.end()};
}

ReproResult run_repro(const ReproOptions& opts) {
  for (const auto& f : required_fixtures(opts)) {
    if (!std::filesystem::is_regular_file(opts.fixtures / f)) {
      throw InputError("missing fixture " + (opts.fixtures / f).string());
    }
  }
  Context ctx(opts.fixtures);
  ReproResult result;
  for (const StepInfo* s : selected(opts)) {
    Stopwatch sw;
    ReproStep step{s->criterion, s->key, s->title, {}, 0};
    try {
      step.report = function_of(s->key)(ctx, opts);
    } catch (const AlgebraError& e) {
      CheckResult c{s->key};
      c.message = e.what();
      step.report.checks.push_back(std::move(c));
    }
    step.timing_ms = sw.ms();
    if (opts.log) {
      std::ostream& os = *opts.log;
      os << (step.pass() ? "[PASS] " : "[FAIL] ") << std::setw(2) << step.criterion << "  "
         << std::left << std::setw(22) << step.key << std::setw(56) << step.title << std::right
         << std::fixed << std::setprecision(1) << std::setw(10) << step.timing_ms << " ms\n";
      for (const auto& c : step.report.checks) {
        if (c.pass) continue;
        os << "         " << c.name << ": " << (c.message.empty() ? "failed" : c.message);
        if (!c.witness.is_null()) os << " " << c.witness.dump();
        os << '\n';
      }
      os.flush();
    }
    result.steps.push_back(std::move(step));
  }
  return result;
}

}  // namespace qhopf
