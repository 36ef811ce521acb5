#include <doctest.h>

#include <filesystem>
#include <random>

#include "qhopf/serialize.hpp"
#include "qhopf/twist.hpp"

using namespace qhopf;

namespace {

void check_same(const QuasiHopf& a, const QuasiHopf& b) {
  CHECK(a.name == b.name);
  CHECK(a.alg->dim() == b.alg->dim());
  CHECK(a.alg->labels() == b.alg->labels());
  CHECK(a.alg->unit() == b.alg->unit());
  CHECK(a.alg->table() == b.alg->table());
  CHECK(a.alg->has_blocks() == b.alg->has_blocks());
  for (Index i = 0; i < a.alg->dim(); ++i) {
    CHECK(a.delta.column(i) == b.delta.column(i));
    CHECK(a.counit.column(i) == b.counit.column(i));
    CHECK(a.antipode.column(i) == b.antipode.column(i));
  }
  CHECK(a.alpha.vec() == b.alpha.vec());
  CHECK(a.beta.vec() == b.beta.vec());
  CHECK(a.phi.vec() == b.phi.vec());
  CHECK(a.phi_inv.vec() == b.phi_inv.vec());
  REQUIRE(a.group.has_value() == b.group.has_value());
  if (a.group) {
    CHECK(a.group->orders == b.group->orders);
    CHECK(a.group->root_exps == b.group->root_exps);
    CHECK(a.group->nil_dim == b.group->nil_dim);
  }
  CHECK(a.provenance == b.provenance);
}

void round_trip(const AlgebraFile& f) {
  const json j = f.to_json();
  const AlgebraFile g = AlgebraFile::from_json(json::parse(j.dump()));
  check_same(f.hopf, g.hopf);
  CHECK(f.degree == g.degree);
  CHECK(g.to_json() == j);
}

SkewPrimitiveDatum sl2() {
  SkewPrimitiveDatum d;
  d.n = 3;
  d.a_matrix = {{2}};
  d.nilpotency = {9};
  d.name = "sl2_n3";
  return d;
}

}  // namespace

TEST_CASE("scalars: canonical coefficients and big integers") {
  std::mt19937 rng(3);
  for (int order : {1, 3, 9, 25}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<BigRational> c;
      for (int k = 0; k < order; ++k) c.emplace_back(BigInt(static_cast<int>(rng() % 21) - 10), BigInt(rng() % 4 + 1));
      const CycloNum x = CycloNum::from_coeffs(order, c);
      const json j = cyclo_to_json(x);
      CHECK(j.at("order") == order);
      CHECK(j.at("coeffs").size() == static_cast<std::size_t>(CycloField::get(order).phi()));
      CHECK(cyclo_from_json(json::parse(j.dump()), order) == x);
    }
  }
  BigInt huge = 1;
  for (int i = 0; i < 30; ++i) huge *= 1000;
  const CycloNum big(3, BigRational(huge + 1, huge));
  const json j = cyclo_to_json(big);
  CHECK(j.at("coeffs")[0][0].is_string());
  CHECK(cyclo_from_json(j, 3) == big);

  CHECK_THROWS_AS(cyclo_from_json(j, 9), InputError);
  CHECK_THROWS_AS(cyclo_from_json(json{{"order", 3}, {"coeffs", {{1, 1}}}}, 3), InputError);
  CHECK_THROWS_AS(cyclo_from_json(json{{"order", 3}, {"coeffs", {{2, 4}, {0, 1}}}}, 3), InputError);
  CHECK_THROWS_AS(cyclo_from_json(json{{"order", 3}, {"coeffs", {{1, 0}, {0, 1}}}}, 3), InputError);
  CHECK_THROWS_AS(cyclo_from_json(json{{"order", 3}, {"coeffs", {{"1x", 1}, {0, 1}}}}, 3), InputError);
}

TEST_CASE("algebra files round trip exactly") {
  for (int s : {1, 2}) round_trip({build_Hps({3, s}), std::vector<int>(3, 0)});
  round_trip(AlgebraFile::from(build_Aq({3, 1})));
  round_trip(AlgebraFile::from(build_Aq({3, 5})));
  const SkewHopf h = build_skew_primitive_hopf(sl2());
  round_trip({h.hopf, nil_degrees(*h.hopf.group, *h.nil)});
  const ExtractedA e = extract_subalgebra_A(h);
  round_trip(AlgebraFile::from(e.a));
}

TEST_CASE("a loaded file verifies like the original") {
  const AlgebraFile f = AlgebraFile::from(build_Aq({3, 2}));
  const AlgebraFile g = AlgebraFile::from_json(f.to_json());
  CHECK(verify_all(g.hopf).all_pass());
  CHECK(check_grading(g.graded()).pass);
  CHECK(check_associativity(*g.hopf.alg).pass);
}

TEST_CASE("files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "qhopf_test_h31.json";
  const AlgebraFile f{build_Hps({3, 1}), {0, 0, 0}};
  f.write(path);
  const AlgebraFile g = AlgebraFile::read(path);
  CHECK(g.to_json() == f.to_json());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(AlgebraFile::read(path), InputError);
}

TEST_CASE("malformed and inconsistent files are input errors") {
  const json good = AlgebraFile{build_Hps({3, 1}), {0, 0, 0}}.to_json();
  auto broken = [&](const std::function<void(json&)>& edit) {
    json j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(AlgebraFile::from_json(json::array()), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j.erase("delta"); })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["format_version"] = 99; })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["dim"] = 4; })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["struct_consts"][0][0] = 3; })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["struct_consts"].push_back(j["struct_consts"][0]); })),
                  InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["phi"][0][3]["order"] = 9; })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["degree"] = {0, 0}; })), InputError);
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["group"]["orders"] = {5}; })), InputError);
  // Block labels contradicting the structure constants.
  CHECK_THROWS_AS(AlgebraFile::from_json(broken([](json& j) { j["blocks"]["left"][0] = 1; })), InputError);
}

TEST_CASE("reports have a fixed field order") {
  Report r;
  CheckResult c{"pentagon"};
  c.pass = false;
  c.witness = json{{"b", 1}};
  c.timing_ms = 1.5;
  r.checks.push_back(c);
  const json j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "status", "checks"});
  std::vector<std::string> ckeys;
  for (const auto& [k, v] : j["checks"][0].items()) ckeys.push_back(k);
  CHECK(ckeys == std::vector<std::string>{"axiom", "status", "witness", "timing_ms"});
  CHECK(j["status"] == "fail");
}
