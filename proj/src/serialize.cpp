#include "qhopf/serialize.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace qhopf {

namespace {

json int_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt int_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw InputError("bad integer string '" + s + "'");
    }
    return BigInt(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index index_from_json(const json& j, Index bound, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      static_cast<Index>(j.get<std::int64_t>()) >= bound) {
    throw InputError(std::string(what) + " index out of range: " + j.dump());
  }
  return static_cast<Index>(j.get<std::int64_t>());
}

// Entries [i_1, ..., i_k, c] of a sparse vector in the k-th tensor power.
json sparse_to_json(const SparseVec& v, const Space& s) {
  json out = json::array();
  for (const auto& [flat, c] : v.terms()) {
    json e = json::array();
    for (Index i : s.decode(flat)) e.push_back(i);
    e.push_back(cyclo_to_json(c));
    out.push_back(std::move(e));
  }
  return out;
}

Index flat_index(const json& e, int degree, Index dim, const char* what, std::size_t offset) {
  Index flat = 0;
  for (int t = 0; t < degree; ++t) flat = flat * dim + index_from_json(e[offset + t], dim, what);
  return flat;
}

SparseVec sparse_from_json(const json& j, Index dim, int degree, int order, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<SparseVec::Term> terms;
  std::set<Index> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(degree) + 1) {
      throw InputError(std::string("malformed entry in ") + what + ": " + e.dump());
    }
    const Index flat = flat_index(e, degree, dim, what, 0);
    if (!seen.insert(flat).second) throw InputError(std::string("duplicate entry in ") + what);
    terms.emplace_back(flat, cyclo_from_json(e.back(), order));
  }
  return SparseVec::from_terms(std::move(terms));
}

AlgElement element_from_json(const json& j, const Space& s, const char* what) {
  return AlgElement(s, sparse_from_json(j, s.alg->dim(), s.degree, s.scalar_order(), what));
}

// A linear map H -> H^k as entries [i, j_1, ..., j_k, c].
json map_to_json(const LinMap& m) {
  json out = json::array();
  const Space& cod = m.codomain();
  for (Index i = 0; i < m.domain().dim(); ++i) {
    const SparseVec col = m.column(i);
    for (const auto& [flat, c] : col.terms()) {
      json e = json::array({i});
      for (Index t : cod.decode(flat)) e.push_back(t);
      e.push_back(cyclo_to_json(c));
      out.push_back(std::move(e));
    }
  }
  return out;
}

LinMap map_from_json(const json& j, const Space& dom, const Space& cod, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  const Index dim = dom.alg->dim();
  std::vector<std::vector<SparseVec::Term>> cols(dim);
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != static_cast<std::size_t>(cod.degree) + 2) {
      throw InputError(std::string("malformed entry in ") + what + ": " + e.dump());
    }
    const Index i = index_from_json(e[0], dim, what);
    const Index flat = flat_index(e, cod.degree, dim, what, 1);
    if (!seen.insert({i, flat}).second) throw InputError(std::string("duplicate entry in ") + what);
    cols[i].emplace_back(flat, cyclo_from_json(e.back(), cod.scalar_order()));
  }
  std::vector<SparseVec> columns;
  columns.reserve(dim);
  for (auto& c : cols) columns.push_back(SparseVec::from_terms(std::move(c)));
  return LinMap::from_table(dom, cod, std::move(columns));
}

template <typename T>
std::vector<T> vector_from_json(const json& j, const char* what) {
  try {
    return j.get<std::vector<T>>();
  } catch (const json::exception&) {
    throw InputError(std::string(what) + " has the wrong type");
  }
}

}  // namespace

json cyclo_to_json(const CycloNum& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(json::array({int_to_json(r.num()), int_to_json(r.den())}));
  return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

CycloNum cyclo_from_json(const json& j, int expected_order) {
  const json& order = field(j, "order");
  if (!order.is_number_integer() || order.get<std::int64_t>() != expected_order) {
    throw InputError("scalar order " + order.dump() + " differs from " +
                     std::to_string(expected_order));
  }
  const json& cs = field(j, "coeffs");
  const auto phi = static_cast<std::size_t>(CycloField::get(expected_order).phi());
  if (!cs.is_array() || cs.size() != phi) {
    throw InputError("expected " + std::to_string(phi) + " coefficients, got " + cs.dump());
  }
  std::vector<BigRational> coeffs;
  for (const auto& pair : cs) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("coefficient must be [num, den]");
    const BigInt num = int_from_json(pair[0]);
    const BigInt den = int_from_json(pair[1]);
    if (den <= 0) throw InputError("coefficient denominator must be positive");
    BigRational r(num, den);
    if (r.num() != num || r.den() != den) throw InputError("coefficient is not in lowest terms");
    coeffs.push_back(std::move(r));
  }
  return CycloNum::from_coeffs(expected_order, coeffs);
}

GradedQuasiHopf AlgebraFile::graded() const {
  if (degree.empty()) throw InputError("algebra file '" + hopf.name + "' has no degree vector");
  return {hopf, degree};
}

json AlgebraFile::to_json() const {
  const FinAlgebra& a = *hopf.alg;
  const Space s1 = hopf.space(1);
  json j;
  j["format_version"] = kFormatVersion;
  j["name"] = hopf.name;
  j["dim"] = a.dim();
  j["scalar_order"] = a.scalar_order();
  j["basis_labels"] = a.labels();
  j["unit"] = sparse_to_json(a.unit(), s1);
  json sc = json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index k = 0; k < a.dim(); ++k) {
      for (const auto& [t, c] : a.product(i, k).terms()) {
        sc.push_back(json::array({i, k, t, cyclo_to_json(c)}));
      }
    }
  }
  j["struct_consts"] = std::move(sc);
  j["delta"] = map_to_json(hopf.delta);
  j["counit"] = map_to_json(hopf.counit);
  j["antipode"] = map_to_json(hopf.antipode);
  j["alpha"] = sparse_to_json(hopf.alpha.vec(), s1);
  j["beta"] = sparse_to_json(hopf.beta.vec(), s1);
  j["phi"] = sparse_to_json(hopf.phi.vec(), hopf.space(3));
  j["phi_inv"] = sparse_to_json(hopf.phi_inv.vec(), hopf.space(3));
  if (!degree.empty()) j["degree"] = degree;
  if (hopf.group) {
    j["group"] = json{{"orders", hopf.group->orders},
                      {"root_exps", hopf.group->root_exps},
                      {"nil_dim", hopf.group->nil_dim}};
  }
  if (a.has_blocks()) {
    std::vector<Index> left, right;
    for (Index i = 0; i < a.dim(); ++i) {
      left.push_back(a.left_block(i));
      right.push_back(a.right_block(i));
    }
    j["blocks"] = json{{"count", a.block_count()}, {"left", left}, {"right", right}};
  }
  if (!a.monomials().empty()) {
    j["monomials"] = json{{"generators", a.generator_names()}, {"exponents", a.monomials()}};
  }
  j["provenance"] = hopf.provenance;
  return j;
}

AlgebraFile AlgebraFile::from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("algebra file must be a JSON object");
    const json& version = field(j, "format_version");
    if (version != kFormatVersion) throw InputError("unsupported format_version " + version.dump());
    const json& name_j = field(j, "name");
    if (!name_j.is_string()) throw InputError("name must be a string");
    const std::string name = name_j.get<std::string>();
    const json& dim_j = field(j, "dim");
    const json& order_j = field(j, "scalar_order");
    if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() <= 0) throw InputError("bad dim");
    if (!order_j.is_number_integer() || order_j.get<std::int64_t>() <= 0 ||
        order_j.get<std::int64_t>() > 100000) {
      throw InputError("bad scalar_order");
    }
    const auto dim = static_cast<Index>(dim_j.get<std::int64_t>());
    const int order = order_j.get<int>();
    auto labels = vector_from_json<std::string>(field(j, "basis_labels"), "basis_labels");
    if (labels.size() != dim) throw InputError("basis_labels does not match dim");

    SparseVec unit = sparse_from_json(field(j, "unit"), dim, 1, order, "unit");
    std::vector<std::vector<SparseVec::Term>> prods(dim * dim);
    std::set<std::tuple<Index, Index, Index>> seen;
    const json& sc = field(j, "struct_consts");
    if (!sc.is_array()) throw InputError("struct_consts must be an array");
    for (const auto& e : sc) {
      if (!e.is_array() || e.size() != 4) throw InputError("malformed struct_consts entry " + e.dump());
      const Index a = index_from_json(e[0], dim, "struct_consts");
      const Index b = index_from_json(e[1], dim, "struct_consts");
      const Index c = index_from_json(e[2], dim, "struct_consts");
      if (!seen.insert({a, b, c}).second) throw InputError("duplicate struct_consts entry");
      prods[a * dim + b].emplace_back(c, cyclo_from_json(e[3], order));
    }
    std::vector<SparseVec> table;
    table.reserve(dim * dim);
    for (auto& p : prods) table.push_back(SparseVec::from_terms(std::move(p)));
    auto alg = std::make_shared<FinAlgebra>(name, order, std::move(labels), std::move(unit),
                                            std::move(table));
    if (j.contains("blocks")) {
      const json& b = j.at("blocks");
      alg->set_blocks(vector_from_json<Index>(field(b, "left"), "blocks.left"),
                      vector_from_json<Index>(field(b, "right"), "blocks.right"),
                      vector_from_json<Index>(json::array({field(b, "count")}), "blocks.count")[0]);
    }
    if (j.contains("monomials")) {
      const json& m = j.at("monomials");
      alg->set_monomials(vector_from_json<std::string>(field(m, "generators"), "monomials"),
                         vector_from_json<std::vector<int>>(field(m, "exponents"), "monomials"));
    }

    const Space s0{alg, 0}, s1{alg, 1}, s2{alg, 2}, s3{alg, 3};
    std::vector<int> degree;
    if (j.contains("degree")) {
      degree = vector_from_json<int>(j.at("degree"), "degree");
      if (degree.size() != dim) throw InputError("degree vector does not match dim");
    }
    std::optional<GroupPart> group;
    if (j.contains("group")) {
      const json& g = j.at("group");
      GroupPart gp;
      gp.orders = vector_from_json<int>(field(g, "orders"), "group.orders");
      gp.root_exps = vector_from_json<int>(field(g, "root_exps"), "group.root_exps");
      gp.nil_dim = vector_from_json<Index>(json::array({field(g, "nil_dim")}), "group.nil_dim")[0];
      gp.scalar_order = order;
      gp.validate();
      if (gp.nil_dim == 0 || gp.size() * gp.nil_dim != dim) {
        throw InputError("group part does not match dim");
      }
      group = std::move(gp);
    }
    QuasiHopf h{name,
                alg,
                map_from_json(field(j, "delta"), s1, s2, "delta"),
                map_from_json(field(j, "counit"), s1, s0, "counit"),
                map_from_json(field(j, "antipode"), s1, s1, "antipode"),
                element_from_json(field(j, "alpha"), s1, "alpha"),
                element_from_json(field(j, "beta"), s1, "beta"),
                element_from_json(field(j, "phi"), s3, "phi"),
                element_from_json(field(j, "phi_inv"), s3, "phi_inv"),
                std::move(group),
                j.value("provenance", json::object())};
    return AlgebraFile{std::move(h), std::move(degree)};
  } catch (const AlgebraError& e) {
    throw InputError(std::string("inconsistent algebra file: ") + e.what());
  } catch (const ScalarError& e) {
    throw InputError(std::string("inconsistent algebra file: ") + e.what());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra file: ") + e.what());
  }
}

AlgebraFile AlgebraFile::read(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

void AlgebraFile::write(const std::filesystem::path& path) const {
  write_json_file(path, to_json());
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(1) << '\n';
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace qhopf
