#include "rfa/json_io.hpp"

#include <algorithm>
#include <limits>

namespace rfa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidData, what); }

Json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  bad("expected an integer, got " + j.dump());
}

int element(const FinGroup& G, const Json& j) {
  if (j.is_number_integer()) {
    int g = j.get<int>();
    if (g < 0 || g >= G.order()) bad("element index " + std::to_string(g) + " out of range");
    return g;
  }
  if (j.is_string()) {
    int g = G.find_label(j.get<std::string>());
    if (g < 0) bad("unknown element label '" + j.get<std::string>() + "'");
    return g;
  }
  bad("expected an element index or label, got " + j.dump());
}

Subgroup subgroup_from(const GroupPtr& G, const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string("\"") + what + "\" must be a list of elements");
  std::vector<int> els;
  for (const auto& x : j) els.push_back(element(*G, x));
  // a full element list and a generating set both work
  return generated_subgroup(G, els);
}

std::vector<int> exp_table(const Json& j, std::size_t rows, std::size_t cols, int order, const char* what) {
  if (!j.is_array() || j.size() != rows) bad(std::string(what) + " table must have " + std::to_string(rows) + " rows");
  std::vector<int> out;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != cols)
      bad(std::string(what) + " table rows must have " + std::to_string(cols) + " entries");
    for (const auto& x : r) {
      int e = x.get<int>();
      out.push_back(((e % order) + order) % order);
    }
  }
  return out;
}

Json exp_json(int order, const std::vector<int>& exps, std::size_t cols) {
  Json t = Json::array();
  for (std::size_t i = 0; i < exps.size(); i += cols)
    t.push_back(std::vector<int>(exps.begin() + static_cast<std::ptrdiff_t>(i),
                                 exps.begin() + static_cast<std::ptrdiff_t>(i + cols)));
  return {{"order", order}, {"table", t}};
}

Json elements_json(const Subgroup& S) {
  Json a = Json::array();
  for (int g : S.elements) a.push_back(g);
  return a;
}

}  // namespace

Json to_json(const Scalar& s) {
  const FieldSpec& f = s.field();
  if (f.is_prime()) return {{"residue", s.residue()}};
  if (f.is_galois()) return {{"digits", s.digits()}};
  Json c = Json::array();
  for (const auto& q : s.coeffs()) c.push_back({big_to_json(numerator(q)), big_to_json(denominator(q))});
  return {{"coeffs", c}};
}

Scalar scalar_from_json(const FieldSpec& f, const Json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<std::int64_t>());
  if (j.contains("residue")) return Scalar::from_big(f, big_from_json(j["residue"]));
  if (j.contains("digits")) return Scalar::from_digits(f, j["digits"].get<std::vector<std::int64_t>>());
  if (j.contains("coeffs")) {
    std::vector<Rational> c;
    for (const auto& q : j["coeffs"]) {
      if (!q.is_array() || q.size() != 2) bad("cyclotomic coefficients are [num, den] pairs");
      c.emplace_back(big_from_json(q[0]), big_from_json(q[1]));
    }
    return Scalar::from_coeffs(f, std::move(c));
  }
  bad("unrecognized scalar " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m.get(i, k)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::Prime: return {{"prime", f.modulus}};
    case FieldSpec::Kind::Cyclotomic: return {{"cyclotomic", f.modulus}};
    case FieldSpec::Kind::Galois: return {{"galois", {f.modulus, f.ext}}};
  }
  return {};
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_number_integer()) return FieldSpec::finite(j.get<std::int64_t>());
  if (j.contains("prime")) return FieldSpec::prime(j["prime"].get<std::int64_t>());
  if (j.contains("cyclotomic")) return FieldSpec::cyclotomic(j["cyclotomic"].get<std::int64_t>());
  if (j.contains("galois")) {
    const Json& g = j["galois"];
    if (!g.is_array() || g.size() != 2) bad("\"galois\" is [p, k]");
    return FieldSpec::galois(g[0].get<std::int64_t>(), g[1].get<int>());
  }
  bad("unrecognized field " + j.dump());
}

namespace {

GroupPtr unnamed(FinGroup G, const char* kind) {
  G.set_name(std::string(kind) + " group of order " + std::to_string(G.order()));
  return std::make_shared<FinGroup>(std::move(G));
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return std::make_shared<FinGroup>(FinGroup::named(j.get<std::string>()));
  if (!j.is_object() || !j.contains("kind")) bad("group spec needs a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "named") return std::make_shared<FinGroup>(FinGroup::named(j.at("name").get<std::string>()));
  if (kind == "perm") {
    const int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return unnamed(FinGroup::from_permutations(degree, gens), "permutation");
  }
  if (kind == "table") return unnamed(FinGroup(j.at("table").get<std::vector<std::vector<int>>>()), "table");
  bad("unknown group kind '" + kind + "'");
}

Json to_json(const FinGroup& G) {
  Json labels = Json::array();
  for (int g = 0; g < G.order(); ++g) labels.push_back(G.label(g));
  Json out = {{"name", G.name()}, {"order", G.order()}, {"labels", labels}};
  return out;
}

AlgebraSpec algebra_spec_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra spec must be an object");
  for (const char* key : {"group", "H", "N"})
    if (!j.contains(key)) bad(std::string("algebra spec is missing \"") + key + "\"");
  AlgebraSpec out;
  out.group = group_from_json(j["group"]);
  if (j.contains("field")) out.field = field_from_json(j["field"]);
  Subgroup H = subgroup_from(out.group, j["H"], "H");
  Subgroup N = subgroup_from(out.group, j["N"], "N");
  if (!is_subset(N, H)) bad("N is not contained in H");
  if (!is_normal_in(N, H)) bad("N not normal in H");
  TwoCocycle gamma = trivial_cocycle(N, 1);
  if (j.contains("gamma_exp")) {
    const Json& g = j["gamma_exp"];
    gamma.order = g.at("order").get<int>();
    if (gamma.order < 1) bad("gamma order must be positive");
    gamma.exps = exp_table(g.at("table"), N.order(), N.order(), gamma.order, "gamma");
  }
  EpsilonSystem eps;
  if (j.contains("epsilon_exp")) {
    const Json& e = j["epsilon_exp"];
    eps = trivial_epsilon(H, N, 1);
    eps.order = e.at("order").get<int>();
    if (eps.order < 1) bad("epsilon order must be positive");
    eps.exps = exp_table(e.at("table"), H.order(), N.order(), eps.order, "epsilon");
  } else {
    EpsilonEnumeration en = enumerate_epsilons(H, N, gamma);
    if (en.inconsistent || en.systems.empty())
      throw Error(ErrorKind::Inconsistent, "no epsilon system extends gamma to H");
    eps = en.systems.front();
  }
  out.data = {H, N, gamma, eps};
  return out;
}

Json to_json(const AlgebraData& d) {
  return {{"H", elements_json(d.H)},
          {"N", elements_json(d.N)},
          {"gamma_exp", exp_json(d.gamma.order, d.gamma.exps, static_cast<std::size_t>(d.N.order()))},
          {"epsilon_exp", exp_json(d.epsilon.order, d.epsilon.exps, static_cast<std::size_t>(d.N.order()))}};
}

Json to_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"identity", x.identity}, {"witness", x.witness}});
  return {{"ok", r.ok()}, {"violations", r.count}, {"failed", v}, {"passed", r.passed}};
}

Json to_json(const RigidFrobeniusCert& c) {
  Json out = {{"passed", c.passed},           {"connected_dim", c.connected_dim}, {"algebra", c.algebra},
              {"commutative", c.commutative}, {"frobenius", c.frobenius},         {"special", c.special},
              {"twist_trivial", c.twist_trivial}};
  if (c.beta_A) out["beta_A"] = to_json(*c.beta_A);
  if (c.beta_1) out["beta_1"] = to_json(*c.beta_1);
  if (c.qdim) out["qdim"] = to_json(*c.qdim);
  out["report"] = to_json(c.report);
  return out;
}

Json to_json(const CharacterizationResult& c) {
  Json out = {{"passed", c.passed}};
  if (c.dim_j) out["dim_j"] = to_json(*c.dim_j);
  out["report"] = to_json(c.report);
  return out;
}

Json to_json(const FpdimReport& r) {
  Json out = {{"dim_A", r.dim_A},         {"formula_dim", r.formula_dim}, {"fpdim_rep", r.fpdim_rep},
              {"fpdim_local", r.fpdim_local}, {"census", r.census}};
  if (r.census) {
    out["simple_count"] = r.simple_count;
    out["local_count"] = r.local_count;
    out["census_rep"] = r.census_rep;
    out["census_local"] = r.census_local;
  } else {
    out["census_skipped"] = r.census_skipped;
  }
  out["report"] = to_json(r.report);
  return out;
}

Json to_json(const LocalAnalysis& la) {
  Json simples = Json::array();
  for (const auto& s : la.simples) {
    Json x = {{"label", s.module.label}, {"dim", s.module.carrier.dim()}, {"local", s.local}};
    if (s.local) x["twist"] = to_json(twist(s.module.carrier).get(0, 0));
    simples.push_back(x);
  }
  Json out = {{"fpdim", to_json(la.fpdim)}, {"simples", simples}};
  if (la.muger) {
    Json w = Json::array();
    for (const auto& [m, partner] : la.muger->witnesses) w.push_back({{"module", m}, {"not_centralized_by", partner}});
    out["muger_center"] = {{"trivial", la.muger->trivial}, {"witnesses", w}, {"report", to_json(la.muger->report)}};
  }
  out["twist"] = to_json(la.twist);
  if (la.modular) {
    Json T = Json::array();
    for (const auto& t : la.modular->T) T.push_back(to_json(t));
    out["modular_data"] = {{"labels", la.modular->labels}, {"S", to_json(la.modular->S)}, {"T", T},
                           {"det_S_nonzero", !determinant(la.modular->S).is_zero()}};
  }
  out["ok"] = la.ok();
  return out;
}

Json to_json(const ClassificationEntry& e, std::size_t index) {
  Json out = {{"index", index}, {"pair", e.pair}};
  out["data"] = to_json(e.data);
  out["H_labels"] = e.data.H.describe();
  out["N_labels"] = e.data.N.describe();
  out["dims"] = {{"dim_A", e.dims.dim_A}, {"fpdim_rep", e.dims.fpdim_rep}, {"fpdim_local", e.dims.fpdim_local}};
  out["grade_dims"] = e.algebra.algebra.carrier.grade_dims();
  out["cohomology_key"] = e.cohomology_key;
  out["conjugacy_key"] = e.conjugacy_key;
  out["possibly_isomorphic"] = e.possibly_isomorphic;
  out["cert"] = to_json(e.cert);
  out["audit"] = to_json(e.audit);
  return out;
}

Json to_json(const PairRecord& p) {
  return {{"H", elements_json(p.H)},
          {"N", elements_json(p.N)},
          {"H_labels", p.H.describe()},
          {"N_labels", p.N.describe()},
          {"value_order", p.value_order},
          {"cocycle_classes", p.cocycle_classes},
          {"candidates", p.candidates},
          {"inconsistent_classes", p.inconsistent_classes},
          {"skipped", p.skipped},
          {"represented_by", p.represented_by}};
}

}  // namespace rfa
