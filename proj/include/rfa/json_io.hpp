#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rfa/classify.hpp"

namespace rfa {

using Json = nlohmann::ordered_json;

/// {"residue": n}, {"coeffs": [[num, den], ...]} or, for F_{p^k}, {"digits": [...]}.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const Json& j);
Json to_json(const Matrix& m);

/// {"prime": p}, {"cyclotomic": m} or {"galois": [p, k]}.
Json to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// {"kind": "perm", "degree": n, "generators": [[...], ...]}, {"kind": "table",
/// "table": [[...]]} or {"kind": "named", "name": "S4"}. A bare string is a name.
GroupPtr group_from_json(const Json& j);
Json to_json(const FinGroup& G);

struct AlgebraSpec {
  GroupPtr group;
  AlgebraData data;
  std::optional<FieldSpec> field;
};
/// {"group", "H", "N", "gamma_exp", "epsilon_exp", "field"}. Elements are
/// indices or labels. Exponent tables are {"order": k, "table": [[...]]} on
/// positions in the sorted subgroup; a missing gamma is trivial, a missing
/// epsilon is the first solution of the propagation rule.
AlgebraSpec algebra_spec_from_json(const Json& j);
Json to_json(const AlgebraData& d);

Json to_json(const Report& r);
Json to_json(const RigidFrobeniusCert& c);
Json to_json(const CharacterizationResult& c);
Json to_json(const FpdimReport& r);
Json to_json(const LocalAnalysis& la);
Json to_json(const ClassificationEntry& e, std::size_t index);
Json to_json(const PairRecord& p);

}  // namespace rfa
