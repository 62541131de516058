#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rfa/frobenius.hpp"

namespace rfa {

/// A rigid Frobenius algebra with the data the module constructions need.
struct RigidAlgebra {
  std::shared_ptr<const AlgebraObject> algebra;
  FrobeniusData frobenius;
  Matrix separability;  // t = Delta u / beta_A in A (x) A, so m t = u
  Matrix copairing;     // q, normalized so that m q = d u
  Scalar d;             // dim_j
  std::size_t dim() const { return algebra->dim(); }
  const FieldSpec& field() const { return algebra->field(); }
};

/// Throws NotRigidFrobenius when the suite fails.
RigidAlgebra make_rigid(const AlgebraObject& A, const FrobeniusData& F);
RigidAlgebra make_rigid(const BuiltAlgebra& A);

/// Right A-module: act is dim x (dim * dim A), column v * dim A + a is v . a.
struct AModule {
  std::shared_ptr<const AlgebraObject> algebra;
  YDModule carrier;
  Matrix act;
  std::string label;
  std::size_t dim() const { return carrier.dim(); }
};

/// A as a right module over itself.
AModule regular_module(const RigidAlgebra& A);
/// U(X) = X (x) A with action Id (x) m.
AModule free_module(const RigidAlgebra& A, const YDModule& X);

/// a^r is a morphism, associative and unital, and commutes with a^l = a^r c_{A,V}.
Report check_module(const AModule& M);
/// a^l: A (x) V -> V, column a * dim V + v
Matrix left_action(const AModule& M);

struct LocalCert {
  bool is_local = false;
  std::optional<std::string> witness;  // basis pair where a^r c_{A,V} c_{V,A} differs from a^r
};
LocalCert is_local(const AModule& M);

/// A-linear morphisms M -> N.
std::vector<Matrix> module_hom_space(const AModule& M, const AModule& N);

struct RelativeTensor {
  AModule module;    // M (x)_A N
  Matrix projection; // M (x) N -> M (x)_A N
  Matrix section;    // M (x)_A N -> M (x) N, projection * section = Id
};
/// Cokernel of a^r_M (x) Id - Id (x) a^l_N, realized as the image of the
/// idempotent (a^r_M (x) a^l_N)(Id (x) t (x) Id). The basis is chosen by
/// column pivots, in reverse order when requested.
RelativeTensor tensor_over_A(const RigidAlgebra& A, const AModule& M, const AModule& N,
                             bool reverse_pivots = false);
/// The idempotent above as a dense matrix on M (x) N.
Matrix tensor_idempotent(const RigidAlgebra& A, const AModule& M, const AModule& N);

struct ModuleDual {
  AModule module;  // V* with the induced right action
  Matrix ev_hat;   // V* (x) V -> A
  Matrix coev_hat; // A -> V (x) V*, carries the factor d^{-1}
};
ModuleDual dual_module(const RigidAlgebra& A, const AModule& M);
/// Module axioms for V*, module maps, balancing of ev_hat and both zig-zags.
Report check_dual(const RigidAlgebra& A, const AModule& M, const ModuleDual& D);

/// theta_M is A-linear, and on M (x)_A M the twist equals (theta (x) theta) c c.
Report twist_local(const RigidAlgebra& A, const AModule& M);

struct SimpleAModule {
  AModule module;
  bool local = false;
  int source = 0;  // index of the simple X with M a summand of U(X)
  int multiplicity_in_source = 0;
};

/// Every simple right A-module, as summands of U(X) for simple X. Needs a
/// splitting field with characteristic not dividing |G|.
std::vector<SimpleAModule> simple_modules(const RigidAlgebra& A, std::uint64_t seed = 1);
std::vector<SimpleAModule> simple_local_modules(const RigidAlgebra& A, std::uint64_t seed = 1);

struct FpdimReport {
  std::int64_t dim_A = 0;
  std::int64_t formula_dim = 0;   // |G||N|/|H|
  std::int64_t fpdim_rep = 0;     // |G||H|/|N|
  std::int64_t fpdim_local = 0;   // |H|^2/|N|^2
  bool census = false;
  std::string census_skipped;     // reason when no census was taken
  std::int64_t simple_count = 0;
  std::int64_t local_count = 0;
  // sums of (dim M)^2, to be compared with dim_A^2 times the formula values
  std::int64_t census_rep = 0;
  std::int64_t census_local = 0;
  Report report;
};
FpdimReport fpdim_checks(const BuiltAlgebra& A, std::uint64_t seed = 1);
/// Same, reusing an already computed list of simple modules.
FpdimReport fpdim_checks(const BuiltAlgebra& A, const std::vector<SimpleAModule>& simples);

struct MugerReport {
  bool trivial = false;
  /// for each simple local module: the label of a simple local module it does
  /// not centralize, "unit" for A itself, or empty if none was found
  std::vector<std::pair<std::string, std::string>> witnesses;
  Report report;
};
/// Takes the simple local modules.
MugerReport muger_center_local(const RigidAlgebra& A, const std::vector<SimpleAModule>& locals);

struct ModularData {
  std::vector<std::string> labels;
  Matrix S;  // S_{MX} = Tr(c c on M (x)_A X) / dim A
  std::vector<Scalar> T;
};
ModularData modular_data(const RigidAlgebra& A, const std::vector<SimpleAModule>& locals);

}  // namespace rfa
