#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfa/cocycle.hpp"
#include "rfa/ydcat.hpp"

namespace rfa {

/// Algebra object: mult is dim x dim^2 (column i * dim + j is e_i e_j), unit is dim x 1.
struct AlgebraObject {
  YDModule carrier;
  Matrix mult;
  Matrix unit;
  std::size_t dim() const { return carrier.dim(); }
  const FieldSpec& field() const { return carrier.field; }
};

/// comult is dim^2 x dim, counit is 1 x dim.
struct FrobeniusData {
  Matrix comult;
  Matrix counit;
};

Report check_algebra(const AlgebraObject& A);
/// m = m c_{A,A}
Report check_commutative(const AlgebraObject& A);
/// dim Hom(1, A), computed as the invariant vectors of grade 1
int check_connected(const AlgebraObject& A);
Report check_frobenius(const AlgebraObject& A, const FrobeniusData& F);

struct SpecialScalars {
  Scalar beta_A;
  Scalar beta_1;
};
/// Throws NotScalar when m Delta is not a multiple of the identity.
SpecialScalars check_special(const AlgebraObject& A, const FrobeniusData& F);
/// eps m Delta u
Scalar quantum_dimension(const AlgebraObject& A, const FrobeniusData& F);
bool has_trivial_twist(const AlgebraObject& A);

/// dim x dim matrix P[i][j] = (eps m)(e_i (x) e_j)
Matrix pairing_matrix(const AlgebraObject& A, const Matrix& counit);

struct RigidFrobeniusCert {
  bool passed = false;
  Report report;
  int connected_dim = 0;
  bool algebra = false;
  bool commutative = false;
  bool frobenius = false;
  bool special = false;
  bool twist_trivial = false;
  std::optional<Scalar> beta_A;  // constructor convention
  std::optional<Scalar> beta_1;
  std::optional<Scalar> qdim;    // eps m Delta u = beta_A beta_1
  Matrix pairing;                // eps m
  Matrix copairing;              // Delta u, dim^2 x 1
  /// copairing rescaled so that eps u = 1 and m q = d u
  std::optional<Matrix> normalized_copairing;
  std::optional<Matrix> separability;  // Delta / beta_A
};
RigidFrobeniusCert check_rigid_frobenius(const AlgebraObject& A, const FrobeniusData& F);

struct CharacterizationResult {
  bool passed = false;
  Report report;
  std::optional<Scalar> dim_j;
  std::optional<Matrix> counit;      // (a): the counit used
  std::optional<Matrix> copairing;   // (a): q from the inverse pairing
  std::optional<Matrix> separability;  // (b): bimodule splitting t of m
};

/// (r.i) connected, commutative, dim_j != 0; (r.ii) eps u = 1; (r.iii) eps m
/// non-degenerate; (r.iv) trivial twist. Without a counit one with eps u = 1
/// is solved for in Hom(A, 1).
CharacterizationResult characterization_a(const AlgebraObject& A, const std::optional<Matrix>& counit = std::nullopt);
/// Connected, commutative, separable (a bimodule splitting of m is solved for),
/// dim_j != 0 and trivial twist. dim_j is eps u for eps(a) = trace of left multiplication by a.
CharacterizationResult characterization_b(const AlgebraObject& A);
/// The definition: connected, commutative, special Frobenius with nonzero scalars.
CharacterizationResult characterization_c(const AlgebraObject& A, const FrobeniusData& F);

/// t : A -> A (x) A is an A-bimodule morphism in the category with m t = Id.
Report check_separability(const AlgebraObject& A, const Matrix& t);

// ---------------------------------------------------------------------------
// Constructors

/// Fault injection for regression tests.
enum class Mutation {
  None,
  DropEpsilonInProduct,    // omit the epsilon_{k^{-1}g}(n) factor of the product formula
  DropEpsilonInReduction,  // rewrite a_{gh,n} as a_{g,hnh^{-1}} without epsilon_h(n)
};

struct AlgebraData {
  Subgroup H;
  Subgroup N;
  TwoCocycle gamma;
  EpsilonSystem epsilon;
};

struct BuildOptions {
  Mutation mutation = Mutation::None;
  bool validate = true;  // check normality, cocycle data and invertibility of |N|, |G:H|
};

struct BuiltAlgebra {
  AlgebraObject algebra;
  FrobeniusData frobenius;
  AlgebraData data;
  Transversal transversal;
  FieldSpec field;
  std::vector<std::string> basis_labels;  // "a[g_i,n]"
  std::size_t index(int coset, int npos) const {
    return static_cast<std::size_t>(coset) * data.N.order() + npos;
  }
};

/// A(H, N, gamma, epsilon) on the basis a_{g_i, n}, index i * |N| + n.
BuiltAlgebra build_A(const AlgebraData& d, const Transversal& T, const FieldSpec& f, BuildOptions opt = {});
BuiltAlgebra build_A(const AlgebraData& d, const FieldSpec& f, BuildOptions opt = {});
/// B(N, gamma, epsilon) as an algebra in YD modules over H itself.
BuiltAlgebra build_B(const AlgebraData& d, const FieldSpec& f, BuildOptions opt = {});
/// The unit object with its trivial algebra structure.
BuiltAlgebra unit_algebra(const GroupPtr& G, const FieldSpec& f);
/// H as a group in its own right; elements keep their sorted order, labels carry over.
GroupPtr subgroup_as_group(const Subgroup& H);

/// Validation used by build_A: InvalidData or NotInvertible.
void validate_data(const AlgebraData& d, const FieldSpec& f);

/// Rebuilds with a second transversal, checks the relabeling map is an
/// algebra and coalgebra isomorphism, and checks that the product formula
/// respects the defining relation on both factors.
Report well_definedness_audit(const AlgebraData& d, const FieldSpec& f, std::uint64_t seed = 1,
                              Mutation mutation = Mutation::None);
/// Audit against an explicit second transversal.
Report well_definedness_audit(const AlgebraData& d, const FieldSpec& f, const Transversal& second,
                              Mutation mutation = Mutation::None);

}  // namespace rfa
