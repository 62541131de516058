#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfa/group.hpp"
#include "rfa/linalg.hpp"
#include "rfa/report.hpp"

namespace rfa {

/// Yetter-Drinfeld module over kG: a homogeneous basis with a grade per basis
/// vector and one action matrix per group element. h maps grade g to h g h^{-1}.
struct YDModule {
  GroupPtr group;
  FieldSpec field;
  std::vector<int> grade;
  std::vector<Matrix> action;  // indexed by group element

  std::size_t dim() const { return grade.size(); }
  /// dimension of each graded piece, indexed by group element
  std::vector<int> grade_dims() const;
  std::vector<std::size_t> basis_of_grade(int g) const;
};

/// Builds the full action from images of generators (BFS over words).
YDModule yd_from_generators(const GroupPtr& G, const FieldSpec& f, std::vector<int> grade,
                            const std::vector<int>& gens, const std::vector<Matrix>& images);

Report check_yd(const YDModule& V);
/// f : V -> W is grade preserving and G-equivariant
Report check_morphism(const YDModule& V, const YDModule& W, const Matrix& f);

YDModule unit_object(const GroupPtr& G, const FieldSpec& f);
YDModule direct_sum(const YDModule& V, const YDModule& W);
/// basis index v * dim W + w
YDModule tensor(const YDModule& V, const YDModule& W);

/// c_{V,W}: V (x) W -> W (x) V, v (x) w -> (deg v) . w (x) v
Matrix braiding(const YDModule& V, const YDModule& W);
/// inverse of braiding(V, W), a map W (x) V -> V (x) W
Matrix braiding_inverse(const YDModule& V, const YDModule& W);
/// theta_V acts on grade g by action(g)
Matrix twist(const YDModule& V);

struct DualData {
  YDModule module;  // V*
  Matrix ev;        // V* (x) V -> 1
  Matrix coev;      // 1 -> V (x) V*
};
DualData dual(const YDModule& V);

/// Basis of Hom(V, W), computed one conjugacy class at a time.
std::vector<Matrix> hom_space(const YDModule& V, const YDModule& W);
/// Same space by solving grade preservation and equivariance for all generators at once.
std::vector<Matrix> hom_space_naive(const YDModule& V, const YDModule& W);
/// Columns span the invariant vectors of grade 1, i.e. Hom(1, V).
Matrix invariants(const YDModule& V);
/// invariants(tensor(V, W)) without building the full tensor product.
Matrix tensor_invariants(const YDModule& V, const YDModule& W);

struct EndAlgebra {
  std::vector<Matrix> basis;
  /// structure[i][j] = coordinates of basis[i] * basis[j]
  std::vector<std::vector<std::vector<Scalar>>> structure;
};
EndAlgebra end_algebra(const YDModule& V);

/// Simple object X(c, rho) induced from an irreducible representation of the
/// centralizer of the class representative.
struct SimpleYD {
  int class_index = 0;
  int irrep_index = 0;
  int irrep_dim = 1;
  YDModule module;
  std::vector<Scalar> character;  // on centralizer elements, in their sorted order
  std::string label;
};

/// All simple YD modules over a splitting finite field with characteristic not dividing |G|.
std::vector<SimpleYD> simple_yd_modules(const GroupPtr& G, const FieldSpec& f, std::uint64_t seed = 1);

struct Summand {
  int simple_index;  // into simple_yd_modules(...)
  int multiplicity;
  bool operator==(const Summand&) const = default;
};
/// Multiplicities of each simple in V.
std::vector<Summand> decompose(const YDModule& V, const std::vector<SimpleYD>& simples);
std::vector<Summand> decompose(const YDModule& V, std::uint64_t seed = 1);

/// Throws NotSemisimpleField or NonSplit when the field cannot be used for decompositions.
void require_semisimple_field(const FinGroup& G, const FieldSpec& f);

}  // namespace rfa
