#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rfa/error.hpp"

namespace rfa {

/// Finite group stored as a full Cayley table. Element 0 is the identity.
class FinGroup {
 public:
  /// Validates associativity, identity at index 0 and inverses.
  FinGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
           std::vector<std::vector<int>> perms = {});

  static FinGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens);
  static FinGroup cyclic(int n);
  static FinGroup symmetric(int n);
  static FinGroup alternating(int n);
  /// Dihedral group of order 2n acting on n points.
  static FinGroup dihedral(int n);
  static FinGroup quaternion();
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);
  /// "C4", "S4", "A4", "D4", "Q8", "C2xC2", "C2xS3", ...
  static FinGroup named(const std::string& name);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// h n h^{-1}
  int conj(int h, int n) const { return mul(mul(h, n), inv_[h]); }
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;

  const std::string& label(int a) const { return labels_[a]; }
  /// index of the element with this label, or -1
  int find_label(const std::string& s) const;
  bool is_permutation_group() const { return !perms_.empty(); }
  /// permutation images (0-based) when built from permutations
  const std::vector<int>& perm(int a) const { return perms_[a]; }
  /// index of a permutation given by its 0-based image list, or -1
  int find_perm(const std::vector<int>& images) const;
  std::vector<std::vector<int>> table() const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Greedy small generating set of the whole group.
  std::vector<int> generators() const;

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> perms_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

std::string cycle_notation(const std::vector<int>& images);

/// Subgroup as a sorted element set.
struct Subgroup {
  GroupPtr group;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const;
  /// Greedy generating set.
  std::vector<int> generators() const;
  std::string describe() const;
};

Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup whole_group(const GroupPtr& G);
Subgroup generated_subgroup(const GroupPtr& G, const std::vector<int>& gens);
/// Throws NotAGroup if the element set is not a subgroup.
Subgroup subgroup_from_elements(const GroupPtr& G, std::vector<int> elems);

/// All subgroups sorted by order then element list. SizeBound above max_order.
std::vector<Subgroup> subgroups(const GroupPtr& G, int max_order = 48);

bool is_subset(const Subgroup& a, const Subgroup& b);
bool is_normal_in(const Subgroup& N, const Subgroup& H);
Subgroup conjugate_subgroup(const Subgroup& K, int g);

/// Left coset representatives of H in G with reps[0] the identity.
struct Transversal {
  Subgroup subgroup;
  std::vector<int> reps;
  /// coset_of[g] = i with g in reps[i] H
  std::vector<int> coset_of;

  int index() const { return static_cast<int>(reps.size()); }
  /// For g = reps[i] h returns (i, h).
  std::pair<int, int> decompose(int g) const;
};

/// Deterministic transversal: in each coset the representative minimizes
/// (element order, moved points, index).
Transversal coset_data(const Subgroup& H);
/// Transversal from explicit representatives (one per coset, identity first).
Transversal transversal_from_reps(const Subgroup& H, const std::vector<int>& reps);

struct ConjugacyClass {
  int rep = 0;
  std::vector<int> elements;
  Subgroup centralizer;
  std::vector<int> centralizer_gens;
  /// conjugator[k] conjugates rep to elements[k]: t rep t^{-1} = elements[k]
  std::vector<int> conjugator;
};

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& G);

}  // namespace rfa
