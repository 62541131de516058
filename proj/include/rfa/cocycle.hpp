#pragma once

#include <optional>
#include <vector>

#include "rfa/group.hpp"
#include "rfa/report.hpp"
#include "rfa/scalar.hpp"

namespace rfa {

/// Normalized 2-cocycle on N with values in mu_order, stored as exponents of
/// the fixed primitive root root_of_unity(field, order). Indices are
/// positions in N.elements (position 0 is the identity).
struct TwoCocycle {
  Subgroup N;
  int order = 1;
  std::vector<int> exps;  // |N| x |N|

  int size() const { return N.order(); }
  int at(int i, int j) const { return exps[static_cast<std::size_t>(i) * size() + j]; }
  int& at(int i, int j) { return exps[static_cast<std::size_t>(i) * size() + j]; }
  Scalar value(const FieldSpec& f, int i, int j) const;
  bool operator==(const TwoCocycle& o) const { return order == o.order && exps == o.exps && N == o.N; }
};

/// epsilon_h(n) as exponents; rows are positions in H.elements, columns positions in N.elements.
struct EpsilonSystem {
  Subgroup H;
  Subgroup N;
  int order = 1;
  std::vector<int> exps;  // |H| x |N|

  int at(int hi, int ni) const { return exps[static_cast<std::size_t>(hi) * N.order() + ni]; }
  int& at(int hi, int ni) { return exps[static_cast<std::size_t>(hi) * N.order() + ni]; }
  Scalar value(const FieldSpec& f, int hi, int ni) const;
  bool operator==(const EpsilonSystem& o) const { return order == o.order && exps == o.exps; }
};

/// Position lookup: pos[g] = index of g in S.elements, or -1.
std::vector<int> positions(const Subgroup& S);

TwoCocycle trivial_cocycle(const Subgroup& N, int order);
EpsilonSystem trivial_epsilon(const Subgroup& H, const Subgroup& N, int order);

/// Largest usable value order: gcd(requested, root capacity of the field).
int effective_value_order(const FieldSpec& f, int requested);

Report check_cocycle(const TwoCocycle& g);
Report check_epsilon(const TwoCocycle& g, const EpsilonSystem& e);

/// d b (n, m) = b(n) + b(m) - b(nm) in exponents; b indexed by positions in N, b[0] = 0.
TwoCocycle coboundary(const Subgroup& N, const std::vector<int>& b, int order);
/// A b valued in mu_value_order with g1 = g2 * d b, or nullopt.
std::optional<std::vector<int>> cohomologous(const TwoCocycle& g1, const TwoCocycle& g2, int value_order);

struct CocycleEnumeration {
  std::vector<TwoCocycle> classes;  // lexicographically least representative of each class
  int value_order = 1;
  std::size_t cocycle_generators = 0;
};

/// Class representatives of normalized mu_order-valued cocycles up to
/// coboundaries of the algebraically closed field (b valued in mu_{order*exp N}).
CocycleEnumeration enumerate_cocycles(const Subgroup& N, int order, int max_size = 8);
/// Lexicographically least representative of the class of g.
TwoCocycle canonical_cocycle(const TwoCocycle& g);

/// Table of epsilon_n(m) forced on N x N: gamma(n,m) - gamma(nmn^{-1}, n).
std::vector<int> epsilon_on_N(const TwoCocycle& g);

struct EpsilonEnumeration {
  std::vector<EpsilonSystem> systems;  // one per orbit under characters of N
  std::size_t raw_candidates = 0;      // consistent systems before dedupe
  bool inconsistent = false;           // no system exists for this gamma
};

EpsilonEnumeration enumerate_epsilons(const Subgroup& H, const Subgroup& N, const TwoCocycle& g);
/// Lexicographically least system in the orbit of e under characters of N.
EpsilonSystem canonical_epsilon(const EpsilonSystem& e);

/// Bilinear cocycle on N = <a> x <b> = C2 x C2 with
/// gamma(a^x1 b^x2, a^y1 b^y2) = s1^{x1 y2} s2^{x2 y1}, signs given as 0/1 exponents of -1.
TwoCocycle sign_cocycle(const Subgroup& N, int a, int b, int s1, int s2, int order);

}  // namespace rfa
