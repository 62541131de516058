#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rfa/localmod.hpp"

namespace rfa {

struct ClassifyOptions {
  int max_group_order = 24;
  int max_normal_order = 8;   // cocycle enumeration bound on |N|
  int value_order = 0;        // 0: |N| for each N, capped by the field
  int threads = 0;            // 0: hardware concurrency
  std::uint64_t seed = 1;
  bool dedupe_conjugates = true;
};

/// One admissible pair N normal in H <= G with |N| and |G:H| invertible.
struct PairRecord {
  Subgroup H;
  Subgroup N;
  int value_order = 1;
  std::size_t cocycle_classes = 0;
  std::size_t candidates = 0;        // (gamma, epsilon) combinations
  std::size_t inconsistent_classes = 0;  // gamma classes with no epsilon system
  bool skipped = false;              // |N| above the cocycle bound
  int represented_by = -1;           // index of the pair standing in for its conjugacy class
};

struct DataEnumeration {
  std::vector<PairRecord> pairs;
  std::vector<AlgebraData> data;     // deterministic order
  std::vector<int> pair_of;          // data[i] comes from pairs[pair_of[i]]
};

/// Throws SizeBound when |G| exceeds the bound.
DataEnumeration enumerate_data(const GroupPtr& G, const FieldSpec& f, const ClassifyOptions& opt = {});

struct EntryDims {
  std::int64_t dim_A = 0;
  std::int64_t fpdim_rep = 0;    // |G||H|/|N|
  std::int64_t fpdim_local = 0;  // |H|^2/|N|^2
};

struct ClassificationEntry {
  AlgebraData data;
  BuiltAlgebra algebra;
  RigidFrobeniusCert cert;
  Report audit;
  EntryDims dims;
  std::string cohomology_key;
  std::string conjugacy_key;
  int pair = -1;
  /// earlier entries with the same dimension and grading that the data alone does not separate
  std::vector<int> possibly_isomorphic;
};

struct Classification {
  std::vector<PairRecord> pairs;
  std::vector<ClassificationEntry> entries;
};

/// Builds and verifies every candidate. A candidate failing its own suite or
/// the transversal audit throws InternalInconsistency.
Classification classify(const GroupPtr& G, const FieldSpec& f, const ClassifyOptions& opt = {});

/// Local-module analysis of one algebra: formula and census FP-dims, and in
/// the semisimple split case the Mueger center, twists and (small groups) S and T.
struct LocalAnalysis {
  FpdimReport fpdim;
  std::vector<SimpleAModule> simples;
  std::optional<MugerReport> muger;
  Report twist;
  std::optional<ModularData> modular;
  bool ok() const;
};
LocalAnalysis analyze_local(const BuiltAlgebra& A, std::uint64_t seed = 1, int modular_max_order = 8);

/// Runs f(i) for i in [0, n) on a pool of threads.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

}  // namespace rfa
