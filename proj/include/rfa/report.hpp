#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rfa {

struct Violation {
  std::string identity;  // name of the identity that failed
  std::string witness;   // the tuple or basis vector where it fails
};

/// Outcome of a check. Only the first few witnesses are kept, the count is exact.
struct Report {
  std::vector<Violation> violations;
  std::size_t count = 0;
  std::vector<std::string> passed;  // identities that were checked and held

  static constexpr std::size_t kMaxKept = 16;

  bool ok() const { return count == 0; }
  void fail(const std::string& identity, const std::string& witness) {
    if (violations.size() < kMaxKept) violations.push_back({identity, witness});
    ++count;
  }
  void pass(const std::string& identity) { passed.push_back(identity); }
  /// record identity as passed if no new violations appeared since `before`
  void close(const std::string& identity, std::size_t before) {
    if (count == before) pass(identity);
  }
  void merge(const Report& o) {
    for (const auto& v : o.violations)
      if (violations.size() < kMaxKept) violations.push_back(v);
    count += o.count;
    passed.insert(passed.end(), o.passed.begin(), o.passed.end());
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s = std::to_string(count) + " violation(s)";
    if (!violations.empty()) s += "; first: " + violations[0].identity + " at " + violations[0].witness;
    return s;
  }
};

}  // namespace rfa
