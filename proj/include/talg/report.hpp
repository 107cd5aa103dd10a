#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace talg {

// One violated law with the first witness tuple found in lexicographic
// argument order. Checkers record at most one entry per law.
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view law) const { return find(law) != nullptr; }

  const Violation* find(std::string_view law) const {
    for (const auto& v : violations)
      if (v.law == law) return &v;
    return nullptr;
  }

  void add(std::string law, std::vector<int> witness, std::string detail = "") {
    violations.push_back({std::move(law), std::move(witness), std::move(detail)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

struct MorphismViolation {
  std::string op;
  std::vector<int> args;
  int expected = 0;
  int actual = 0;

  bool operator==(const MorphismViolation&) const = default;
};

struct MorphismReport {
  bool is_homomorphism = false;
  bool is_injective = false;
  bool is_surjective = false;
  std::vector<MorphismViolation> violations;

  bool is_isomorphism() const { return is_homomorphism && is_injective && is_surjective; }
};

}  // namespace talg
