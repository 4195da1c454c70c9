#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matching.hpp"
#include "ncomplex.hpp"

namespace sqfree {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct LemmaResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t pairs_checked = 0;
  std::optional<std::string> counterexample;

  LemmaResult() = default;
  explicit LemmaResult(std::string n) : name(std::move(n)) {}

  void fail(std::string what) {
    if (status != CheckStatus::Fail) counterexample = std::move(what);
    status = CheckStatus::Fail;
  }
};

struct LemmaReport {
  std::vector<LemmaResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (r.status == CheckStatus::Fail) return false;
    return true;
  }
  const LemmaResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
  void append(const LemmaReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }
};

// "N[3]" style names, using the complex's vertex labels.
inline std::string facet_name(const NComplex& c, int facet) {
  return "N[" + std::to_string(c.labels()[static_cast<std::size_t>(c.facet(facet).center)]) + "]";
}

inline std::string matching_name(const NComplex& c, const Matching& m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m.facets, [&](int f) {
    if (!first) s += ",";
    s += facet_name(c, f);
    first = false;
  });
  return s + "}";
}

}  // namespace sqfree
