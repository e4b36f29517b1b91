// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

struct Failure {
  std::string witness;
  std::string expected;
  std::string actual;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

/// Outcome of a verification suite. An empty failure list means verified.
struct Report {
  Report() = default;
  Report(std::string suite_name, int size) : suite(std::move(suite_name)), n(size) {}
  Report(std::string suite_name, std::vector<int> chain_profile)
      : suite(std::move(suite_name)), profile(std::move(chain_profile)) {}

  std::string suite;
  int n = 0;
  std::vector<int> profile;  // chain-product suites only
  std::size_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void fail(std::string witness, std::string expected, std::string actual) {
    failures.push_back({std::move(witness), std::move(expected), std::move(actual)});
  }

  /// Folds another report's counts and failures into this one.
  void merge(const Report& other);

  /// {suite, n | M, checked, failures: [{witness, expected, actual}], notes}
  /// with every number rendered as a decimal string.
  std::string to_json() const;
};

}  // namespace bruhat
