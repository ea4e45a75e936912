#pragma once

// The acceptance suite: twelve exhaustive or golden-value checks, each with a
// wall-clock budget. Shared by the acceptance binary and `hypo verify`.

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hypo/words.hpp"

namespace hypo::verify {

struct Criterion {
  int id = 0;
  std::string name;
  std::chrono::milliseconds budget{0};
  /// Returns an empty string on success, otherwise a description of the
  /// first counterexample.
  std::function<std::string()> check;
};

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

const std::vector<Criterion>& criteria();
Outcome run(const Criterion& c);
/// Runs the selected criteria (all when `ids` is empty), in order.
std::vector<Outcome> run(const std::vector<int>& ids);
std::string format(const Outcome& o);

/// The class of w under the symmetric closure of the given relations,
/// explored breadth first by rewriting factors.
std::set<Word> congruence_class(const Word& w, const std::vector<std::pair<Word, Word>>& relations);

}  // namespace hypo::verify
