#pragma once

// Kashiwara operators computed by the bracketing rule, and the
// quasi-Kashiwara operators, which are undefined on words with an i-inversion.
// Partial operators return std::nullopt where undefined.

#include <cstddef>
#include <optional>
#include <vector>

#include "hypo/words.hpp"

namespace hypo {

/// What survives of +/- after cancelling every factor "-+"
/// (i read as "+", i+1 read as "-"). Positions are 1-indexed.
struct BracketReduction {
  std::vector<std::size_t> plus_positions;
  std::vector<std::size_t> minus_positions;
  std::size_t phi() const noexcept { return plus_positions.size(); }
  std::size_t epsilon() const noexcept { return minus_positions.size(); }
};

struct OperatorCounts {
  std::size_t epsilon = 0;
  std::size_t phi = 0;
  friend bool operator==(const OperatorCounts&, const OperatorCounts&) = default;
};

/// Throws std::invalid_argument if i == 0 (for every function below).
BracketReduction bracket_reduce(const Word& w, Symbol i);

std::optional<Word> kashiwara_e(const Word& w, Symbol i);
std::optional<Word> kashiwara_f(const Word& w, Symbol i);
OperatorCounts kashiwara_counts(const Word& w, Symbol i);

std::optional<Word> quasi_e(const Word& u, Symbol i);
std::optional<Word> quasi_f(const Word& u, Symbol i);
OperatorCounts quasi_counts(const Word& u, Symbol i);

}  // namespace hypo
