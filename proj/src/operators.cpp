#include "hypo/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypo {

namespace {
void check_label(Symbol i) {
  if (i == 0) throw std::invalid_argument("operator label must be at least 1");
}
}  // namespace

BracketReduction bracket_reduce(const Word& w, Symbol i) {
  check_label(i);
  BracketReduction out;
  // Unmatched minuses so far; a plus cancels the nearest one to its left.
  std::vector<std::size_t> minuses;
  for (std::size_t h = 0; h < w.size(); ++h) {
    if (w[h] == i + 1) {
      minuses.push_back(h + 1);
    } else if (w[h] == i) {
      if (minuses.empty()) out.plus_positions.push_back(h + 1);
      else minuses.pop_back();
    }
  }
  out.minus_positions = std::move(minuses);
  return out;
}

std::optional<Word> kashiwara_e(const Word& w, Symbol i) {
  const auto r = bracket_reduce(w, i);
  if (r.minus_positions.empty()) return std::nullopt;
  Word out = w;
  out.set(r.minus_positions.front() - 1, i);
  return out;
}

std::optional<Word> kashiwara_f(const Word& w, Symbol i) {
  const auto r = bracket_reduce(w, i);
  if (r.plus_positions.empty()) return std::nullopt;
  Word out = w;
  out.set(r.plus_positions.back() - 1, i + 1);
  return out;
}

OperatorCounts kashiwara_counts(const Word& w, Symbol i) {
  const auto r = bracket_reduce(w, i);
  return {r.epsilon(), r.phi()};
}

std::optional<Word> quasi_e(const Word& u, Symbol i) {
  check_label(i);
  if (has_inversion(u, i)) return std::nullopt;
  auto it = std::find(u.begin(), u.end(), i + 1);
  if (it == u.end()) return std::nullopt;
  Word out = u;
  out.set(static_cast<std::size_t>(it - u.begin()), i);
  return out;
}

std::optional<Word> quasi_f(const Word& u, Symbol i) {
  check_label(i);
  if (has_inversion(u, i)) return std::nullopt;
  auto it = std::find(u.symbols().rbegin(), u.symbols().rend(), i);
  if (it == u.symbols().rend()) return std::nullopt;
  Word out = u;
  out.set(u.size() - 1 - static_cast<std::size_t>(it - u.symbols().rbegin()), i + 1);
  return out;
}

OperatorCounts quasi_counts(const Word& u, Symbol i) {
  check_label(i);
  if (has_inversion(u, i)) return {};
  return {u.count(i + 1), u.count(i)};
}

}  // namespace hypo
