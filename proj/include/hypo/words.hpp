#pragma once

// Words over ordered alphabets, weights, standardization and the
// composition/partition arithmetic shared by every other module.
//
// Positions and symbols are 1-indexed wherever they are reported back to the
// caller (descent sets, bracket positions). Container-style access through
// Word::operator[] is 0-indexed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypo {

using Symbol = std::uint32_t;

class Word {
 public:
  using const_iterator = std::vector<Symbol>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Symbol> symbols);
  explicit Word(std::vector<Symbol> symbols);

  /// Parses the shared text format: a digit string ("4323") when every
  /// symbol is at most 9, otherwise comma-separated integers ("10,2,11").
  /// The empty string is the empty word. A trailing comma is accepted, which
  /// is how a one-letter word over a symbol >= 10 is written ("10,").
  static Word parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t index) const { return symbols_[index]; }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  void push_back(Symbol a);
  void set(std::size_t index, Symbol a);

  /// |w|_a
  std::size_t count(Symbol a) const noexcept;
  /// Largest symbol, or 0 for the empty word.
  Symbol max_symbol() const noexcept;

  Word reversed() const;
  Word factor(std::size_t first, std::size_t length) const;

  friend Word operator+(Word lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

namespace literals {
inline Word operator""_w(const char* text, std::size_t length) {
  return Word::parse(std::string_view(text, length));
}
}  // namespace literals

/// A finite sequence of non-negative integers, stored without trailing zeros.
class WeakComposition {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<std::size_t> terms);
  explicit WeakComposition(std::vector<std::size_t> terms);

  /// Term k (1-indexed); terms past the stored prefix are 0.
  std::size_t term(std::size_t k) const noexcept;
  std::span<const std::size_t> terms() const noexcept { return terms_; }
  /// Number of parts, i.e. index of the last non-zero term.
  std::size_t length() const noexcept { return terms_.size(); }
  std::size_t weight() const noexcept;

  std::string to_string() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  void canonicalize();
  std::vector<std::size_t> terms_;
};

std::ostream& operator<<(std::ostream& os, const WeakComposition& c);

class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<std::size_t> parts);
  explicit Composition(std::vector<std::size_t> parts);

  /// Composition of `weight` whose descent set is `descents` (1-indexed
  /// partial sums strictly between 0 and weight).
  static Composition from_descent_set(std::size_t weight,
                                      std::span<const std::size_t> descents);
  static Composition parse(std::string_view text);

  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t part(std::size_t h) const { return parts_.at(h - 1); }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// D(alpha) = {alpha_1, alpha_1 + alpha_2, ...}, ell(alpha) - 1 elements.
  std::vector<std::size_t> descent_set() const;

  WeakComposition as_weak() const;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<std::size_t> parts);
  explicit Partition(std::vector<std::size_t> parts);
  static Partition parse(std::string_view text);

  std::span<const std::size_t> parts() const noexcept { return parts_; }
  std::size_t part(std::size_t h) const { return parts_.at(h - 1); }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t weight() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

WeakComposition weight(const Word& w);

/// Prefix-sum (dominance) comparison, missing terms read as 0.
bool weight_leq(const WeakComposition& a, const WeakComposition& b);

Word standardize(const Word& w);
bool is_standard(const Word& w);

/// Throws std::invalid_argument unless `w` is standard.
Word inverse_permutation(const Word& w);
std::vector<std::size_t> descent_set(const Word& w);
Composition descent_composition(const Word& w);

/// True iff `coarse` is obtained from `fine` by merging consecutive parts.
/// Throws std::invalid_argument on weight mismatch.
bool coarser(const Composition& coarse, const Composition& fine);

/// Every beta with beta coarser than `a`, each once. Order: masks over the
/// descent set of `a` counted down from "keep every descent" to "keep none",
/// bit j standing for the j-th smallest descent.
std::vector<Composition> coarsenings(const Composition& a);

/// All compositions of `weight`, in the order of coarsenings((1,...,1)).
std::vector<Composition> compositions_of(std::size_t weight);

std::vector<Word> max_decreasing_factorization(const Word& w);

/// True iff `w` contains a subsequence (i+1) i.
bool has_inversion(const Word& w, Symbol i);

/// Reverse `w` and replace each a by n - a + 1.
Word schuetzenberger_involution(const Word& w, Symbol n);

}  // namespace hypo

template <>
struct std::hash<hypo::Word> {
  std::size_t operator()(const hypo::Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto a : w) h = h * 1000003u ^ (a + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};
