#pragma once

// Young tableaux, Schensted insertion and the classical RSK correspondence,
// tableau words, Yamanouchi words and the plactic congruence.
//
// Tableaux are stored by rows (top row first, English convention); tabloids
// are stored by columns, each column listed top to bottom.

#include <optional>
#include <utility>
#include <vector>

#include "hypo/words.hpp"

namespace hypo {

using Rows = std::vector<std::vector<Symbol>>;

struct RskPair;

class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws std::invalid_argument if `rows` is not a Young tableau.
  explicit YoungTableau(Rows rows);

  static bool is_valid(const Rows& rows);

  const Rows& rows() const noexcept { return rows_; }
  Partition shape() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

 private:
  friend YoungTableau schensted_insert(YoungTableau t, Symbol a);
  friend RskPair rsk(const Word& w);
  Rows rows_;
};

class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  explicit StandardYoungTableau(Rows rows);

  static bool is_valid(const Rows& rows);

  const Rows& rows() const noexcept { return rows_; }
  Partition shape() const;
  std::size_t size() const noexcept;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
  friend auto operator<=>(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  Rows rows_;
};

class Tabloid {
 public:
  Tabloid() = default;
  /// Columns listed left to right, entries top to bottom; each column must
  /// be non-empty and strictly increasing.
  explicit Tabloid(Rows columns);

  const Rows& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept;

  /// The tableau with these columns, if the columns top-align into one.
  std::optional<YoungTableau> as_tableau() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;

 private:
  Rows columns_;
};

struct RelationSet {
  std::vector<std::pair<Word, Word>> pairs;
};

YoungTableau schensted_insert(YoungTableau t, Symbol a);

struct RskPair {
  YoungTableau p;
  StandardYoungTableau q;
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

RskPair rsk(const Word& w);
/// Reverse bumping. Throws std::invalid_argument when the shapes differ.
Word rsk_inverse(const YoungTableau& p, const StandardYoungTableau& q);

/// Columns left to right, each read bottom to top.
Word column_reading(const Tabloid& t);
Word column_reading(const YoungTableau& t);
Tabloid tabloid_of(const Word& w);
/// Columns of a tableau as a tabloid (lossless conversion).
Tabloid to_tabloid(const YoungTableau& t);

bool is_tableau_word(const Word& w);
bool is_yamanouchi(const Word& w);
bool plactic_congruent(const Word& u, const Word& v);

/// Every instance of acb <-> cab (a <= b < c) and bac <-> bca (a < b <= c)
/// over symbols 1..n.
RelationSet plactic_relations(Symbol n);

}  // namespace hypo
