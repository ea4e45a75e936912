#pragma once

// Quasi-ribbon tableaux, Krob-Thibon insertion and the hypoplactic RSK
// correspondence, the hypoplactic congruence, and the slide up-slide left
// bridge to Young tableaux.
//
// A ribbon filling of shape alpha is stored as its entries in reading order
// along the ribbon (row 1 left to right, then row 2, ...). Consecutive cells
// h, h+1 of that order are vertically adjacent exactly when h is in D(alpha),
// and horizontally adjacent otherwise.

#include <span>
#include <vector>

#include "hypo/words.hpp"
#include "hypo/young.hpp"

namespace hypo {

class QuasiRibbonTableau {
 public:
  QuasiRibbonTableau() = default;
  /// Throws std::invalid_argument unless rows are non-decreasing and
  /// two-cell columns strictly increase downwards.
  QuasiRibbonTableau(Composition shape, std::vector<Symbol> entries);
  static QuasiRibbonTableau from_rows(const Rows& rows);
  static bool is_valid(const Composition& shape, std::span<const Symbol> entries);

  const Composition& shape() const noexcept { return shape_; }
  std::span<const Symbol> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Rows rows() const;
  /// Columns left to right, entries top to bottom.
  Rows columns() const;

  friend bool operator==(const QuasiRibbonTableau&, const QuasiRibbonTableau&) = default;
  friend auto operator<=>(const QuasiRibbonTableau&, const QuasiRibbonTableau&) = default;

 private:
  Composition shape_;
  std::vector<Symbol> entries_;
};

/// Records insertion order: entries 1..N once each, rows increasing left to
/// right, two-cell columns increasing bottom to top.
class RecordingRibbon {
 public:
  RecordingRibbon() = default;
  RecordingRibbon(Composition shape, std::vector<Symbol> entries);
  static RecordingRibbon from_rows(const Rows& rows);
  static bool is_valid(const Composition& shape, std::span<const Symbol> entries);

  const Composition& shape() const noexcept { return shape_; }
  std::span<const Symbol> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Rows rows() const;

  friend bool operator==(const RecordingRibbon&, const RecordingRibbon&) = default;
  friend auto operator<=>(const RecordingRibbon&, const RecordingRibbon&) = default;

 private:
  Composition shape_;
  std::vector<Symbol> entries_;
};

class QuasiRibbonTabloid {
 public:
  QuasiRibbonTabloid() = default;
  /// Columns left to right, entries top to bottom, each strictly increasing.
  explicit QuasiRibbonTabloid(Rows columns);

  const Rows& columns() const noexcept { return columns_; }
  Composition shape() const;
  Rows rows() const;
  std::size_t size() const noexcept;

  friend bool operator==(const QuasiRibbonTabloid&, const QuasiRibbonTabloid&) = default;

 private:
  Rows columns_;
};

/// Rows of a ribbon filling given in reading order.
Rows ribbon_rows(const Composition& shape, std::span<const Symbol> entries);
/// Columns (top to bottom) of a ribbon filling given in reading order.
Rows ribbon_columns(const Composition& shape, std::span<const Symbol> entries);

QuasiRibbonTableau kt_insert(const QuasiRibbonTableau& t, Symbol a);

struct HypoRskPair {
  QuasiRibbonTableau t;
  RecordingRibbon r;
  friend bool operator==(const HypoRskPair&, const HypoRskPair&) = default;
};

HypoRskPair hypo_rsk(const Word& w);
/// Throws std::invalid_argument when the shapes differ.
Word hypo_rsk_inverse(const QuasiRibbonTableau& t, const RecordingRibbon& r);

Word qr_column_reading(const QuasiRibbonTabloid& t);
Word qr_column_reading(const QuasiRibbonTableau& t);
QuasiRibbonTabloid qr_tabloid_of(const Word& w);
bool is_quasi_ribbon_word(const Word& w);

/// descomp(std(w)^-1), the shape of the quasi-ribbon tableau of w.
Composition predicted_shape(const Word& w);
bool hypo_congruent(const Word& u, const Word& v);

/// The plactic relations plus every instance of cadb <-> acbd
/// (a <= b < c <= d) and bdac <-> dbca (a < b <= c < d) over 1..n.
RelationSet hypoplactic_relations(Symbol n);

/// The quasi-ribbon tableau of the given shape filled with 1..|shape| in
/// reading order.
QuasiRibbonTableau standard_ribbon_filling(const Composition& shape);

YoungTableau slide_up_slide_left(const QuasiRibbonTableau& t);
/// Slide up-slide left applied to standard_ribbon_filling(shape).
StandardYoungTableau slide_up_slide_left_standard(const Composition& shape);

/// Reading of the quasi-ribbon tableau of shape alpha whose row j holds only j.
Word highest_weight_qrw(const Composition& shape);

/// Every quasi-ribbon tableau of the given shape over 1..n, in
/// lexicographic order of entries.
std::vector<QuasiRibbonTableau> enumerate_qrts(const Composition& shape, Symbol n);

}  // namespace hypo
