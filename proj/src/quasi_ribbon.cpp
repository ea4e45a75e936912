#include "hypo/quasi_ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypo {

namespace {

// Break positions of a ribbon: b in the set means cells b and b+1
// (1-indexed reading order) are vertically adjacent.
using Breaks = std::vector<std::size_t>;

bool is_break(const Breaks& breaks, std::size_t b) {
  return std::binary_search(breaks.begin(), breaks.end(), b);
}

void check_size(const Composition& shape, std::size_t entries) {
  if (shape.weight() != entries)
    throw std::invalid_argument("ribbon filling has " + std::to_string(entries) +
                                " entries but shape " + shape.to_string() + " has " +
                                std::to_string(shape.weight()) + " cells");
}

Composition composition_from_rows(const Rows& rows, std::vector<Symbol>& entries) {
  std::vector<std::size_t> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("ribbon rows must be non-empty");
    parts.push_back(row.size());
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Composition(std::move(parts));
}

// Insertion on the flat representation; returns the 0-indexed position of
// the new cell. Breaks are updated in place.
std::size_t insert_flat(std::vector<Symbol>& entries, Breaks& breaks, Symbol a) {
  const auto p = static_cast<std::size_t>(
      std::upper_bound(entries.begin(), entries.end(), a) - entries.begin());
  const bool has_successor = p < entries.size();
  entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(p), a);
  Breaks updated;
  for (auto b : breaks) {
    if (b < p) updated.push_back(b);
    else if (b > p) updated.push_back(b + 1);
  }
  // New cell sits right of x; z (if any) hangs below it.
  if (has_successor) updated.push_back(p + 1);
  std::sort(updated.begin(), updated.end());
  breaks = std::move(updated);
  return p;
}

}  // namespace

Rows ribbon_rows(const Composition& shape, std::span<const Symbol> entries) {
  check_size(shape, entries.size());
  Rows rows;
  std::size_t k = 0;
  for (auto part : shape.parts()) {
    rows.emplace_back(entries.begin() + static_cast<std::ptrdiff_t>(k),
                      entries.begin() + static_cast<std::ptrdiff_t>(k + part));
    k += part;
  }
  return rows;
}

Rows ribbon_columns(const Composition& shape, std::span<const Symbol> entries) {
  check_size(shape, entries.size());
  const auto breaks = shape.descent_set();
  Rows columns;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k == 0 || !is_break(breaks, k)) columns.emplace_back();
    columns.back().push_back(entries[k]);
  }
  return columns;
}

// ---------------------------------------------------------------------------

QuasiRibbonTableau::QuasiRibbonTableau(Composition shape, std::vector<Symbol> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  check_size(shape_, entries_.size());
  if (!is_valid(shape_, entries_)) throw std::invalid_argument("not a quasi-ribbon tableau");
}

QuasiRibbonTableau QuasiRibbonTableau::from_rows(const Rows& rows) {
  std::vector<Symbol> entries;
  auto shape = composition_from_rows(rows, entries);
  return QuasiRibbonTableau(std::move(shape), std::move(entries));
}

bool QuasiRibbonTableau::is_valid(const Composition& shape, std::span<const Symbol> entries) {
  if (shape.weight() != entries.size()) return false;
  const auto breaks = shape.descent_set();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] == 0) return false;
    if (k == 0) continue;
    if (is_break(breaks, k) ? entries[k - 1] >= entries[k] : entries[k - 1] > entries[k])
      return false;
  }
  return true;
}

Rows QuasiRibbonTableau::rows() const { return ribbon_rows(shape_, entries_); }
Rows QuasiRibbonTableau::columns() const { return ribbon_columns(shape_, entries_); }

RecordingRibbon::RecordingRibbon(Composition shape, std::vector<Symbol> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  check_size(shape_, entries_.size());
  if (!is_valid(shape_, entries_)) throw std::invalid_argument("not a recording ribbon");
}

RecordingRibbon RecordingRibbon::from_rows(const Rows& rows) {
  std::vector<Symbol> entries;
  auto shape = composition_from_rows(rows, entries);
  return RecordingRibbon(std::move(shape), std::move(entries));
}

bool RecordingRibbon::is_valid(const Composition& shape, std::span<const Symbol> entries) {
  if (shape.weight() != entries.size()) return false;
  std::vector<bool> seen(entries.size() + 1, false);
  for (auto e : entries) {
    if (e == 0 || e > entries.size() || seen[e]) return false;
    seen[e] = true;
  }
  const auto breaks = shape.descent_set();
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const bool vertical = is_break(breaks, k);
    if (vertical ? entries[k - 1] < entries[k] : entries[k - 1] > entries[k]) return false;
  }
  return true;
}

Rows RecordingRibbon::rows() const { return ribbon_rows(shape_, entries_); }

QuasiRibbonTabloid::QuasiRibbonTabloid(Rows columns) : columns_(std::move(columns)) {
  for (const auto& col : columns_) {
    if (col.empty()) throw std::invalid_argument("quasi-ribbon tabloid columns must be non-empty");
    if (col.front() == 0) throw std::invalid_argument("symbols are positive integers");
    for (std::size_t r = 1; r < col.size(); ++r)
      if (col[r - 1] >= col[r])
        throw std::invalid_argument("quasi-ribbon tabloid columns must strictly increase downwards");
  }
}

Composition QuasiRibbonTabloid::shape() const {
  std::vector<std::size_t> breaks;
  std::size_t k = 0;
  for (const auto& col : columns_) {
    for (std::size_t r = 1; r < col.size(); ++r) breaks.push_back(k + r);
    k += col.size();
  }
  return Composition::from_descent_set(k, breaks);
}

Rows QuasiRibbonTabloid::rows() const {
  std::vector<Symbol> flat;
  for (const auto& col : columns_) flat.insert(flat.end(), col.begin(), col.end());
  return ribbon_rows(shape(), flat);
}

std::size_t QuasiRibbonTabloid::size() const noexcept {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

// ---------------------------------------------------------------------------

QuasiRibbonTableau kt_insert(const QuasiRibbonTableau& t, Symbol a) {
  if (a == 0) throw std::invalid_argument("symbols are positive integers");
  std::vector<Symbol> entries(t.entries().begin(), t.entries().end());
  auto breaks = t.shape().descent_set();
  insert_flat(entries, breaks, a);
  const auto size = entries.size();
  return QuasiRibbonTableau(Composition::from_descent_set(size, breaks), std::move(entries));
}

HypoRskPair hypo_rsk(const Word& w) {
  std::vector<Symbol> entries, labels;
  Breaks breaks;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto p = insert_flat(entries, breaks, w[i]);
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(p), static_cast<Symbol>(i + 1));
  }
  auto shape = Composition::from_descent_set(w.size(), breaks);
  return {QuasiRibbonTableau(shape, std::move(entries)), RecordingRibbon(shape, std::move(labels))};
}

Word hypo_rsk_inverse(const QuasiRibbonTableau& t, const RecordingRibbon& r) {
  if (t.shape() != r.shape())
    throw std::invalid_argument("hypo_rsk_inverse: tableau shape " + t.shape().to_string() +
                                " differs from recording ribbon shape " + r.shape().to_string());
  std::vector<Symbol> entries(t.entries().begin(), t.entries().end());
  std::vector<Symbol> labels(r.entries().begin(), r.entries().end());
  auto breaks = t.shape().descent_set();
  std::vector<Symbol> word(entries.size());
  for (auto k = entries.size(); k > 0; --k) {
    const auto p = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), static_cast<Symbol>(k)) - labels.begin());
    word[k - 1] = entries[p];
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(p));
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(p));
    Breaks updated;
    for (auto b : breaks) {
      if (b < p) updated.push_back(b);
      else if (b > p + 1) updated.push_back(b - 1);
    }
    // x and z were vertically adjacent before a was inserted iff the labels
    // read downwards decrease across the gap.
    if (p > 0 && p < labels.size() && labels[p - 1] > labels[p]) updated.push_back(p);
    std::sort(updated.begin(), updated.end());
    breaks = std::move(updated);
  }
  return Word(std::move(word));
}

Word qr_column_reading(const QuasiRibbonTabloid& t) {
  std::vector<Symbol> out;
  for (const auto& col : t.columns()) out.insert(out.end(), col.rbegin(), col.rend());
  return Word(std::move(out));
}

Word qr_column_reading(const QuasiRibbonTableau& t) {
  return qr_column_reading(QuasiRibbonTabloid(t.columns()));
}

QuasiRibbonTabloid qr_tabloid_of(const Word& w) {
  Rows columns;
  for (const auto& factor : max_decreasing_factorization(w))
    columns.emplace_back(factor.symbols().rbegin(), factor.symbols().rend());
  return QuasiRibbonTabloid(std::move(columns));
}

bool is_quasi_ribbon_word(const Word& w) {
  // Bottom of each column against the top of the next one.
  const auto factors = max_decreasing_factorization(w);
  for (std::size_t h = 1; h < factors.size(); ++h)
    if (factors[h - 1][0] > factors[h][factors[h].size() - 1]) return false;
  return true;
}

Composition predicted_shape(const Word& w) {
  return descent_composition(inverse_permutation(standardize(w)));
}

bool hypo_congruent(const Word& u, const Word& v) {
  return weight(u) == weight(v) && predicted_shape(u) == predicted_shape(v);
}

RelationSet hypoplactic_relations(Symbol n) {
  auto set = plactic_relations(n);
  for (Symbol a = 1; a <= n; ++a)
    for (Symbol b = 1; b <= n; ++b)
      for (Symbol c = 1; c <= n; ++c)
        for (Symbol d = 1; d <= n; ++d) {
          if (a <= b && b < c && c <= d) set.pairs.emplace_back(Word{c, a, d, b}, Word{a, c, b, d});
          if (a < b && b <= c && c < d) set.pairs.emplace_back(Word{b, d, a, c}, Word{d, b, c, a});
        }
  return set;
}

QuasiRibbonTableau standard_ribbon_filling(const Composition& shape) {
  std::vector<Symbol> entries(shape.weight());
  std::iota(entries.begin(), entries.end(), Symbol{1});
  return QuasiRibbonTableau(shape, std::move(entries));
}

namespace {
Rows slide(const Rows& columns) {
  Rows rows;
  for (const auto& col : columns)
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  return rows;
}
}  // namespace

YoungTableau slide_up_slide_left(const QuasiRibbonTableau& t) { return YoungTableau(slide(t.columns())); }

StandardYoungTableau slide_up_slide_left_standard(const Composition& shape) {
  return StandardYoungTableau(slide(standard_ribbon_filling(shape).columns()));
}

Word highest_weight_qrw(const Composition& shape) {
  std::vector<Symbol> entries;
  for (std::size_t j = 1; j <= shape.length(); ++j)
    entries.insert(entries.end(), shape.part(j), static_cast<Symbol>(j));
  return qr_column_reading(QuasiRibbonTableau(shape, std::move(entries)));
}

std::vector<QuasiRibbonTableau> enumerate_qrts(const Composition& shape, Symbol n) {
  std::vector<QuasiRibbonTableau> out;
  const auto size = shape.weight();
  if (shape.length() > n) return out;
  const auto breaks = shape.descent_set();
  std::vector<Symbol> entries(size);
  // Depth-first fill along the reading order.
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (k == size) {
      out.emplace_back(shape, entries);
      return;
    }
    Symbol low = 1;
    if (k > 0) low = entries[k - 1] + (is_break(breaks, k) ? 1 : 0);
    for (Symbol a = low; a <= n; ++a) {
      entries[k] = a;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
  return out;
}

}  // namespace hypo
