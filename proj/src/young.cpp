#include "hypo/young.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hypo {

namespace {

std::vector<std::size_t> row_lengths(const Rows& rows) {
  std::vector<std::size_t> lengths;
  lengths.reserve(rows.size());
  for (const auto& r : rows) lengths.push_back(r.size());
  return lengths;
}

bool has_partition_shape(const Rows& rows) {
  for (std::size_t h = 0; h < rows.size(); ++h) {
    if (rows[h].empty()) return false;
    if (h > 0 && rows[h].size() > rows[h - 1].size()) return false;
  }
  return true;
}

bool columns_strict(const Rows& rows) {
  for (std::size_t h = 1; h < rows.size(); ++h)
    for (std::size_t c = 0; c < rows[h].size(); ++c)
      if (rows[h - 1][c] >= rows[h][c]) return false;
  return true;
}

std::size_t cell_count(const Rows& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

// Returns the row index that received a new cell.
std::size_t insert_into_rows(Rows& rows, Symbol a) {
  for (std::size_t h = 0; h < rows.size(); ++h) {
    auto& row = rows[h];
    auto it = std::upper_bound(row.begin(), row.end(), a);
    if (it == row.end()) {
      row.push_back(a);
      return h;
    }
    std::swap(*it, a);
  }
  rows.push_back({a});
  return rows.size() - 1;
}

}  // namespace

YoungTableau::YoungTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_valid(rows_)) throw std::invalid_argument("not a Young tableau");
}

bool YoungTableau::is_valid(const Rows& rows) {
  if (!has_partition_shape(rows)) return false;
  for (const auto& r : rows) {
    if (std::find(r.begin(), r.end(), Symbol{0}) != r.end()) return false;
    if (!std::is_sorted(r.begin(), r.end())) return false;
  }
  return columns_strict(rows);
}

Partition YoungTableau::shape() const { return Partition(row_lengths(rows_)); }
std::size_t YoungTableau::size() const noexcept { return cell_count(rows_); }

StandardYoungTableau::StandardYoungTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_valid(rows_)) throw std::invalid_argument("not a standard Young tableau");
}

bool StandardYoungTableau::is_valid(const Rows& rows) {
  if (!has_partition_shape(rows) || !columns_strict(rows)) return false;
  const auto n = cell_count(rows);
  std::vector<bool> seen(n + 1, false);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0 || r[c] > n || seen[r[c]]) return false;
      seen[r[c]] = true;
      if (c > 0 && r[c - 1] >= r[c]) return false;
    }
  }
  return true;
}

Partition StandardYoungTableau::shape() const { return Partition(row_lengths(rows_)); }
std::size_t StandardYoungTableau::size() const noexcept { return cell_count(rows_); }

Tabloid::Tabloid(Rows columns) : columns_(std::move(columns)) {
  for (const auto& col : columns_) {
    if (col.empty()) throw std::invalid_argument("tabloid columns must be non-empty");
    if (col.front() == 0) throw std::invalid_argument("symbols are positive integers");
    for (std::size_t r = 1; r < col.size(); ++r)
      if (col[r - 1] >= col[r])
        throw std::invalid_argument("tabloid columns must be strictly increasing top to bottom");
  }
}

std::size_t Tabloid::size() const noexcept { return cell_count(columns_); }

std::optional<YoungTableau> Tabloid::as_tableau() const {
  Rows rows;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (c > 0 && col.size() > columns_[c - 1].size()) return std::nullopt;
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  }
  if (!YoungTableau::is_valid(rows)) return std::nullopt;
  return YoungTableau(std::move(rows));
}

YoungTableau schensted_insert(YoungTableau t, Symbol a) {
  if (a == 0) throw std::invalid_argument("symbols are positive integers");
  insert_into_rows(t.rows_, a);
  return t;
}

RskPair rsk(const Word& w) {
  RskPair out;
  Rows q_rows;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto row = insert_into_rows(out.p.rows_, w[i]);
    if (q_rows.size() <= row) q_rows.emplace_back();
    q_rows[row].push_back(static_cast<Symbol>(i + 1));
    assert(row_lengths(out.p.rows_) == row_lengths(q_rows));
  }
  out.q = StandardYoungTableau(std::move(q_rows));
  return out;
}

Word rsk_inverse(const YoungTableau& p, const StandardYoungTableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("P and Q have different shapes");
  Rows rows = p.rows();
  std::vector<std::pair<std::size_t, std::size_t>> where(q.size() + 1);
  for (std::size_t h = 0; h < q.rows().size(); ++h)
    for (std::size_t c = 0; c < q.rows()[h].size(); ++c) where[q.rows()[h][c]] = {h, c};
  std::vector<Symbol> out(q.size());
  for (std::size_t k = q.size(); k >= 1; --k) {
    auto h = where[k].first;
    Symbol a = rows[h].back();
    rows[h].pop_back();
    if (rows[h].empty()) rows.pop_back();
    while (h-- > 0) {
      auto& row = rows[h];
      auto it = std::lower_bound(row.begin(), row.end(), a);
      --it;
      std::swap(*it, a);
    }
    out[k - 1] = a;
  }
  return Word(std::move(out));
}

Word column_reading(const Tabloid& t) {
  std::vector<Symbol> out;
  out.reserve(t.size());
  for (const auto& col : t.columns()) out.insert(out.end(), col.rbegin(), col.rend());
  return Word(std::move(out));
}

Tabloid to_tabloid(const YoungTableau& t) {
  const auto& rows = t.rows();
  Rows columns(rows.empty() ? 0 : rows.front().size());
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  return Tabloid(std::move(columns));
}

Word column_reading(const YoungTableau& t) { return column_reading(to_tabloid(t)); }

Tabloid tabloid_of(const Word& w) {
  Rows columns;
  for (const auto& factor : max_decreasing_factorization(w))
    columns.emplace_back(factor.symbols().rbegin(), factor.symbols().rend());
  return Tabloid(std::move(columns));
}

bool is_tableau_word(const Word& w) { return tabloid_of(w).as_tableau().has_value(); }

bool is_yamanouchi(const Word& w) {
  std::vector<std::size_t> counts(w.max_symbol() + 2, 0);
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    const auto a = *it;
    ++counts[a];
    if (a > 1 && counts[a] > counts[a - 1]) return false;
  }
  return true;
}

bool plactic_congruent(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  return rsk(u).p == rsk(v).p;
}

RelationSet plactic_relations(Symbol n) {
  RelationSet set;
  for (Symbol a = 1; a <= n; ++a)
    for (Symbol b = 1; b <= n; ++b)
      for (Symbol c = 1; c <= n; ++c) {
        if (a <= b && b < c) set.pairs.emplace_back(Word{a, c, b}, Word{c, a, b});
        if (a < b && b <= c) set.pairs.emplace_back(Word{b, a, c}, Word{b, c, a});
      }
  return set;
}

}  // namespace hypo
