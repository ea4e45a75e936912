#include "hypo/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypo {

namespace {

void check_symbol(Symbol a) {
  if (a == 0) throw std::invalid_argument("symbols are positive integers");
}

std::vector<std::size_t> parse_integer_list(std::string_view text) {
  std::vector<std::size_t> values;
  if (text.empty()) return values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) {
      // trailing comma
      if (comma == text.size() && !values.empty()) break;
      throw std::invalid_argument("empty field in integer list '" + std::string(text) + "'");
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("not an integer: '" + std::string(field) + "'");
    values.push_back(value);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return values;
}

std::string join(std::span<const std::size_t> values) {
  std::string out;
  for (std::size_t h = 0; h < values.size(); ++h) {
    if (h) out += ',';
    out += std::to_string(values[h]);
  }
  return out;
}

std::string strip_parens(std::string_view text) {
  std::string s(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s.erase(0, 1);
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) s.pop_back();
  return s;
}

}  // namespace

Word::Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {
  std::for_each(symbols_.begin(), symbols_.end(), check_symbol);
}

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::for_each(symbols_.begin(), symbols_.end(), check_symbol);
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string_view::npos) {
    for (auto v : parse_integer_list(text)) {
      if (v == 0 || v > UINT32_MAX) throw std::invalid_argument("symbol out of range: " + std::to_string(v));
      symbols.push_back(static_cast<Symbol>(v));
    }
    return Word(std::move(symbols));
  }
  for (char c : text) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("invalid word '" + std::string(text) +
                                  "': expected digits 1-9 or a comma-separated list");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(symbols));
}

std::string Word::to_string() const {
  if (max_symbol() <= 9) {
    std::string out;
    for (auto a : symbols_) out += static_cast<char>('0' + a);
    return out;
  }
  std::string out;
  for (std::size_t h = 0; h < symbols_.size(); ++h) {
    if (h) out += ',';
    out += std::to_string(symbols_[h]);
  }
  if (symbols_.size() == 1) out += ',';
  return out;
}

void Word::push_back(Symbol a) {
  check_symbol(a);
  symbols_.push_back(a);
}

void Word::set(std::size_t index, Symbol a) {
  check_symbol(a);
  symbols_.at(index) = a;
}

std::size_t Word::count(Symbol a) const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), a));
}

Symbol Word::max_symbol() const noexcept {
  return symbols_.empty() ? 0 : *std::max_element(symbols_.begin(), symbols_.end());
}

Word Word::reversed() const {
  return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

Word Word::factor(std::size_t first, std::size_t length) const {
  if (first + length > symbols_.size()) throw std::out_of_range("factor out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(first + length)));
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.symbols_.insert(lhs.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return lhs;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string("ε") : w.to_string());
}

// ---------------------------------------------------------------------------

WeakComposition::WeakComposition(std::initializer_list<std::size_t> terms) : terms_(terms) {
  canonicalize();
}

WeakComposition::WeakComposition(std::vector<std::size_t> terms) : terms_(std::move(terms)) {
  canonicalize();
}

void WeakComposition::canonicalize() {
  while (!terms_.empty() && terms_.back() == 0) terms_.pop_back();
}

std::size_t WeakComposition::term(std::size_t k) const noexcept {
  return (k >= 1 && k <= terms_.size()) ? terms_[k - 1] : 0;
}

std::size_t WeakComposition::weight() const noexcept {
  return std::accumulate(terms_.begin(), terms_.end(), std::size_t{0});
}

std::string WeakComposition::to_string() const { return join(terms_); }

std::ostream& operator<<(std::ostream& os, const WeakComposition& c) {
  return os << '(' << c.to_string() << ')';
}

// ---------------------------------------------------------------------------

Composition::Composition(std::initializer_list<std::size_t> parts)
    : Composition(std::vector<std::size_t>(parts)) {}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::from_descent_set(std::size_t weight,
                                          std::span<const std::size_t> descents) {
  std::vector<std::size_t> parts;
  std::size_t previous = 0;
  for (auto d : descents) {
    if (d <= previous || d >= weight)
      throw std::invalid_argument("descent set must be increasing and inside (0, weight)");
    parts.push_back(d - previous);
    previous = d;
  }
  if (weight > 0) parts.push_back(weight - previous);
  return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) {
  return Composition(parse_integer_list(strip_parens(text)));
}

std::size_t Composition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::vector<std::size_t> Composition::descent_set() const {
  std::vector<std::size_t> d;
  std::size_t sum = 0;
  for (std::size_t h = 0; h + 1 < parts_.size(); ++h) {
    sum += parts_[h];
    d.push_back(sum);
  }
  return d;
}

WeakComposition Composition::as_weak() const { return WeakComposition(parts_); }

std::string Composition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << '(' << c.to_string() << ')';
}

// ---------------------------------------------------------------------------

Partition::Partition(std::initializer_list<std::size_t> parts)
    : Partition(std::vector<std::size_t>(parts)) {}

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t h = 0; h < parts_.size(); ++h) {
    if (parts_[h] == 0) throw std::invalid_argument("partition parts must be positive");
    if (h > 0 && parts_[h] > parts_[h - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

Partition Partition::parse(std::string_view text) {
  return Partition(parse_integer_list(strip_parens(text)));
}

std::size_t Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Partition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

// ---------------------------------------------------------------------------

WeakComposition weight(const Word& w) {
  std::vector<std::size_t> terms(w.max_symbol(), 0);
  for (auto a : w) ++terms[a - 1];
  return WeakComposition(std::move(terms));
}

bool weight_leq(const WeakComposition& a, const WeakComposition& b) {
  const auto k_max = std::max(a.length(), b.length());
  std::size_t sum_a = 0, sum_b = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    sum_a += a.term(k);
    sum_b += b.term(k);
    if (sum_a > sum_b) return false;
  }
  return true;
}

Word standardize(const Word& w) {
  // Stable sort of positions by symbol realizes a_i < b_j iff a < b or
  // (a = b and i < j).
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
  std::vector<Symbol> result(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    result[order[rank]] = static_cast<Symbol>(rank + 1);
  return Word(std::move(result));
}

bool is_standard(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (auto a : w) {
    if (a > w.size() || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

namespace {
void require_standard(const Word& w, const char* what) {
  if (!is_standard(w))
    throw std::invalid_argument(std::string(what) + ": '" + w.to_string() + "' is not a standard word");
}
}  // namespace

Word inverse_permutation(const Word& w) {
  require_standard(w, "inverse_permutation");
  std::vector<Symbol> r(w.size());
  for (std::size_t h = 0; h < w.size(); ++h) r[w[h] - 1] = static_cast<Symbol>(h + 1);
  return Word(std::move(r));
}

std::vector<std::size_t> descent_set(const Word& w) {
  require_standard(w, "descent_set");
  std::vector<std::size_t> d;
  for (std::size_t h = 0; h + 1 < w.size(); ++h)
    if (w[h] > w[h + 1]) d.push_back(h + 1);
  return d;
}

Composition descent_composition(const Word& w) {
  auto d = descent_set(w);
  return Composition::from_descent_set(w.size(), d);
}

bool coarser(const Composition& coarse, const Composition& fine) {
  if (coarse.weight() != fine.weight())
    throw std::invalid_argument("coarser: compositions of different weight");
  auto fine_d = fine.descent_set();
  for (auto d : coarse.descent_set())
    if (!std::binary_search(fine_d.begin(), fine_d.end(), d)) return false;
  return true;
}

std::vector<Composition> coarsenings(const Composition& a) {
  const auto d = a.descent_set();
  if (d.size() >= 8 * sizeof(std::size_t) - 1)
    throw std::length_error("coarsenings: too many parts to enumerate");
  const std::size_t count = std::size_t{1} << d.size();
  std::vector<Composition> out;
  out.reserve(count);
  std::vector<std::size_t> kept;
  for (std::size_t mask = count; mask-- > 0;) {
    kept.clear();
    for (std::size_t j = 0; j < d.size(); ++j)
      if (mask & (std::size_t{1} << j)) kept.push_back(d[j]);
    out.push_back(Composition::from_descent_set(a.weight(), kept));
  }
  return out;
}

std::vector<Composition> compositions_of(std::size_t weight) {
  if (weight == 0) return {Composition{}};
  return coarsenings(Composition(std::vector<std::size_t>(weight, 1)));
}

std::vector<Word> max_decreasing_factorization(const Word& w) {
  std::vector<Word> factors;
  std::vector<Symbol> current;
  for (auto a : w) {
    if (!current.empty() && a >= current.back()) {
      factors.emplace_back(std::move(current));
      current.clear();
    }
    current.push_back(a);
  }
  if (!current.empty()) factors.emplace_back(std::move(current));
  return factors;
}

bool has_inversion(const Word& w, Symbol i) {
  bool seen_upper = false;
  for (auto a : w) {
    if (a == i + 1) seen_upper = true;
    else if (a == i && seen_upper) return true;
  }
  return false;
}

Word schuetzenberger_involution(const Word& w, Symbol n) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) {
    if (*it > n)
      throw std::invalid_argument("schuetzenberger_involution: symbol " + std::to_string(*it) +
                                  " exceeds alphabet bound " + std::to_string(n));
    out.push_back(n - *it + 1);
  }
  return Word(std::move(out));
}

}  // namespace hypo
