#include "hypo/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hypo/quasi_ribbon.hpp"
#include "hypo/young.hpp"

namespace hypo {

namespace {

void check_alphabet(const Word& w, Symbol n) {
  if (n == 0) throw std::invalid_argument("alphabet bound n must be at least 1");
  if (w.max_symbol() > n)
    throw std::invalid_argument("word " + w.to_string() + " has a symbol above n = " +
                                std::to_string(n));
}

void guard_length(std::size_t length) {
  if (length > kBruteForceMaxLength)
    throw EnumerationTooLarge("brute-force enumeration limited to " +
                              std::to_string(kBruteForceMaxLength) + " letters, got " +
                              std::to_string(length));
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

BigInt multinomial(const MultinomialArgs& args) {
  const auto sum = std::accumulate(args.parts.begin(), args.parts.end(), std::size_t{0});
  if (sum != args.total)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + ", not " +
                                std::to_string(args.total));
  BigInt out = 1;
  std::size_t used = 0;
  for (auto p : args.parts) {
    used += p;
    out *= binomial(used, p);
  }
  return out;
}

std::vector<Word> words_of_weight(const WeakComposition& content) {
  std::vector<Symbol> letters;
  for (std::size_t k = 1; k <= content.length(); ++k)
    letters.insert(letters.end(), content.term(k), static_cast<Symbol>(k));
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<Word> all_words(Symbol n, std::size_t length) {
  if (n == 0) return length == 0 ? std::vector<Word>{Word{}} : std::vector<Word>{};
  std::vector<Word> out;
  std::vector<Symbol> letters(length, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t k = length;
    while (k > 0 && letters[k - 1] == n) letters[--k] = 1;
    if (k == 0) break;
    ++letters[k - 1];
  }
  return out;
}

BigInt hypo_class_size(const Composition& shape, Symbol n) {
  if (shape.length() > n) return 0;
  BigInt total = 0;
  for (const auto& beta : coarsenings(shape)) {
    auto term = multinomial({beta.weight(), {beta.parts().begin(), beta.parts().end()}});
    if ((shape.length() - beta.length()) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

BigInt class_size_with_content(const Composition& shape, const WeakComposition& content) {
  guard_length(content.weight());
  if (content.weight() != shape.weight()) return 0;
  // The only candidate filling is the content listed in increasing order.
  std::vector<Symbol> entries;
  for (std::size_t k = 1; k <= content.length(); ++k)
    entries.insert(entries.end(), content.term(k), static_cast<Symbol>(k));
  if (!QuasiRibbonTableau::is_valid(shape, entries)) return 0;
  const QuasiRibbonTableau target(shape, std::move(entries));
  BigInt count = 0;
  for (const auto& u : words_of_weight(content))
    if (hypo_rsk(u).t == target) ++count;
  return count;
}

BigInt hypo_class_size_brute(const Composition& shape, Symbol n) {
  guard_length(shape.weight());
  if (shape.length() > n) return 0;
  return class_size_with_content(shape, shape.as_weak());
}

std::vector<Word> hypo_class_members(const Word& w) {
  guard_length(w.size());
  const auto target = hypo_rsk(w).t;
  std::vector<Word> out;
  for (auto& u : words_of_weight(weight(w)))
    if (hypo_rsk(u).t == target) out.push_back(std::move(u));
  return out;
}

bool novelli_recursion_check(const Composition& shape, Symbol n) {
  guard_length(shape.weight());
  if (n == 0) throw std::invalid_argument("alphabet bound n must be at least 1");
  const auto content = shape.as_weak();
  BigInt sum = 0;
  for (const auto& beta : coarsenings(shape)) {
    const auto size = class_size_with_content(beta, content);
    // Class sizes depend on the shape alone.
    if (size != hypo_class_size_brute(beta, static_cast<Symbol>(beta.length()))) return false;
    sum += size;
  }
  return sum == multinomial({shape.weight(), {shape.parts().begin(), shape.parts().end()}});
}

BigInt count_qrt(const Composition& shape, Symbol n) {
  if (shape.length() > n) return 0;
  return binomial(n + shape.weight() - shape.length(), n - shape.length());
}

BigInt count_qrt_brute(const Composition& shape, Symbol n) {
  guard_length(shape.weight());
  return enumerate_qrts(shape, n).size();
}

BigInt count_iso_plac_components_with_qrw(const Partition& shape, Symbol n) {
  if (shape.length() == 0) return 1;
  if (shape.weight() - shape.part(1) + 1 > n) return 0;
  MultinomialArgs args{shape.part(1), {}};
  for (std::size_t j = 1; j < shape.length(); ++j) args.parts.push_back(shape.part(j) - shape.part(j + 1));
  args.parts.push_back(shape.part(shape.length()));
  return multinomial(args);
}

BigInt count_iso_plac_components_with_qrw_brute(const Partition& shape, Symbol n) {
  BigInt words = 1;
  for (std::size_t k = 0; k < shape.weight(); ++k) words *= n;
  if (words > 10'000'000)
    throw EnumerationTooLarge("count_iso_plac_components_with_qrw_brute: " + words.str() +
                              " words to enumerate");
  std::set<StandardYoungTableau> recordings;
  for (const auto& w : all_words(n, shape.weight())) {
    if (!is_quasi_ribbon_word(w)) continue;
    auto pq = rsk(w);
    if (pq.p.shape() == shape) recordings.insert(std::move(pq.q));
  }
  return recordings.size();
}

BigInt factorization_count(const Word& w, const Composition& alpha, const Composition& beta, Symbol n) {
  check_alphabet(w, n);
  if (!is_quasi_ribbon_word(w))
    throw std::invalid_argument("factorization_count: " + w.to_string() + " is not a quasi-ribbon word");
  if (alpha.weight() + beta.weight() != w.size())
    throw std::invalid_argument("factorization_count: |alpha| + |beta| = " +
                                std::to_string(alpha.weight() + beta.weight()) + " but |w| = " +
                                std::to_string(w.size()));
  guard_length(w.size());
  std::vector<Word> lefts, rights;
  for (const auto& t : enumerate_qrts(alpha, n)) lefts.push_back(qr_column_reading(t));
  for (const auto& t : enumerate_qrts(beta, n)) rights.push_back(qr_column_reading(t));
  const auto target = weight(w);
  BigInt count = 0;
  for (const auto& u : lefts)
    for (const auto& v : rights) {
      const auto uv = u + v;
      if (weight(uv) == target && hypo_congruent(w, uv)) ++count;
    }
  return count;
}

std::optional<Word> o_conjugacy_witness(const Word& u, const Word& v, Symbol n) {
  check_alphabet(u, n);
  check_alphabet(v, n);
  if (weight(u) != weight(v)) return std::nullopt;
  std::vector<Symbol> letters(n);
  std::iota(letters.rbegin(), letters.rend(), Symbol{1});
  Word g(std::move(letters));
  if (!hypo_congruent(u + g, g + v) || !hypo_congruent(g + u, v + g)) return std::nullopt;
  return g;
}

bool check_identity_xyxy(const Word& x, const Word& y, Symbol n) {
  check_alphabet(x, n);
  check_alphabet(y, n);
  return hypo_congruent(x + y + x + y, y + x + y + x);
}

}  // namespace hypo
