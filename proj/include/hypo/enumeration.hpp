#pragma once

// Exact counting formulas for hypoplactic classes, quasi-ribbon tableaux and
// crystal components, their brute-force counterparts, and the
// factorization, conjugacy and xyxy = yxyx checks.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypo/words.hpp"

namespace hypo {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a brute-force enumeration would exceed its size guard.
class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kBruteForceMaxLength = 10;

struct MultinomialArgs {
  std::size_t total = 0;
  std::vector<std::size_t> parts;
};

/// Throws std::invalid_argument when the parts do not sum to total.
BigInt multinomial(const MultinomialArgs& args);
BigInt binomial(std::size_t n, std::size_t k);

/// Every word of the given weight, in lexicographic order.
std::vector<Word> words_of_weight(const WeakComposition& content);
/// Every word of the given length over 1..n, in lexicographic order.
std::vector<Word> all_words(Symbol n, std::size_t length);

BigInt hypo_class_size(const Composition& shape, Symbol n);
BigInt hypo_class_size_brute(const Composition& shape, Symbol n);
/// Number of words of weight `content` whose quasi-ribbon tableau has the
/// given shape (0 when no such tableau exists).
BigInt class_size_with_content(const Composition& shape, const WeakComposition& content);
/// The hypoplactic class of w, sorted.
std::vector<Word> hypo_class_members(const Word& w);

bool novelli_recursion_check(const Composition& shape, Symbol n);

BigInt count_qrt(const Composition& shape, Symbol n);
BigInt count_qrt_brute(const Composition& shape, Symbol n);

BigInt count_iso_plac_components_with_qrw(const Partition& shape, Symbol n);
/// Distinct Q(w) over quasi-ribbon words w over 1..n with P(w) of the given
/// shape. Throws EnumerationTooLarge past n^|shape| = 10^7 words.
BigInt count_iso_plac_components_with_qrw_brute(const Partition& shape, Symbol n);

/// Pairs (u, v) of quasi-ribbon words over 1..n with tableau shapes alpha and
/// beta and u v hypo-congruent to w.
BigInt factorization_count(const Word& w, const Composition& alpha, const Composition& beta, Symbol n);

/// n (n-1) ... 1, the word g witnessing u g = g v and g u = v g.
std::optional<Word> o_conjugacy_witness(const Word& u, const Word& v, Symbol n);

bool check_identity_xyxy(const Word& x, const Word& y, Symbol n);

}  // namespace hypo
