#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>
#include <set>

#include "hypo/crystal.hpp"
#include "hypo/enumeration.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "hypo/young.hpp"
#include "oracles.hpp"

using namespace hypo;
using namespace hypo::literals;

namespace {

std::vector<Composition> compositions_up_to(std::size_t m) {
  std::vector<Composition> out;
  for (std::size_t k = 0; k <= m; ++k)
    for (auto& c : compositions_of(k)) out.push_back(std::move(c));
  return out;
}

std::size_t oracle_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k));
}

}  // namespace

TEST_CASE("multinomial") {
  CHECK(multinomial({6, {2, 1, 1, 2}}) == 180);
  CHECK(multinomial({5, {5}}) == 1);
  CHECK(multinomial({0, {}}) == 1);
  CHECK(multinomial({3, {0, 3}}) == 1);
  CHECK_THROWS_AS(multinomial({4, {1, 2}}), std::invalid_argument);
  CHECK(multinomial({30, {10, 10, 10}}) == BigInt("5550996791340"));
  for (const auto& alpha : compositions_up_to(7)) {
    const std::vector<std::size_t> parts(alpha.parts().begin(), alpha.parts().end());
    REQUIRE(multinomial({alpha.weight(), parts}) == oracle::multinomial(parts));
  }
}

TEST_CASE("word enumeration") {
  const auto ws = words_of_weight({2, 1});
  CHECK(ws == std::vector<Word>{"112"_w, "121"_w, "211"_w});
  CHECK(words_of_weight({}) == std::vector<Word>{Word{}});
  CHECK(words_of_weight({0, 2}) == std::vector<Word>{"22"_w});
  CHECK(all_words(2, 2) == std::vector<Word>{"11"_w, "12"_w, "21"_w, "22"_w});
  CHECK(all_words(3, 0) == std::vector<Word>{Word{}});
  CHECK(all_words(3, 4) == oracle::words_of_length(3, 4));
}

TEST_CASE("class size worked examples") {
  CHECK(hypo_class_size({2, 1, 1, 2}, 4) == 19);
  CHECK(hypo_class_size({2, 1, 1, 2}, 9) == 19);
  CHECK(hypo_class_size({1, 2, 2, 1}, 4) == 61);
  CHECK(hypo_class_size({7}, 1) == 1);
  CHECK(hypo_class_size({1, 1}, 1) == 0);
  CHECK(hypo_class_size_brute({2, 1, 1, 2}, 4) == 19);
  CHECK(hypo_class_size_brute({1}, 1) == 1);
  CHECK(hypo_class_size_brute({2, 2}, 4) == hypo_class_size({2, 2}, 4));
  const std::vector<Word> expected = {
      "143214"_w, "413214"_w, "431214"_w, "432114"_w, "143241"_w, "413241"_w, "431241"_w,
      "432141"_w, "143421"_w, "413421"_w, "431421"_w, "432411"_w, "144321"_w, "414321"_w,
      "434121"_w, "434211"_w, "441321"_w, "443121"_w, "443211"_w};
  const auto members = hypo_class_members("143214"_w);
  CHECK(std::set<Word>(members.begin(), members.end()) == std::set<Word>(expected.begin(), expected.end()));
  CHECK(members.size() == 19);
  CHECK(highest_weight_qrw({2, 1, 1, 2}) == "143214"_w);
}

TEST_CASE("brute-force guards") {
  CHECK_THROWS_AS(hypo_class_size_brute(Composition{11}, 1), EnumerationTooLarge);
  CHECK_THROWS_AS(hypo_class_members(Word(std::vector<Symbol>(11, 1))), EnumerationTooLarge);
  CHECK_THROWS_AS(novelli_recursion_check(Composition{6, 5}, 2), EnumerationTooLarge);
  CHECK_THROWS_AS(count_iso_plac_components_with_qrw_brute(Partition{8, 8}, 9), EnumerationTooLarge);
}

TEST_CASE("class size formula matches the brute force") {
  for (const auto& alpha : compositions_up_to(6))
    for (Symbol n : {3u, 4u, 5u}) REQUIRE(hypo_class_size(alpha, n) == hypo_class_size_brute(alpha, n));
}

TEST_CASE("classes of one shape have one size") {
  for (std::size_t len = 0; len <= 5; ++len) {
    std::map<QuasiRibbonTableau, std::size_t> sizes;
    for (const auto& w : oracle::words_of_length(4, len)) ++sizes[hypo_rsk(w).t];
    std::map<Composition, std::size_t> by_shape;
    for (const auto& [t, size] : sizes) {
      auto [it, fresh] = by_shape.emplace(t.shape(), size);
      REQUIRE(it->second == size);
      REQUIRE(hypo_class_size(t.shape(), 4) == size);
    }
  }
}

TEST_CASE("novelli recursion") {
  CHECK(novelli_recursion_check({2, 1, 1, 2}, 4));
  CHECK(novelli_recursion_check({5}, 1));
  CHECK(novelli_recursion_check({1, 1}, 2));
  CHECK(class_size_with_content({1, 1}, {1, 1}) == 1);
  CHECK(class_size_with_content({2}, {1, 1}) == 1);
  CHECK(class_size_with_content({1, 1}, {2}) == 0);
  BigInt sum = 0;
  for (const auto& beta : coarsenings({2, 1, 1, 2})) sum += class_size_with_content(beta, {2, 1, 1, 2});
  CHECK(sum == 180);
  for (const auto& alpha : compositions_up_to(6)) REQUIRE(novelli_recursion_check(alpha, 4));
}

TEST_CASE("count_qrt") {
  CHECK(count_qrt({2, 2}, 4) == 15);
  CHECK(count_qrt({1, 1, 1}, 2) == 0);
  CHECK(count_qrt({5}, 1) == 1);
  for (const auto& alpha : compositions_up_to(6))
    for (Symbol n = 1; n <= 5; ++n) {
      const auto expected = alpha.length() > n ? 0 : oracle_binomial(n + alpha.weight() - alpha.length(), n - alpha.length());
      REQUIRE(count_qrt(alpha, n) == expected);
      REQUIRE(count_qrt_brute(alpha, n) == expected);
      if (alpha.length() <= n)
        REQUIRE(explore_component(highest_weight_qrw(alpha), n, GraphKind::quasi).vertices.size() == expected);
    }
}

TEST_CASE("count_iso_plac_components_with_qrw") {
  CHECK(count_iso_plac_components_with_qrw({4}, 1) == 1);
  CHECK(count_iso_plac_components_with_qrw({2, 2}, 4) == 1);
  CHECK(count_iso_plac_components_with_qrw({2, 1, 1}, 2) == 0);
  CHECK(count_iso_plac_components_with_qrw({3, 1}, 2) == 3);
  CHECK(count_iso_plac_components_with_qrw({}, 1) == 1);
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& alpha : compositions_of(m)) {
      std::vector<std::size_t> parts(alpha.parts().begin(), alpha.parts().end());
      if (!std::is_sorted(parts.rbegin(), parts.rend())) continue;
      const Partition lambda(parts);
      for (Symbol n = 1; n <= 4; ++n) REQUIRE(count_iso_plac_components_with_qrw(lambda, n) == count_iso_plac_components_with_qrw_brute(lambda, n));
    }
}

TEST_CASE("crystal components contain at least the predicted number of quasi-crystal components") {
  for (std::size_t len = 0; len <= 4; ++len)
    for (const auto& w : oracle::words_of_length(3, len)) {
      const auto lambda = rsk(w).p.shape();
      if (lambda.weight() > 0 && lambda.weight() - lambda.part(1) + 1 > 3) continue;
      REQUIRE(BigInt(crystal_overlay(w, 3).quasi_roots.size()) >= count_iso_plac_components_with_qrw(lambda, 3));
    }
}

TEST_CASE("factorization_count") {
  CHECK(factorization_count("11"_w, {1}, {1}, 2) == 1);
  CHECK(factorization_count("12"_w, {1, 1}, {}, 2) == 0);
  CHECK(factorization_count("12"_w, {2}, {}, 2) == 1);
  CHECK(factorization_count("21"_w, {1, 1}, {}, 2) == 1);
  CHECK_THROWS_AS(factorization_count("433"_w, {1}, {2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(factorization_count("11"_w, {1}, {2}, 2), std::invalid_argument);
  // Depends only on the shape of w.
  for (std::size_t len = 1; len <= 5; ++len) {
    std::map<std::tuple<Composition, Composition, Composition>, BigInt> seen;
    for (const auto& w : oracle::words_of_length(3, len)) {
      if (!is_quasi_ribbon_word(w)) continue;
      for (std::size_t k = 0; k <= len; ++k)
        for (const auto& a : compositions_of(k))
          for (const auto& b : compositions_of(len - k)) {
            const auto count = factorization_count(w, a, b, 3);
            auto [it, fresh] = seen.emplace(std::tuple{predicted_shape(w), a, b}, count);
            REQUIRE(it->second == count);
          }
    }
  }
}

TEST_CASE("o-conjugacy witness") {
  CHECK(o_conjugacy_witness("12"_w, "21"_w, 2) == "21"_w);
  CHECK(o_conjugacy_witness("1323"_w, "1323"_w, 3) == "321"_w);
  CHECK_FALSE(o_conjugacy_witness("12"_w, "22"_w, 2).has_value());
  for (const auto& u : oracle::words_up_to(3, 4))
    for (const auto& v : oracle::words_of_length(3, u.size()))
      REQUIRE(o_conjugacy_witness(u, v, 3).has_value() == (weight(u) == weight(v)));
}

TEST_CASE("xyxy = yxyx") {
  CHECK(check_identity_xyxy("1"_w, "2"_w, 2));
  CHECK(check_identity_xyxy(Word{}, "312"_w, 3));
  CHECK_THROWS_AS(check_identity_xyxy("4"_w, "1"_w, 3), std::invalid_argument);
  const auto words = oracle::words_up_to(3, 3);
  for (const auto& x : words)
    for (const auto& y : words) REQUIRE(check_identity_xyxy(x, y, 3));
  // The identity is specific to the hypoplactic monoid.
  CHECK_FALSE(plactic_congruent("1212"_w, "2121"_w));
}
