#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hypo/words.hpp"
#include "oracles.hpp"

using namespace hypo;
using namespace hypo::literals;

TEST_CASE("word text format") {
  CHECK("4323"_w == Word{4, 3, 2, 3});
  CHECK(Word::parse("10,2,11") == Word{10, 2, 11});
  CHECK(Word::parse("10,") == Word{10});
  CHECK(Word::parse("").empty());
  CHECK(Word{10, 2, 11}.to_string() == "10,2,11");
  CHECK(Word{10}.to_string() == "10,");
  CHECK(Word::parse(Word{10}.to_string()) == Word{10});
  CHECK("4323"_w.to_string() == "4323");
  CHECK_THROWS_AS(Word::parse("40"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Word({1, 0}), std::invalid_argument);
  std::ostringstream os;
  os << Word{};
  CHECK(os.str() == "ε");
}

TEST_CASE("weight") {
  CHECK(weight("542164325224"_w) == WeakComposition{1, 4, 1, 3, 2, 1});
  CHECK(weight(Word{}) == WeakComposition{});
  CHECK(weight("111"_w) == WeakComposition{3});
  CHECK(weight("3"_w) == WeakComposition{0, 0, 1});
  CHECK(WeakComposition{3, 1, 5, 2, 0} == WeakComposition{3, 1, 5, 2});
  CHECK(WeakComposition{0, 0}.length() == 0);
}

TEST_CASE("weight_leq") {
  CHECK(weight_leq({1, 4, 1, 3, 2, 1}, {5, 3, 2, 2}));
  CHECK_FALSE(weight_leq({5, 3, 2, 2}, {1, 4, 1, 3, 2, 1}));
  CHECK(weight_leq({2, 1}, {2, 1}));
  CHECK_FALSE(weight_leq({2, 0}, {1, 1}));
  for (const auto& u : oracle::words_up_to(3, 4))
    for (const auto& v : oracle::words_up_to(3, 4)) {
      const auto a = weight(u), b = weight(v);
      bool expected = true;
      std::size_t sa = 0, sb = 0;
      for (std::size_t k = 1; k <= 3; ++k) {
        sa += a.term(k);
        sb += b.term(k);
        if (sa > sb) expected = false;
      }
      REQUIRE(weight_leq(a, b) == expected);
    }
}

TEST_CASE("standardize") {
  CHECK(standardize("243245565"_w) == "143256798"_w);
  CHECK(standardize(Word{}) == Word{});
  CHECK(standardize("3142"_w) == "3142"_w);
  for (const auto& w : oracle::words_up_to(5, 5)) {
    const auto s = standardize(w);
    REQUIRE(s == oracle::standardize(w));
    REQUIRE(is_standard(s));
    REQUIRE(standardize(s) == s);
  }
}

TEST_CASE("standardize is idempotent over A_5 up to length 6") {
  for (const auto& w : oracle::words_of_length(5, 6)) REQUIRE(standardize(standardize(w)) == standardize(w));
}

TEST_CASE("is_standard") {
  CHECK(is_standard("143256798"_w));
  CHECK(is_standard(Word{}));
  CHECK_FALSE(is_standard("11"_w));
  CHECK_FALSE(is_standard("13"_w));
}

TEST_CASE("inverse_permutation") {
  CHECK(inverse_permutation("12345"_w) == "12345"_w);
  CHECK(inverse_permutation("4213"_w) == "3241"_w);
  CHECK(inverse_permutation("21"_w) == "21"_w);
  CHECK_THROWS_AS(inverse_permutation("11"_w), std::invalid_argument);
  for (const auto& w : oracle::words_up_to(5, 5)) {
    const auto s = standardize(w);
    const auto r = inverse_permutation(s);
    for (std::size_t h = 1; h <= s.size(); ++h) REQUIRE(r[s[h - 1] - 1] == h);
    REQUIRE(inverse_permutation(r) == s);
  }
}

TEST_CASE("descent sets and compositions") {
  CHECK(descent_set("143256798"_w) == std::vector<std::size_t>{2, 3, 8});
  CHECK(descent_set("123"_w).empty());
  CHECK(descent_set("321"_w) == std::vector<std::size_t>{1, 2});
  CHECK(descent_composition("143256798"_w) == Composition{2, 1, 5, 1});
  CHECK(descent_composition("123"_w) == Composition{3});
  CHECK(descent_composition("3241"_w) == Composition{1, 2, 1});
  CHECK(descent_composition(Word{}) == Composition{});
  CHECK_THROWS_AS(descent_set("22"_w), std::invalid_argument);
  for (const auto& w : oracle::words_up_to(4, 5)) {
    const auto s = standardize(w);
    const auto c = descent_composition(s);
    REQUIRE(c.weight() == s.size());
    REQUIRE(c.descent_set() == descent_set(s));
  }
}

TEST_CASE("composition basics") {
  const Composition a{3, 1, 5, 2};
  CHECK(a.length() == 4);
  CHECK(a.weight() == 11);
  CHECK(a.descent_set() == std::vector<std::size_t>{3, 4, 9});
  CHECK(Composition::from_descent_set(11, std::vector<std::size_t>{3, 4, 9}) == a);
  CHECK(Composition::parse("(3,1,5,2)") == a);
  CHECK(Composition::parse("3,1,5,2") == a);
  CHECK(a.to_string() == "3,1,5,2");
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("coarser") {
  CHECK(coarser({11}, {3, 8}));
  CHECK(coarser({3, 8}, {3, 6, 2}));
  CHECK(coarser({3, 6, 2}, {3, 1, 5, 2}));
  CHECK(coarser({3, 8}, {3, 1, 5, 2}));
  CHECK(coarser({2, 1}, {2, 1}));
  CHECK_FALSE(coarser({2, 2}, {3, 1}));
  CHECK_THROWS_AS(coarser({2}, {1}), std::invalid_argument);
}

TEST_CASE("coarser is a partial order on compositions of weight at most 6") {
  for (std::size_t m = 0; m <= 6; ++m) {
    const auto all = compositions_of(m);
    REQUIRE(all.size() == (m == 0 ? 1u : 1u << (m - 1)));
    for (const auto& a : all) {
      REQUIRE(coarser(a, a));
      for (const auto& b : all) {
        const auto ps_a = oracle::prefix_sums(a.parts()), ps_b = oracle::prefix_sums(b.parts());
        const bool subset = std::includes(ps_a.begin(), ps_a.end(), ps_b.begin(), ps_b.end());
        REQUIRE(coarser(b, a) == subset);
        if (coarser(a, b) && coarser(b, a)) REQUIRE(a == b);
        for (const auto& c : all)
          if (coarser(a, b) && coarser(b, c)) REQUIRE(coarser(a, c));
      }
    }
  }
}

TEST_CASE("coarsenings") {
  CHECK(coarsenings({2, 1}) == std::vector<Composition>{{2, 1}, {3}});
  CHECK(coarsenings({4}) == std::vector<Composition>{{4}});
  CHECK(coarsenings({1, 1, 1}).size() == 4);
  const Composition a{2, 1, 1, 2};
  const auto all = coarsenings(a);
  CHECK(all.size() == 8);
  CHECK(all.front() == a);
  CHECK(all.back() == Composition{6});
  for (const auto& b : all) CHECK(coarser(b, a));
  std::vector<Composition> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("max_decreasing_factorization") {
  const auto factors = max_decreasing_factorization("526431454212"_w);
  CHECK(factors == std::vector<Word>{"52"_w, "6431"_w, "4"_w, "5421"_w, "2"_w});
  CHECK(max_decreasing_factorization("123"_w) == std::vector<Word>{"1"_w, "2"_w, "3"_w});
  CHECK(max_decreasing_factorization("321"_w) == std::vector<Word>{"321"_w});
  CHECK(max_decreasing_factorization(Word{}).empty());
  for (const auto& w : oracle::words_up_to(3, 5)) {
    const auto fs = max_decreasing_factorization(w);
    Word joined;
    for (std::size_t h = 0; h < fs.size(); ++h) {
      for (std::size_t k = 1; k < fs[h].size(); ++k) REQUIRE(fs[h][k - 1] > fs[h][k]);
      if (h > 0) REQUIRE(fs[h - 1][fs[h - 1].size() - 1] <= fs[h][0]);
      joined = joined + fs[h];
    }
    REQUIRE(joined == w);
  }
}

TEST_CASE("has_inversion") {
  CHECK(has_inversion("3123"_w, 2));
  CHECK_FALSE(has_inversion(Word{}, 1));
  CHECK_FALSE(has_inversion("3131"_w, 2));
  CHECK(has_inversion("21"_w, 1));
  CHECK_FALSE(has_inversion("12"_w, 1));
}

TEST_CASE("schuetzenberger_involution") {
  CHECK(schuetzenberger_involution("123"_w, 3) == "123"_w);
  CHECK(schuetzenberger_involution(Word{}, 3) == Word{});
  CHECK(schuetzenberger_involution("1"_w, 4) == "4"_w);
  CHECK(schuetzenberger_involution("112"_w, 3) == "233"_w);
  CHECK_THROWS_AS(schuetzenberger_involution("5"_w, 4), std::invalid_argument);
  for (const auto& w : oracle::words_up_to(3, 4)) REQUIRE(schuetzenberger_involution(schuetzenberger_involution(w, 3), 3) == w);
}

TEST_CASE("weight is invariant under permuting letters") {
  for (const auto& w : oracle::words_up_to(3, 5)) {
    auto letters = std::vector<Symbol>(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    do {
      REQUIRE(weight(Word(letters)) == weight(w));
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
}

TEST_CASE("Schuetzenberger involution reverses the order of weights") {
  const Symbol n = 3;
  const auto words = oracle::words_of_length(n, 4);
  for (const auto& u : words)
    for (const auto& v : words) {
      const auto wu = weight(u), wv = weight(v);
      if (wu == wv || !weight_leq(wu, wv)) continue;
      REQUIRE(weight_leq(weight(schuetzenberger_involution(v, n)), weight(schuetzenberger_involution(u, n))));
    }
}
