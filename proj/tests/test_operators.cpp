#include <doctest.h>

#include <algorithm>
#include <string>

#include "hypo/operators.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "oracles.hpp"

using namespace hypo;
using namespace hypo::literals;

namespace {

// Reduction by literally deleting "-+" factors from a +/- string.
std::pair<std::size_t, std::size_t> oracle_reduce(const Word& w, Symbol i) {
  std::string s;
  for (auto a : w) {
    if (a == i) s += '+';
    else if (a == i + 1) s += '-';
  }
  for (auto at = s.find("-+"); at != std::string::npos; at = s.find("-+")) s.erase(at, 2);
  const auto phi = static_cast<std::size_t>(std::count(s.begin(), s.end(), '+'));
  return {phi, s.size() - phi};
}

template <typename Op>
std::size_t iterations(Word w, Symbol i, Op op) {
  std::size_t k = 0;
  while (auto next = op(w, i)) {
    w = *next;
    ++k;
  }
  return k;
}

OperatorCounts iterated_counts(const Word& w, Symbol i) {
  return {iterations(w, i, kashiwara_e), iterations(w, i, kashiwara_f)};
}

bool strictly_higher(const Word& up, const Word& w) {
  return weight(up) != weight(w) && weight_leq(weight(w), weight(up));
}

void check_laws(const Word& w, Symbol n) {
  for (Symbol i = 1; i < n; ++i) {
    for (auto [e, f] : {std::pair{&kashiwara_e, &kashiwara_f}, std::pair{&quasi_e, &quasi_f}}) {
      if (auto up = e(w, i)) {
        REQUIRE(f(*up, i) == w);
        REQUIRE(strictly_higher(*up, w));
      }
      if (auto down = f(w, i)) {
        REQUIRE(e(*down, i) == w);
        REQUIRE(strictly_higher(w, *down));
      }
    }
    if (auto up = quasi_e(w, i)) {
      REQUIRE(kashiwara_e(w, i) == up);
      REQUIRE(standardize(*up) == standardize(w));
    }
    if (auto down = quasi_f(w, i)) {
      REQUIRE(kashiwara_f(w, i) == down);
      REQUIRE(standardize(*down) == standardize(w));
    }
    if (auto down = kashiwara_f(w, i)) REQUIRE(qr_tabloid_of(*down).shape() == qr_tabloid_of(w).shape());
    if (auto up = kashiwara_e(w, i)) REQUIRE(qr_tabloid_of(*up).shape() == qr_tabloid_of(w).shape());
  }
}

}  // namespace

TEST_CASE("bracket_reduce") {
  auto r = bracket_reduce("11"_w, 1);
  CHECK(r.phi() == 2);
  CHECK(r.epsilon() == 0);
  r = bracket_reduce("21"_w, 1);
  CHECK(r.phi() == 0);
  CHECK(r.epsilon() == 0);
  r = bracket_reduce("12"_w, 1);
  CHECK(r.phi() == 1);
  CHECK(r.epsilon() == 1);
  r = bracket_reduce("1322132"_w, 2);
  CHECK(r.plus_positions == std::vector<std::size_t>{4});
  CHECK(r.minus_positions.empty());
  CHECK_THROWS_AS(bracket_reduce("1"_w, 0), std::invalid_argument);
  for (const auto& w : oracle::words_up_to(3, 6))
    for (Symbol i = 1; i <= 2; ++i) {
      const auto red = bracket_reduce(w, i);
      const auto [phi, eps] = oracle_reduce(w, i);
      REQUIRE(red.phi() == phi);
      REQUIRE(red.epsilon() == eps);
      if (!red.plus_positions.empty() && !red.minus_positions.empty())
        REQUIRE(red.plus_positions.back() < red.minus_positions.front());
      for (auto p : red.plus_positions) REQUIRE(w[p - 1] == i);
      for (auto p : red.minus_positions) REQUIRE(w[p - 1] == i + 1);
    }
}

TEST_CASE("kashiwara operators") {
  CHECK(kashiwara_e("3"_w, 2) == "2"_w);
  CHECK_FALSE(kashiwara_e("1"_w, 2).has_value());
  CHECK_FALSE(kashiwara_e("3"_w, 1).has_value());
  CHECK_FALSE(kashiwara_e("21"_w, 1).has_value());
  CHECK(kashiwara_f("2"_w, 2) == "3"_w);
  CHECK(kashiwara_f("11"_w, 1) == "12"_w);
  CHECK_FALSE(kashiwara_f("2"_w, 1).has_value());
  CHECK(kashiwara_counts("12"_w, 1) == OperatorCounts{1, 1});
  CHECK(kashiwara_counts(Word{}, 3) == OperatorCounts{0, 0});
  CHECK(kashiwara_counts("2121"_w, 1) == OperatorCounts{0, 0});
}

TEST_CASE("kashiwara counts equal the maximal iteration counts") {
  for (const auto& w : oracle::words_up_to(3, 5))
    for (Symbol i = 1; i <= 2; ++i) REQUIRE(kashiwara_counts(w, i) == iterated_counts(w, i));
}

TEST_CASE("quasi-kashiwara operators") {
  CHECK_FALSE(quasi_e("3123"_w, 2).has_value());
  CHECK(quasi_e("2"_w, 1) == "1"_w);
  CHECK(quasi_e("3131"_w, 2) == "2131"_w);
  CHECK_FALSE(quasi_f("3131"_w, 2).has_value());
  CHECK(quasi_f("3113"_w, 1) == "3123"_w);
  CHECK(quasi_f("1"_w, 1) == "2"_w);
  CHECK(quasi_counts("3123"_w, 2) == OperatorCounts{0, 0});
  CHECK(quasi_counts("1122"_w, 1) == OperatorCounts{2, 2});
  CHECK(quasi_counts(Word{}, 1) == OperatorCounts{0, 0});
  CHECK_THROWS_AS(quasi_f("1"_w, 0), std::invalid_argument);
  for (const auto& w : oracle::words_up_to(3, 5))
    for (Symbol i = 1; i <= 2; ++i) {
      REQUIRE(quasi_counts(w, i) == OperatorCounts{iterations(w, i, quasi_e), iterations(w, i, quasi_f)});
    }
}

TEST_CASE("operator laws over A_4 up to length 5") {
  for (const auto& w : oracle::words_up_to(4, 5)) check_laws(w, 4);
}

TEST_CASE("quasi operators preserve quasi-ribbon words and their shape") {
  for (const auto& w : oracle::words_up_to(4, 5)) {
    if (!is_quasi_ribbon_word(w)) continue;
    for (Symbol i = 1; i < 4; ++i)
      for (const auto& v : {quasi_e(w, i), quasi_f(w, i)})
        if (v) {
          REQUIRE(is_quasi_ribbon_word(*v));
          REQUIRE(predicted_shape(*v) == predicted_shape(w));
        }
  }
}
