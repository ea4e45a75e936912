#include "hypo/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hypo/crystal.hpp"
#include "hypo/enumeration.hpp"
#include "hypo/operators.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "hypo/young.hpp"

namespace hypo::verify {

using namespace std::chrono_literals;

namespace {

std::vector<Word> words_up_to(Symbol n, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (auto& w : all_words(n, len)) out.push_back(std::move(w));
  return out;
}

std::vector<Composition> compositions_up_to(std::size_t m) {
  std::vector<Composition> out;
  for (std::size_t k = 0; k <= m; ++k)
    for (auto& c : compositions_of(k)) out.push_back(std::move(c));
  return out;
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string class_sizes() {
  if (hypo_class_size({2, 1, 1, 2}, 4) != 19) return "class size of (2,1,1,2) is not 19";
  if (hypo_class_size({1, 2, 2, 1}, 4) != 61) return "class size of (1,2,2,1) is not 61";
  const std::set<Word> expected{
      Word::parse("143214"), Word::parse("413214"), Word::parse("431214"), Word::parse("432114"),
      Word::parse("143241"), Word::parse("413241"), Word::parse("431241"), Word::parse("432141"),
      Word::parse("143421"), Word::parse("413421"), Word::parse("431421"), Word::parse("432411"),
      Word::parse("144321"), Word::parse("414321"), Word::parse("434121"), Word::parse("434211"),
      Word::parse("441321"), Word::parse("443121"), Word::parse("443211")};
  const auto members = hypo_class_members(Word::parse("143214"));
  if (std::set<Word>(members.begin(), members.end()) != expected || members.size() != 19)
    return describe("class of 143214 has ", members.size(), " members, not the expected 19");
  if (hypo_class_size_brute({2, 1, 1, 2}, 4) != 19) return "brute-force class size of (2,1,1,2) is not 19";
  return {};
}

std::string formula_vs_oracle() {
  for (const auto& alpha : compositions_up_to(6))
    for (Symbol n : {3u, 4u, 5u}) {
      const auto formula = hypo_class_size(alpha, n), brute = hypo_class_size_brute(alpha, n);
      if (formula != brute)
        return describe("alpha=(", alpha, ") n=", n, ": formula ", formula, " vs brute ", brute);
    }
  return {};
}

std::string qrt_counts() {
  for (const auto& alpha : compositions_up_to(6))
    for (Symbol n = 1; n <= 5; ++n) {
      const auto formula = count_qrt(alpha, n);
      const auto brute = BigInt(enumerate_qrts(alpha, n).size());
      if (formula != brute) return describe("alpha=(", alpha, ") n=", n, ": ", formula, " vs ", brute);
      if (alpha.length() > n) continue;
      const auto vertices = explore_component(highest_weight_qrw(alpha), n, GraphKind::quasi).vertices.size();
      if (formula != vertices)
        return describe("alpha=(", alpha, ") n=", n, ": component has ", vertices, " vertices, formula ", formula);
    }
  return {};
}

std::string novelli() {
  for (const auto& alpha : compositions_up_to(6))
    if (!novelli_recursion_check(alpha, 4)) return describe("recursion fails at alpha=(", alpha, ")");
  return {};
}

template <typename Pred>
std::string all_pairs_by_weight(Symbol n, std::size_t max_len, Pred pred) {
  std::map<WeakComposition, std::vector<Word>> classes;
  for (auto& w : words_up_to(n, max_len)) classes[weight(w)].push_back(std::move(w));
  for (const auto& [wt, ws] : classes)
    for (const auto& u : ws)
      for (const auto& v : ws)
        if (auto msg = pred(u, v); !msg.empty()) return msg;
  return {};
}

std::string central_theorem() {
  return all_pairs_by_weight(3, 5, [](const Word& u, const Word& v) -> std::string {
    if (sim_related(u, v, 3) != hypo_congruent(u, v)) return describe("u=", u, " v=", v);
    return {};
  });
}

std::string recording_ribbons() {
  std::map<Word, Word> root_of;
  for (const auto& w : words_up_to(3, 5)) {
    if (root_of.contains(w)) continue;
    const auto c = explore_component(w, 3, GraphKind::quasi);
    for (const auto& v : c.vertices) root_of.emplace(v, c.root);
  }
  for (const auto& [u, ru] : root_of)
    for (const auto& [v, rv] : root_of) {
      if (u.size() != v.size()) continue;
      if (same_recording_ribbon(u, v, 3) != (ru == rv)) return describe("u=", u, " v=", v);
    }
  return {};
}

std::string roundtrips() {
  for (const auto& w : words_up_to(4, 5)) {
    const auto [t, r] = hypo_rsk(w);
    if (hypo_rsk_inverse(t, r) != w) return describe("hypo_rsk roundtrip fails on ", w);
  }
  std::map<std::pair<YoungTableau, StandardYoungTableau>, Word> seen;
  for (const auto& w : words_up_to(3, 6)) {
    auto [p, q] = rsk(w);
    auto [it, fresh] = seen.emplace(std::pair{std::move(p), std::move(q)}, w);
    if (!fresh) return describe("rsk(", w, ") = rsk(", it->second, ")");
  }
  return {};
}

std::string golden_values() {
  auto w = [](const char* s) { return Word::parse(s); };
  if (standardize(w("243245565")) != w("143256798")) return "std(243245565)";
  if (descent_composition(w("143256798")) != Composition{2, 1, 5, 1}) return "descomp(143256798)";
  if (weight(w("542164325224")) != WeakComposition{1, 4, 1, 3, 2, 1}) return "wt(542164325224)";
  const auto pair = hypo_rsk(w("4323"));
  if (pair.t.rows() != Rows{{2}, {3, 3}, {4}} || pair.r.rows() != Rows{{3}, {2, 4}, {1}}) return "QRT/R of 4323";
  const auto t = QuasiRibbonTableau::from_rows({{1, 2, 2}, {3}, {4, 4, 5, 5, 5}, {6, 7}});
  const auto r = RecordingRibbon::from_rows({{1, 2, 9}, {8}, {3, 4, 6, 7, 11}, {5, 10}});
  if (hypo_rsk_inverse(t, r) != w("12446553275")) return "inverse of the (3,1,5,2) pair";
  const auto q = hypo_rsk(w("1325436768")).t;
  if (slide_up_slide_left(q).rows() != Rows{{1, 2, 3, 6, 6, 8}, {3, 4, 7}, {5}}) return "slide of QRT(1325436768)";
  if (slide_up_slide_left_standard(q.shape()).rows() != Rows{{1, 2, 4, 7, 8, 10}, {3, 5, 9}, {6}})
    return "slide of the standard ribbon of shape (2,2,1,3,2)";
  if (highest_weight_qrw({3, 1, 5, 2}) != w("11321333434")) return "highest_weight_qrw((3,1,5,2))";
  if (quasi_f(w("3113"), 1) != w("3123")) return "f_1(3113)";
  if (!sim_related(w("1324"), w("3142"), 4)) return "1324 ~ 3142";
  if (!plactic_congruent(w("2213"), w("2231"))) return "2213 = 2231 in plac";
  return {};
}

std::string operator_laws_on(const Word& w, Symbol n) {
  auto higher = [](const Word& up, const Word& down) {
    return weight(up) != weight(down) && weight_leq(weight(down), weight(up));
  };
  for (Symbol i = 1; i < n; ++i) {
    for (auto kind : {GraphKind::crystal, GraphKind::quasi}) {
      if (auto up = raise(w, i, kind); up && (lower(*up, i, kind) != w || !higher(*up, w)))
        return describe("raise_", i, "(", w, ")");
      if (auto down = lower(w, i, kind); down && (raise(*down, i, kind) != w || !higher(w, *down)))
        return describe("lower_", i, "(", w, ")");
    }
    const auto qe = quasi_e(w, i), qf = quasi_f(w, i);
    if (qe && (kashiwara_e(w, i) != qe || standardize(*qe) != standardize(w)))
      return describe("quasi_e_", i, "(", w, ")");
    if (qf && (kashiwara_f(w, i) != qf || standardize(*qf) != standardize(w)))
      return describe("quasi_f_", i, "(", w, ")");
    const auto shape = qr_tabloid_of(w).shape();
    for (const auto& v : {kashiwara_e(w, i), kashiwara_f(w, i)})
      if (v && qr_tabloid_of(*v).shape() != shape) return describe("tabloid shape of ", w, " under label ", i);
  }
  return {};
}

std::string operator_laws() {
  for (const auto& w : words_up_to(3, 5))
    if (auto msg = operator_laws_on(w, 3); !msg.empty()) return msg;
  std::mt19937 rng(20161201u);
  std::uniform_int_distribution<std::size_t> length(0, 8);
  std::uniform_int_distribution<Symbol> letter(1, 5);
  for (int k = 0; k < 1000; ++k) {
    std::vector<Symbol> symbols(length(rng));
    for (auto& a : symbols) a = letter(rng);
    if (auto msg = operator_laws_on(Word(std::move(symbols)), 5); !msg.empty()) return msg;
  }
  return {};
}

std::string presentation() {
  const auto relations = hypoplactic_relations(3).pairs;
  for (const auto& [l, r] : relations)
    if (!hypo_congruent(l, r)) return describe("relation ", l, " = ", r, " is not a congruence pair");
  std::set<Word> done;
  for (const auto& w : words_up_to(3, 4)) {
    if (done.contains(w)) continue;
    const auto cls = congruence_class(w, relations);
    std::set<Word> expected;
    const auto t = hypo_rsk(w).t;
    for (const auto& v : words_of_weight(weight(w)))
      if (hypo_rsk(v).t == t) expected.insert(v);
    if (cls != expected) return describe("closure of ", w, " has ", cls.size(), " words, QRT class ", expected.size());
    done.insert(cls.begin(), cls.end());
  }
  return {};
}

std::string identity() {
  const auto words = words_up_to(3, 3);
  for (const auto& x : words)
    for (const auto& y : words)
      if (!check_identity_xyxy(x, y, 3)) return describe("x=", x, " y=", y);
  return {};
}

std::string structure() {
  const auto overlay = crystal_overlay(Word::parse("2111"), 4);
  if (overlay.quasi_roots != std::vector<Word>{Word::parse("2111"), Word::parse("2112"), Word::parse("2122")})
    return "quasi-components of the crystal component of 2111";
  for (std::size_t len = 0; len <= 4; ++len) {
    std::set<Word> seen;
    for (const auto& w : all_words(3, len)) {
      if (seen.contains(w)) continue;
      const auto c = explore_component(w, 3, GraphKind::crystal);
      seen.insert(c.vertices.begin(), c.vertices.end());
      std::set<Word> qr_roots;
      for (const auto& v : c.vertices)
        if (is_quasi_ribbon_word(v)) qr_roots.insert(highest_weight_word(v, 3, GraphKind::quasi));
      if (qr_roots.size() > 1) return describe("crystal component of ", c.root, " has ", qr_roots.size(), " quasi-ribbon components");
    }
    seen.clear();
    for (const auto& w : all_words(3, len)) {
      if (seen.contains(w)) continue;
      const auto c = explore_component(w, 3, GraphKind::quasi);
      seen.insert(c.vertices.begin(), c.vertices.end());
      if (!involution_edge_check(c, 3)) return describe("edge reversal fails in the component of ", c.root);
    }
  }
  return {};
}

}  // namespace

std::set<Word> congruence_class(const Word& w, const std::vector<std::pair<Word, Word>>& relations) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word v = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : relations)
      for (const auto& [from, to] : {std::pair{&l, &r}, std::pair{&r, &l}}) {
        const auto k = from->size();
        for (std::size_t at = 0; at + k <= v.size(); ++at) {
          if (!std::equal(from->begin(), from->end(), v.begin() + static_cast<std::ptrdiff_t>(at))) continue;
          auto u = v.factor(0, at) + *to + v.factor(at + k, v.size() - at - k);
          if (seen.insert(u).second) queue.push_back(std::move(u));
        }
      }
  }
  return seen;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "class-size worked examples", 1000ms, class_sizes},
      {2, "class-size formula vs brute force", 30000ms, formula_vs_oracle},
      {3, "quasi-ribbon tableau counts", 20000ms, qrt_counts},
      {4, "Novelli recursion", 20000ms, novelli},
      {5, "sim_related iff hypo_congruent", 20000ms, central_theorem},
      {6, "recording ribbons index components", 20000ms, recording_ribbons},
      {7, "RSK roundtrips and injectivity", 20000ms, roundtrips},
      {8, "golden values", 1000ms, golden_values},
      {9, "operator laws", 20000ms, operator_laws},
      {10, "presentation consistency", 20000ms, presentation},
      {11, "xyxy = yxyx", 10000ms, identity},
      {12, "structure checks", 20000ms, structure},
  };
  return all;
}

Outcome run(const Criterion& c) {
  Outcome o{c.id, c.name, false, {}, 0, std::chrono::duration<double>(c.budget).count()};
  const auto start = std::chrono::steady_clock::now();
  try {
    o.detail = c.check();
    o.passed = o.detail.empty();
  } catch (const std::exception& e) {
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.passed && o.seconds >= o.budget_seconds) {
    o.passed = false;
    o.detail = "over the time budget";
  }
  return o;
}

std::vector<Outcome> run(const std::vector<int>& ids) {
  std::vector<Outcome> out;
  for (const auto& c : criteria())
    if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.push_back(run(c));
  for (auto id : ids)
    if (id < 1 || id > static_cast<int>(criteria().size()))
      throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  return out;
}

std::string format(const Outcome& o) {
  std::ostringstream os;
  os << (o.passed ? "PASS" : "FAIL") << "  [" << o.id << "] " << o.name;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "  (" << o.seconds << " s / " << o.budget_seconds << " s)";
  if (!o.detail.empty()) os << "  " << o.detail;
  return os.str();
}

}  // namespace hypo::verify
