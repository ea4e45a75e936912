#include "hypo/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hypo/operators.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "hypo/young.hpp"

namespace hypo {

std::string_view to_string(GraphKind kind) {
  return kind == GraphKind::crystal ? "crystal" : "quasi";
}

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "crystal" || text == "plac") return GraphKind::crystal;
  if (text == "quasi" || text == "quasi-crystal" || text == "hypo") return GraphKind::quasi;
  throw std::invalid_argument("unknown graph kind '" + std::string(text) + "'");
}

std::optional<Word> raise(const Word& w, Symbol i, GraphKind kind) {
  return kind == GraphKind::crystal ? kashiwara_e(w, i) : quasi_e(w, i);
}

std::optional<Word> lower(const Word& w, Symbol i, GraphKind kind) {
  return kind == GraphKind::crystal ? kashiwara_f(w, i) : quasi_f(w, i);
}

bool Component::contains(const Word& w) const {
  return std::binary_search(vertices.begin(), vertices.end(), w);
}

namespace {

void check_alphabet(const Word& w, Symbol n) {
  if (n == 0) throw std::invalid_argument("alphabet bound n must be at least 1");
  if (w.max_symbol() > n)
    throw std::invalid_argument("word " + w.to_string() + " has a symbol above n = " +
                                std::to_string(n));
}

}  // namespace

Word highest_weight_word(const Word& w, Symbol n, GraphKind kind) {
  check_alphabet(w, n);
  Word current = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (Symbol i = 1; i < n && !moved; ++i)
      if (auto up = raise(current, i, kind)) {
        current = std::move(*up);
        moved = true;
      }
  }
  return current;
}

Component explore_component(const Word& w, Symbol n, GraphKind kind) {
  check_alphabet(w, n);
  Component c;
  c.kind = kind;
  c.n = n;
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    for (Symbol i = 1; i < n; ++i) {
      if (auto down = lower(v, i, kind)) {
        const bool agrees = kind == GraphKind::quasi || quasi_f(v, i) == down;
        c.edges.push_back({v, i, *down, agrees});
        if (seen.insert(*down).second) queue.push_back(*down);
      }
      if (auto up = raise(v, i, kind))
        if (seen.insert(*up).second) queue.push_back(std::move(*up));
    }
    c.vertices.push_back(std::move(v));
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  std::sort(c.edges.begin(), c.edges.end());
  c.root = highest_weight_word(w, n, kind);
  return c;
}

bool is_highest_weight_hypo(const Word& w) {
  const auto top = w.max_symbol();
  for (Symbol a = 1; a <= top; ++a)
    if (w.count(a) == 0) return false;
  for (Symbol i = 1; i < top; ++i)
    if (!has_inversion(w, i)) return false;
  return true;
}

CanonicalForm canonical_form(const Component& c) {
  const auto labels = c.n > 0 ? c.n - 1 : 0;
  std::unordered_map<Word, std::vector<const Word*>> down, up;
  for (const auto& v : c.vertices) {
    down[v].assign(labels, nullptr);
    up[v].assign(labels, nullptr);
  }
  for (const auto& e : c.edges) {
    down.at(e.from).at(e.label - 1) = &e.to;
    up.at(e.to).at(e.label - 1) = &e.from;
  }

  CanonicalForm form;
  form.signature.n = c.n;
  std::vector<const Word*> order{&c.root};
  form.index.emplace(c.root, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Word& v = *order[k];
    for (Symbol i = 0; i < labels; ++i)
      for (const Word* next : {down.at(v)[i], up.at(v)[i]})
        if (next && form.index.emplace(*next, order.size()).second) order.push_back(next);
  }
  if (order.size() != c.vertices.size())
    throw std::invalid_argument("component is not connected to its root");

  for (const Word* v : order) {
    form.signature.weights.push_back(weight(*v));
    std::vector<long> targets(labels, -1);
    for (Symbol i = 0; i < labels; ++i)
      if (const Word* t = down.at(*v)[i]) targets[i] = static_cast<long>(form.index.at(*t));
    form.signature.out.push_back(std::move(targets));
  }
  return form;
}

ComponentSignature component_signature(const Component& c) { return canonical_form(c).signature; }

bool sim_related(const Word& u, const Word& v, Symbol n) {
  const auto cu = canonical_form(explore_component(u, n, GraphKind::quasi));
  const auto cv = canonical_form(explore_component(v, n, GraphKind::quasi));
  return cu.signature == cv.signature && cu.index.at(u) == cv.index.at(v);
}

bool same_recording_ribbon(const Word& u, const Word& v, Symbol n) {
  check_alphabet(u, n);
  check_alphabet(v, n);
  return hypo_rsk(u).r == hypo_rsk(v).r;
}

CrystalOverlay crystal_overlay(const Word& w, Symbol n) {
  CrystalOverlay out;
  out.crystal = explore_component(w, n, GraphKind::crystal);
  for (const auto& e : out.crystal.edges) (e.quasi ? out.quasi_edges : out.crystal_only_edges).push_back(e);
  std::set<Word> roots;
  for (const auto& v : out.crystal.vertices) roots.insert(highest_weight_word(v, n, GraphKind::quasi));
  out.quasi_roots.assign(roots.begin(), roots.end());
  return out;
}

bool plac_component_contains_qrw(const Word& w, Symbol n) {
  check_alphabet(w, n);
  const auto q = rsk(w).q;
  // A ribbon with k rows and c columns has |w| - c + 1 = k rows.
  const auto columns = q.rows().empty() ? 0 : q.rows().front().size();
  const auto rows = w.size() - columns + (w.empty() ? 0 : 1);
  if (rows > n) return false;
  for (const auto& alpha : compositions_of(w.size()))
    if (alpha.length() == rows && slide_up_slide_left_standard(alpha) == q) return true;
  return false;
}

std::optional<Composition> is_interval_reversing(const Word& p) {
  if (!is_standard(p)) throw std::invalid_argument("is_interval_reversing: " + p.to_string() + " is not standard");
  std::vector<std::size_t> parts;
  std::size_t s = 1;
  while (s <= p.size()) {
    const std::size_t b = p[s - 1];
    if (b < s) return std::nullopt;
    for (std::size_t h = s; h <= b; ++h)
      if (p[h - 1] != s + b - h) return std::nullopt;
    parts.push_back(b - s + 1);
    s = b + 1;
  }
  return Composition(std::move(parts));
}

bool involution_edge_check(const Component& c, Symbol n) {
  for (const auto& e : c.edges) {
    if (e.label >= n) return false;
    const auto image = lower(schuetzenberger_involution(e.to, n), n - e.label, c.kind);
    if (image != schuetzenberger_involution(e.from, n)) return false;
  }
  return true;
}

}  // namespace hypo
