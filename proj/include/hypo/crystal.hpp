#pragma once

// Connected components of crystal and quasi-crystal graphs over A_n,
// canonical signatures for deciding isomorphism, and structural checks
// relating the two graph kinds.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hypo/words.hpp"

namespace hypo {

enum class GraphKind { crystal, quasi };

std::string_view to_string(GraphKind kind);
/// Accepts "crystal", "plac", "quasi", "quasi-crystal", "hypo".
GraphKind parse_graph_kind(std::string_view text);

std::optional<Word> raise(const Word& w, Symbol i, GraphKind kind);
std::optional<Word> lower(const Word& w, Symbol i, GraphKind kind);

/// from --label--> to means lower(from, label) == to. `quasi` records
/// whether the quasi-Kashiwara operator performs the same action.
struct Edge {
  Word from;
  Symbol label = 0;
  Word to;
  bool quasi = false;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Component {
  GraphKind kind = GraphKind::quasi;
  Symbol n = 1;
  Word root;
  std::vector<Word> vertices;  // sorted
  std::vector<Edge> edges;     // sorted
  friend bool operator==(const Component&, const Component&) = default;
  bool contains(const Word& w) const;
};

/// Throws std::invalid_argument if n == 0 or w has a symbol above n.
Component explore_component(const Word& w, Symbol n, GraphKind kind);
Word highest_weight_word(const Word& w, Symbol n, GraphKind kind);
bool is_highest_weight_hypo(const Word& w);

/// BFS from the root, labels in increasing order, at each vertex the
/// lowering neighbour before the raising one. `out[k][i - 1]` is the visit
/// index of the i-lowering of vertex k, or -1.
struct ComponentSignature {
  Symbol n = 1;
  std::vector<WeakComposition> weights;
  std::vector<std::vector<long>> out;
  friend bool operator==(const ComponentSignature&, const ComponentSignature&) = default;
};

struct CanonicalForm {
  ComponentSignature signature;
  std::unordered_map<Word, std::size_t> index;
};

CanonicalForm canonical_form(const Component& c);
ComponentSignature component_signature(const Component& c);

bool sim_related(const Word& u, const Word& v, Symbol n);
bool same_recording_ribbon(const Word& u, const Word& v, Symbol n);

struct CrystalOverlay {
  Component crystal;
  std::vector<Edge> quasi_edges;
  std::vector<Edge> crystal_only_edges;
  /// Highest-weight words of the quasi-crystal components inside, sorted.
  std::vector<Word> quasi_roots;
};

CrystalOverlay crystal_overlay(const Word& w, Symbol n);

/// Decided through Q(w) and the standard ribbon fillings.
bool plac_component_contains_qrw(const Word& w, Symbol n);

/// Throws std::invalid_argument unless p is standard.
std::optional<Composition> is_interval_reversing(const Word& p);

/// Every edge u --i--> v of c has its mirror v# --(n-i)--> u#.
bool involution_edge_check(const Component& c, Symbol n);

}  // namespace hypo
