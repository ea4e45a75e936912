#include "hypo/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypo::io {

namespace {

std::size_t cell_width(const Rows& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (auto a : row) width = std::max(width, std::to_string(a).size());
  return width;
}

std::string pad(Symbol a, std::size_t width) {
  auto s = std::to_string(a);
  return std::string(width - s.size(), ' ') + s;
}

// Draws rows whose first cells sit at the given column offsets.
std::string draw(const Rows& rows, const std::vector<std::size_t>& offsets) {
  if (rows.empty()) return "(empty)\n";
  const auto width = cell_width(rows);
  const auto stride = width + 3;
  auto border = [&](std::size_t from, std::size_t to) {
    std::string line(from * stride, ' ');
    for (auto c = from; c < to; ++c) line += "+" + std::string(width + 2, '-');
    return line + "+\n";
  };
  std::string out;
  std::size_t prev_from = 0, prev_to = 0;
  for (std::size_t h = 0; h < rows.size(); ++h) {
    const auto from = offsets[h], to = offsets[h] + rows[h].size();
    out += border(h == 0 ? from : std::min(from, prev_from), h == 0 ? to : std::max(to, prev_to));
    std::string line(from * stride, ' ');
    for (auto a : rows[h]) line += "| " + pad(a, width) + " ";
    out += line + "|\n";
    prev_from = from;
    prev_to = to;
  }
  return out + border(prev_from, prev_to);
}

Rows rows_from(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string("expected an object with array \"") + key + "\"");
  Rows rows;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must hold arrays");
    auto& out = rows.emplace_back();
    for (const auto& a : row) {
      if (!a.is_number_unsigned()) throw std::invalid_argument("entries must be positive integers");
      out.push_back(a.get<Symbol>());
    }
  }
  return rows;
}

Composition shape_from(const Json& j) {
  if (!j.contains("shape") || !j.at("shape").is_array())
    throw std::invalid_argument("expected array \"shape\"");
  return Composition(j.at("shape").get<std::vector<std::size_t>>());
}

template <typename Ribbon>
Ribbon ribbon_from(const Json& j) {
  auto rows = rows_from(j, "rows");
  auto ribbon = Ribbon::from_rows(rows);
  if (ribbon.shape() != shape_from(j)) throw std::invalid_argument("\"shape\" does not match \"rows\"");
  return ribbon;
}

Json shape_json(const Composition& c) { return Json(std::vector<std::size_t>(c.parts().begin(), c.parts().end())); }

Word word_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("words are encoded as strings");
  return Word::parse(j.get<std::string>());
}

std::string quoted(const Word& w) { return "\"" + w.to_string() + "\""; }

}  // namespace

std::string render_grid(const Rows& rows) { return draw(rows, std::vector<std::size_t>(rows.size(), 0)); }

std::string render_ribbon(const Rows& rows) {
  std::vector<std::size_t> offsets;
  std::size_t at = 0;
  for (const auto& row : rows) {
    offsets.push_back(at);
    at += row.empty() ? 0 : row.size() - 1;
  }
  return draw(rows, offsets);
}

std::string render(const YoungTableau& t) { return render_grid(t.rows()); }
std::string render(const StandardYoungTableau& t) { return render_grid(t.rows()); }
std::string render(const QuasiRibbonTableau& t) { return render_ribbon(t.rows()); }
std::string render(const RecordingRibbon& r) { return render_ribbon(r.rows()); }

Json to_json(const YoungTableau& t) { return {{"rows", t.rows()}}; }
Json to_json(const StandardYoungTableau& t) { return {{"rows", t.rows()}, {"standard", true}}; }
Json to_json(const Tabloid& t) { return {{"columns", t.columns()}}; }
Json to_json(const QuasiRibbonTableau& t) { return {{"shape", shape_json(t.shape())}, {"rows", t.rows()}}; }
Json to_json(const RecordingRibbon& r) {
  return {{"shape", shape_json(r.shape())}, {"rows", r.rows()}, {"standard", true}};
}

Json to_json(const Component& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices) vertices.push_back(v.to_string());
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back({{"from", e.from.to_string()}, {"label", e.label}, {"to", e.to.to_string()}, {"quasi", e.quasi}});
  return {{"kind", std::string(to_string(c.kind))},
          {"n", c.n},
          {"root", c.root.to_string()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

YoungTableau young_tableau_from_json(const Json& j) { return YoungTableau(rows_from(j, "rows")); }
StandardYoungTableau standard_tableau_from_json(const Json& j) { return StandardYoungTableau(rows_from(j, "rows")); }
Tabloid tabloid_from_json(const Json& j) { return Tabloid(rows_from(j, "columns")); }
QuasiRibbonTableau qrt_from_json(const Json& j) { return ribbon_from<QuasiRibbonTableau>(j); }
RecordingRibbon recording_ribbon_from_json(const Json& j) { return ribbon_from<RecordingRibbon>(j); }

Component component_from_json(const Json& j) {
  try {
    Component c;
    c.kind = parse_graph_kind(j.at("kind").get<std::string>());
    c.n = j.at("n").get<Symbol>();
    c.root = word_from(j.at("root"));
    for (const auto& v : j.at("vertices")) c.vertices.push_back(word_from(v));
    for (const auto& e : j.at("edges"))
      c.edges.push_back({word_from(e.at("from")), e.at("label").get<Symbol>(), word_from(e.at("to")),
                         e.at("quasi").get<bool>()});
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed component: ") + e.what());
  }
}

std::string to_dot(const Component& c, bool overlay) {
  std::ostringstream out;
  out << "digraph \"" << (c.kind == GraphKind::crystal ? "crystal" : "quasi") << "_" << c.root.to_string()
      << "\" {\n";
  out << "  node [shape=plaintext];\n";
  for (const auto& v : c.vertices) {
    out << "  " << quoted(v) << " [label=\"" << (v.empty() ? "ε" : v.to_string()) << "\"";
    if (v == c.root) out << ", fontcolor=blue";
    out << "];\n";
  }
  for (const auto& e : c.edges) {
    out << "  " << quoted(e.from) << " -> " << quoted(e.to) << " [label=\"" << e.label << "\"";
    if (overlay && !e.quasi) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hypo::io
