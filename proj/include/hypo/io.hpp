#pragma once

// Text, JSON and Graphviz renderings of tableaux, ribbons and components.

#include <string>

#include <json.hpp>

#include "hypo/crystal.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "hypo/young.hpp"

namespace hypo::io {

using Json = nlohmann::json;

/// Boxed grid, rows left-aligned.
std::string render_grid(const Rows& rows);
/// Boxed staircase: each row starts under the last cell of the row above.
std::string render_ribbon(const Rows& rows);

std::string render(const YoungTableau& t);
std::string render(const StandardYoungTableau& t);
std::string render(const QuasiRibbonTableau& t);
std::string render(const RecordingRibbon& r);

Json to_json(const YoungTableau& t);
Json to_json(const StandardYoungTableau& t);
Json to_json(const Tabloid& t);
Json to_json(const QuasiRibbonTableau& t);
Json to_json(const RecordingRibbon& r);
Json to_json(const Component& c);

// Parsers throw std::invalid_argument on malformed documents.
YoungTableau young_tableau_from_json(const Json& j);
StandardYoungTableau standard_tableau_from_json(const Json& j);
Tabloid tabloid_from_json(const Json& j);
QuasiRibbonTableau qrt_from_json(const Json& j);
RecordingRibbon recording_ribbon_from_json(const Json& j);
Component component_from_json(const Json& j);

/// Edges labelled by i. With `overlay`, edges where the quasi-Kashiwara
/// operator does not act are drawn dotted.
std::string to_dot(const Component& c, bool overlay = false);

}  // namespace hypo::io
