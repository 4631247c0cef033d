#pragma once

#include "morsefiber/diagram.hpp"
#include "morsefiber/fiber.hpp"

#include <json.hpp>

namespace morsefiber {

using Json = nlohmann::json;

/// Rationals travel as strings ("p/q" or "p") to stay exact.
Json to_json(const Grade& g);
Grade grade_from_json(const Json& j);

Json to_json(const Line& line);
Line line_from_json(const Json& j);

/// {dim, birthT, deathT|"inf", birthPoint, deathPoint|"inf", multiplicity}.
Json point_to_json(const FiberDiagram& diagram, const DiagramPoint& p);
Json points_to_json(const FiberDiagram& diagram);
FiberDiagram diagram_from_json(const Line& line, const Json& points);

Json to_json(const LineSignature& sig);
LineSignature signature_from_json(const Json& j);

Json pushed_criticals_to_json(const std::vector<PushedCritical>& crit);

}  // namespace morsefiber
