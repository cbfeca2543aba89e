#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "trasdim/borst.hpp"
#include "trasdim/covers.hpp"
#include "trasdim/solver.hpp"
#include "trasdim/spaces.hpp"

namespace trasdim {

using Json = nlohmann::json;

Json window_spec_to_json(const WindowSpec& spec);
WindowSpec window_spec_from_json(const Json& j);

// Spec form when the window came from one, explicit point list otherwise.
Json window_to_json(const Window& w);
std::shared_ptr<const Window> window_from_json(const Json& j);

// Lattice points serialize as coordinate arrays, tower points as
// {"level": k, "coords": [...]}.
Json point_to_json(const Point& p, Metric metric);
Point point_from_json(const Json& j, int sup_level);

Json cover_to_json(const ColoredCover& cover);
// Throws std::invalid_argument listing the offenders if any block point
// falls outside the embedded window.
ColoredCover cover_from_json(const Json& j);

Json instance_to_json(const DecisionInstance& inst);
DecisionInstance instance_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert, const DecisionInstance& inst);

Json system_to_json(const ExplicitSystem& m);
ExplicitSystem system_from_json(const Json& j);

std::string canonical_dump(const Json& j);

} // namespace trasdim
