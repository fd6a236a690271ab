#pragma once

#include "json.hpp"

#include "stight/digraph.hpp"

namespace stight {

/// {n, arcs, profile, deficiencies, flags}, keys in that order.
nlohmann::ordered_json check_report(const Orientation& d);

}  // namespace stight
