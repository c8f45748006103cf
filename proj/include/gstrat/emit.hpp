#pragma once

#include <string>

#include "gstrat/space.hpp"

namespace gstrat {

/// Hasse diagram as a DOT digraph. Nodes are labeled "id:name|dim|isotropy"
/// and every link is drawn as a nested cluster.
std::string emit_dot(const StratSpace& x);

/// Lossless structured-text form with a fixed key order.
std::string emit_json(const StratSpace& x);

/// Inverse of emit_json. Throws Serialization on malformed input.
StratSpace read_json(const std::string& text);

}  // namespace gstrat
