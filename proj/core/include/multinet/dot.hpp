#pragma once

#include <string>

#include "multinet/mstructure.hpp"

namespace multinet {

/// Graphviz rendering: links as boxes, vertices as ellipses, drawn top to
/// bottom so that link inputs sit above the link and outputs below.
std::string to_dot(const MStructure& S, const std::string& name = "structure", bool unicode = false);

}  // namespace multinet
