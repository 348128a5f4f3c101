#pragma once

#include <initializer_list>
#include <string>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk::fixtures {

/// Four vertices v1..v4 with e1 = {v1, v2, v3}, e2 = {v1, v3, v4}, both of
/// weight 1; gamma_e1(v1) = 2 and every other vertex weight is 1. Its walk is
/// not reversible.
HypergraphSpec h3_spec();
Hypergraph h3();

/// One edge over `names` with weight 1 and unit vertex weights.
Hypergraph single_edge(std::initializer_list<std::string> names);

}  // namespace hyperwalk::fixtures
