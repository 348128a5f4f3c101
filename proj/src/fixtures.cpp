#include "hyperwalk/fixtures.hpp"

namespace hyperwalk::fixtures {

HypergraphSpec h3_spec() {
  HypergraphSpec spec;
  spec.vertices = {"v1", "v2", "v3", "v4"};
  spec.edges.push_back({1.0, {{"v1", 2.0}, {"v2", 1.0}, {"v3", 1.0}}});
  spec.edges.push_back({1.0, {{"v1", 1.0}, {"v3", 1.0}, {"v4", 1.0}}});
  return spec;
}

Hypergraph h3() { return Hypergraph::build(h3_spec()); }

Hypergraph single_edge(std::initializer_list<std::string> names) {
  HypergraphSpec spec;
  spec.vertices.assign(names.begin(), names.end());
  EdgeSpec edge;
  for (const auto& name : names) edge.members.emplace_back(name, 1.0);
  spec.edges.push_back(std::move(edge));
  return Hypergraph::build(spec);
}

}  // namespace hyperwalk::fixtures
