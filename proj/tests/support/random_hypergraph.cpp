#include "random_hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hyperwalk::testkit {

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomOptions& o) {
  std::uniform_int_distribution<std::size_t> vertex_count(o.min_vertices, o.max_vertices);
  std::uniform_real_distribution<double> weight(o.weight_lo, o.weight_hi);
  for (;;) {
    const std::size_t n = vertex_count(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, o.max_edges)(rng);

    HypergraphSpec spec;
    for (std::size_t v = 0; v < n; ++v) spec.vertices.push_back("x" + std::to_string(v));
    std::vector<double> vertex_gamma(n);
    for (auto& g : vertex_gamma) g = o.trivial ? 1.0 : weight(rng);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t lo = std::min(o.min_edge_size, n);
      const std::size_t size = std::uniform_int_distribution<std::size_t>(lo, n)(rng);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::size_t> members(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
      std::sort(members.begin(), members.end());

      EdgeSpec edge;
      edge.weight = weight(rng);
      for (std::size_t v : members) {
        const double g = o.trivial ? 1.0 : o.edge_independent ? vertex_gamma[v] : weight(rng);
        edge.members.emplace_back(spec.vertices[v], g);
      }
      spec.edges.push_back(std::move(edge));
    }
    try {
      return Hypergraph::build(spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DisconnectedHypergraph) throw;
    }
  }
}

std::vector<Hypergraph> sweep(std::uint64_t seed, std::size_t count, const RandomOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypergraph(rng, options));
  return out;
}

}  // namespace hyperwalk::testkit
