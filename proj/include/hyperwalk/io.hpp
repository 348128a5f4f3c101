#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk::io {

// JSON form:
//   {"vertices": ["a", "b", ...],
//    "edges": [{"weight": 1.0, "members": {"a": 2.0, "b": 1.0}}, ...]}
//
// Text form: optional `vertices: a b c` header, then one edge per line as
//   `<omega> <vertex>:<gamma> <vertex>:<gamma> ...`
// Blank lines and lines starting with '#' are ignored. Without a header the
// vertices are declared in order of first appearance.

HypergraphSpec parse_json(std::string_view text);
HypergraphSpec parse_text(std::string_view text);
/// Dispatches on the first non-blank character ('{' selects JSON).
HypergraphSpec parse(std::string_view text);

std::string emit_json(const Hypergraph& h);
std::string emit_text(const Hypergraph& h);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

std::string read_file(const std::filesystem::path& path);
Hypergraph load_hypergraph(const std::filesystem::path& path,
                           Hypergraph::Options options = Hypergraph::Options{});

}  // namespace hyperwalk::io
