#include "hyperwalk/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperwalk::io {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_number(std::string_view token, std::string_view context) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error(ErrorKind::ParseError, "bad number '" + std::string(token) + "' in " + std::string(context));
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

HypergraphSpec parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw Error(ErrorKind::ParseError, "expected an object with 'vertices' and 'edges'");

  HypergraphSpec spec;
  try {
    for (const auto& v : doc.at("vertices")) spec.vertices.push_back(v.get<std::string>());
    std::size_t index = 0;
    for (const auto& e : doc.at("edges")) {
      EdgeSpec es;
      es.weight = e.at("weight").get<double>();
      const auto& members = e.at("members");
      if (!members.is_object())
        throw Error(ErrorKind::ParseError, "edge e" + std::to_string(index + 1) + ": 'members' must be an object");
      for (auto it = members.begin(); it != members.end(); ++it)
        es.members.emplace_back(it.key(), it.value().get<double>());
      spec.edges.push_back(std::move(es));
      ++index;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return spec;
}

HypergraphSpec parse_text(std::string_view text) {
  HypergraphSpec spec;
  bool explicit_vertices = false;
  std::unordered_map<std::string, bool> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);

    if (tokens.front() == "vertices:") {
      if (explicit_vertices || !spec.edges.empty())
        throw Error(ErrorKind::ParseError, where + ": vertices header must come first and only once");
      explicit_vertices = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        spec.vertices.emplace_back(tokens[i]);
        seen[std::string(tokens[i])] = true;
      }
      continue;
    }

    EdgeSpec es;
    es.weight = parse_number(tokens.front(), where);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto colon = tokens[i].rfind(':');
      if (colon == std::string_view::npos || colon == 0)
        throw Error(ErrorKind::ParseError, where + ": expected vertex:gamma, got '" + std::string(tokens[i]) + "'");
      std::string name(tokens[i].substr(0, colon));
      const double gamma = parse_number(tokens[i].substr(colon + 1), where);
      if (!explicit_vertices && seen.emplace(name, true).second) spec.vertices.push_back(name);
      es.members.emplace_back(std::move(name), gamma);
    }
    spec.edges.push_back(std::move(es));
  }
  return spec;
}

HypergraphSpec parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::string emit_json(const Hypergraph& h) {
  ordered_json doc;
  doc["vertices"] = h.vertex_names();
  ordered_json edges = ordered_json::array();
  for (const auto& edge : h.edges()) {
    ordered_json members = ordered_json::object();
    for (const auto& m : edge.members) members[h.vertex_name(m.vertex)] = m.gamma;
    edges.push_back({{"weight", edge.weight}, {"members", std::move(members)}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string emit_text(const Hypergraph& h) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& name : h.vertex_names()) out << ' ' << name;
  out << '\n';
  for (const auto& edge : h.edges()) {
    out << format_double(edge.weight);
    for (const auto& m : edge.members) out << ' ' << h.vertex_name(m.vertex) << ':' << format_double(m.gamma);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load_hypergraph(const std::filesystem::path& path, Hypergraph::Options options) {
  return Hypergraph::build(parse(read_file(path)), options);
}

}  // namespace hyperwalk::io
