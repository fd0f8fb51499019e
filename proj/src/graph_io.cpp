#include "plink/graph_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace plink {

nlohmann::json graph_to_json(const PlumbingGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices())
    j["vertices"].push_back({{"id", v.id}, {"euler", v.euler}, {"genus", v.genus}});
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

PlumbingGraph graph_from_json(const nlohmann::json& j) {
  PlumbingGraph g;
  if (!j.contains("vertices")) throw validation_error("graph JSON: missing \"vertices\"");
  for (const auto& v : j.at("vertices"))
    g.add_vertex_with_id(v.at("id").get<int>(), v.at("euler").get<long long>(),
                         v.value("genus", 0));
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    if (!e.is_array() || e.size() != 2) throw validation_error("graph JSON: edge must be a pair");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

std::string graph_to_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n";
  for (const auto& v : g.vertices()) {
    os << "  " << v.id << " [label=\"" << v.euler;
    if (v.genus != 0) os << ", g=" << v.genus;
    os << "\"];\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

PlumbingGraph graph_from_dot(const std::string& dot) {
  static const std::regex vertex_re(
      R"(^\s*(-?\d+)\s*\[label="(-?\d+)(?:,\s*g=(\d+))?"\]\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*(-?\d+)\s*--\s*(-?\d+)\s*;?\s*$)");

  PlumbingGraph g;
  std::istringstream is(dot);
  std::string line;
  while (std::getline(is, line)) {
    std::smatch m;
    if (std::regex_match(line, m, vertex_re)) {
      g.add_vertex_with_id(std::stoi(m[1]), std::stoll(m[2]), m[3].matched ? std::stoi(m[3]) : 0);
    } else if (std::regex_match(line, m, edge_re)) {
      g.add_edge(std::stoi(m[1]), std::stoi(m[2]));
    }
  }
  if (g.size() == 0) throw validation_error("DOT input contains no vertices");
  return g;
}

PlumbingGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.find("graph") != std::string::npos && text.find('{') != std::string::npos &&
      text.find("\"vertices\"") == std::string::npos)
    return graph_from_dot(text);
  return graph_from_json(nlohmann::json::parse(text));
}

}  // namespace plink
