#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "plink/plumbing.hpp"

namespace plink {

/// {"vertices":[{"id":0,"euler":-2,"genus":0},...],"edges":[[0,1],...]}
nlohmann::json graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const nlohmann::json& j);

/// Undirected DOT with euler-number labels (genus appended when nonzero).
std::string graph_to_dot(const PlumbingGraph& g);
/// Parses the DOT subset emitted by graph_to_dot.
PlumbingGraph graph_from_dot(const std::string& dot);

PlumbingGraph load_graph_file(const std::string& path);

}  // namespace plink
