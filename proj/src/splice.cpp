#include "plink/splice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plink {

namespace {

// Vertices of the component of g minus `removed` containing `start`.
std::vector<int> component_without(const PlumbingGraph& g, int removed, int start) {
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (w == removed) continue;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Int splice_weight(const PlumbingGraph& g, int v, int toward) {
  std::vector<std::size_t> idx;
  for (int w : component_without(g, v, toward)) idx.push_back(g.index_of(w));
  std::sort(idx.begin(), idx.end());
  return det(intersection_matrix(g).negated().principal_submatrix(idx));
}

SpliceDiagram splice_diagram(const PlumbingGraph& g) {
  if (!g.is_tree()) throw validation_error("splice diagram: graph must be a tree");
  if (!g.all_genus_zero()) throw validation_error("splice diagram: graph must have genus zero");

  SpliceDiagram sd;
  sd.graph = g;
  for (const auto& v : g.vertices()) {
    std::size_t val = g.valence(v.id);
    if (val >= 3) sd.nodes.push_back(v.id);
    if (val == 1) sd.leaves.push_back(v.id);
  }

  // Walk outward from every node/leaf through valence-2 chains; each walk
  // discovers one diagram edge (recorded once, from the smaller endpoint).
  auto is_endpoint = [&](int id) { return g.valence(id) != 2; };
  std::set<std::pair<int, int>> done;  // (endpoint, first step) pairs handled
  std::vector<int> endpoints = sd.nodes;
  endpoints.insert(endpoints.end(), sd.leaves.begin(), sd.leaves.end());
  if (endpoints.empty() && g.size() > 0) return sd;  // a cycle-free chain has endpoints unless empty

  for (int v : endpoints) {
    for (int first : g.neighbors(v)) {
      if (done.count({v, first})) continue;
      std::vector<int> chain;
      int prev = v, cur = first;
      while (!is_endpoint(cur)) {
        chain.push_back(cur);
        auto nbs = g.neighbors(cur);
        int next = nbs[0] == prev ? nbs[1] : nbs[0];
        prev = cur;
        cur = next;
      }
      done.insert({v, first});
      done.insert({cur, prev});
      SpliceDiagram::Edge e;
      e.a = {v, first, splice_weight(g, v, first)};
      e.b = {cur, prev, splice_weight(g, cur, prev)};
      e.chain = std::move(chain);
      sd.edges.push_back(std::move(e));
    }
  }
  return sd;
}

bool semigroup_member(const Int& target, const std::vector<Int>& generators) {
  if (target == 0) return true;
  if (target < 0) return false;
  const std::size_t n = static_cast<std::size_t>(to_ll(target));
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (const Int& g : generators) {
    if (g <= 0) throw validation_error("semigroup generators must be positive");
    if (g > target) continue;
    const std::size_t step = static_cast<std::size_t>(to_ll(g));
    for (std::size_t i = step; i <= n; ++i)
      if (reachable[i - step]) reachable[i] = 1;
  }
  return reachable[n];
}

namespace {

// l'_{vw}: walk the tree path from node v to leaf w; at every intermediate
// node multiply the weights on the edges hanging off the path.
Int linking_weight(const PlumbingGraph& g, const std::vector<int>& path) {
  Int out = 1;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int u = path[i];
    if (g.valence(u) < 3) continue;
    for (int w : g.neighbors(u)) {
      if (w == path[i - 1] || w == path[i + 1]) continue;
      out *= splice_weight(g, u, w);
    }
  }
  return out;
}

std::vector<int> tree_path(const PlumbingGraph& g, int from, int to) {
  std::map<int, int> parent;
  std::vector<int> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (int w : g.neighbors(v))
      if (!parent.count(w)) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to;; v = parent.at(v)) {
    path.push_back(v);
    if (v == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SemigroupVerdict semigroup_condition(const SpliceDiagram& sd) {
  const PlumbingGraph& g = sd.graph;
  std::set<int> node_set(sd.nodes.begin(), sd.nodes.end());
  SemigroupVerdict verdict;

  for (const auto& e : sd.edges) {
    for (const auto& [near, far] : {std::pair(e.a, e.b), std::pair(e.b, e.a)}) {
      if (!node_set.count(near.vertex) || !node_set.count(far.vertex)) continue;
      std::vector<Int> generators;
      for (int leaf : sd.leaves) {
        std::vector<int> path = tree_path(g, near.vertex, leaf);
        if (path.size() < 2 || path[1] != near.direction) continue;  // not behind this edge
        generators.push_back(linking_weight(g, path));
      }
      if (!semigroup_member(near.weight, generators)) {
        verdict.passes = false;
        verdict.failures.push_back({near.vertex, near.direction, near.weight, generators});
      }
    }
  }
  return verdict;
}

std::vector<ScanRow> sis_semigroup_scan(const std::vector<CatalogEntry>& entries) {
  std::vector<ScanRow> rows(entries.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    try {
      SISGraph built = build_graph(entries[i].input);
      SpliceDiagram sd = splice_diagram(built.graph);
      rows[i].label = entries[i].label;
      rows[i].cusps = entries[i].input.cusp_str();
      rows[i].cusp_count = static_cast<int>(entries[i].input.cusps.size());
      rows[i].central_is_node =
          std::find(sd.nodes.begin(), sd.nodes.end(), built.central) != sd.nodes.end();
      rows[i].passes = semigroup_condition(sd).passes;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace plink
