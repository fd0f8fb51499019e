#pragma once

#include <vector>

#include "plink/plumbing.hpp"
#include "plink/superisolated.hpp"

namespace plink {

/// Splice-diagram weight of the incidence (v, edge toward u): the graph
/// determinant det(-M) of the component of G minus v containing u.
Int splice_weight(const PlumbingGraph& g, int v, int toward);

/// Splice diagram of a negative-definite genus-zero tree. Nodes are the
/// valence >= 3 vertices, leaves the valence-1 vertices; valence-2 chains
/// are contracted away. Weights are attached at both ends of every diagram
/// edge.
struct SpliceDiagram {
  struct End {
    int vertex;      // plumbing id of the node or leaf
    int direction;   // plumbing id of the first vertex on the way out
    Int weight;      // splice_weight(vertex, direction)
  };
  struct Edge {
    End a, b;
    std::vector<int> chain;  // contracted valence-2 vertices between them
  };
  PlumbingGraph graph;
  std::vector<int> nodes;
  std::vector<int> leaves;
  std::vector<Edge> edges;

  bool single_node() const { return nodes.size() <= 1; }
};

SpliceDiagram splice_diagram(const PlumbingGraph& g);

/// Coin-problem membership: can target be written as a non-negative integer
/// combination of the generators?
bool semigroup_member(const Int& target, const std::vector<Int>& generators);

struct SemigroupFailure {
  int node;            // node where the condition fails
  int toward;          // first plumbing vertex in the failing direction
  Int weight;          // d_{ve}, the value that must lie in the semigroup
  std::vector<Int> generators;  // l'_{vw} over the leaves w behind the edge
};

struct SemigroupVerdict {
  bool passes = true;
  std::vector<SemigroupFailure> failures;
};

/// The semigroup condition: at every node v and every diagram edge from v
/// to another node, the near weight d_{ve} must lie in the numerical
/// semigroup generated by l'_{vw} = prod over nodes u != v on the path v->w
/// of (product of the weights at u on edges off the path), w running over
/// the leaves behind the edge. Edges toward leaves impose nothing.
SemigroupVerdict semigroup_condition(const SpliceDiagram& sd);

struct ScanRow {
  std::string label;
  std::string cusps;
  int cusp_count = 0;
  bool central_is_node = false;
  bool passes = true;
};

/// Run the semigroup condition over catalog entries.
std::vector<ScanRow> sis_semigroup_scan(const std::vector<CatalogEntry>& entries);

}  // namespace plink
