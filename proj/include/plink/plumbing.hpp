#pragma once

#include <string>
#include <vector>

#include "plink/matrix.hpp"
#include "plink/numbers.hpp"

namespace plink {

struct PlumbingVertex {
  int id = 0;
  long long euler = 0;
  int genus = 0;
  bool operator==(const PlumbingVertex&) const = default;
};

/// Decorated graph of exceptional curves: vertex = curve with
/// self-intersection (euler) and genus, edge = transverse intersection.
/// Vertex ids are arbitrary but unique; storage order is construction order
/// and fixes the row order of the intersection matrix.
class PlumbingGraph {
 public:
  int add_vertex(long long euler, int genus = 0);           // returns a fresh id
  void add_vertex_with_id(int id, long long euler, int genus = 0);
  void add_edge(int a, int b);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_vertex(int id) const;
  const PlumbingVertex& vertex(int id) const;
  std::size_t index_of(int id) const;
  std::vector<int> neighbors(int id) const;
  std::size_t valence(int id) const { return neighbors(id).size(); }

  bool is_connected() const;
  bool is_tree() const;
  bool all_genus_zero() const;

  bool operator==(const PlumbingGraph&) const = default;

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Symmetric s x s matrix: diagonal = euler numbers, off-diagonal = number
/// of edges (0/1 for trees). Row order = vertex storage order.
IntMatrix intersection_matrix(const PlumbingGraph& g);

/// det(-M); positive on negative definite graphs. This is the "determinant
/// of the graph" used for splice weights and |H|.
Int graph_determinant(const PlumbingGraph& g);

bool is_negative_definite(const PlumbingGraph& g);

struct AbelianGroup {
  std::vector<Int> factors;  // full divisibility chain d1 | d2 | ..., incl. 1s
  Int order;                 // product, or 0 when a factor is 0
  std::vector<Int> nontrivial() const;
  bool trivial() const { return nontrivial().empty(); }
};

/// H1 of the plumbed 3-manifold: cokernel of the intersection matrix.
/// Requires a tree with all genus 0 (otherwise H1 has a free part).
AbelianGroup homology(const PlumbingGraph& g);

struct RationalCycle {
  std::vector<int> ids;
  std::vector<Rational> coeffs;
};

struct IntegerCycle {
  std::vector<int> ids;
  std::vector<Int> coeffs;
};

struct CanonicalResult {
  RationalCycle k;
  Rational k2s;
};

/// Canonical cycle K from the adjunction relations K.E_v = 2 genus_v - 2 -
/// E_v^2, and the invariant K^2 + (number of vertices).
CanonicalResult canonical_k2s(const PlumbingGraph& g);

/// Minimal (Artin) cycle by Laufer ascent from the all-ones cycle.
IntegerCycle minimal_cycle(const PlumbingGraph& g);

/// Intersection numbers Z.E_v for all v, in vertex storage order.
std::vector<Int> cycle_pairing(const PlumbingGraph& g, const std::vector<Int>& coeffs);

/// Vertices that can currently be blown down: genus 0, euler -1, valence <= 2.
std::vector<int> blow_down_candidates(const PlumbingGraph& g);
PlumbingGraph blow_down(const PlumbingGraph& g, int id);

/// Blow down until no candidate is left.
PlumbingGraph minimize(PlumbingGraph g);

/// Inverse moves, used to test invariance of K^2 + s.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, int id);
PlumbingGraph blow_up_edge(const PlumbingGraph& g, int a, int b);

/// Labeled-tree isomorphism on (euler, genus) decorations.
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);
std::string canonical_form(const PlumbingGraph& g);

// Construction helpers.
PlumbingGraph chain_graph(const std::vector<long long>& eulers);
/// Star: central vertex plus one chain per leg, each leg listed from the
/// vertex adjacent to the center outward. Returns the graph; the center gets
/// id 0, legs follow in order.
PlumbingGraph star_graph(long long center_euler, const std::vector<std::vector<long long>>& legs);

}  // namespace plink
