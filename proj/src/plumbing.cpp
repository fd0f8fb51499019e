#include "plink/plumbing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace plink {

int PlumbingGraph::add_vertex(long long euler, int genus) {
  int id = 0;
  for (const auto& v : vertices_) id = std::max(id, v.id + 1);
  add_vertex_with_id(id, euler, genus);
  return id;
}

void PlumbingGraph::add_vertex_with_id(int id, long long euler, int genus) {
  if (has_vertex(id)) throw validation_error("duplicate vertex id " + std::to_string(id));
  vertices_.push_back({id, euler, genus});
}

void PlumbingGraph::add_edge(int a, int b) {
  if (a == b) throw validation_error("loop edge at vertex " + std::to_string(a));
  if (!has_vertex(a) || !has_vertex(b)) throw validation_error("edge endpoint not a vertex");
  edges_.emplace_back(a, b);
}

bool PlumbingGraph::has_vertex(int id) const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [id](const PlumbingVertex& v) { return v.id == id; });
}

const PlumbingVertex& PlumbingGraph::vertex(int id) const {
  for (const auto& v : vertices_)
    if (v.id == id) return v;
  throw validation_error("no vertex with id " + std::to_string(id));
}

std::size_t PlumbingGraph::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  throw validation_error("no vertex with id " + std::to_string(id));
}

std::vector<int> PlumbingGraph::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  return out;
}

bool PlumbingGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<int> seen{vertices_.front().id};
  std::vector<int> stack{vertices_.front().id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices_.size();
}

bool PlumbingGraph::is_tree() const {
  return is_connected() && edges_.size() + 1 == vertices_.size();
}

bool PlumbingGraph::all_genus_zero() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const PlumbingVertex& v) { return v.genus == 0; });
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = g.vertices()[i].euler;
  for (const auto& [a, b] : g.edges()) {
    std::size_t i = g.index_of(a), j = g.index_of(b);
    m(i, j) += 1;
    m(j, i) += 1;
  }
  return m;
}

Int graph_determinant(const PlumbingGraph& g) { return det(intersection_matrix(g).negated()); }

bool is_negative_definite(const PlumbingGraph& g) {
  if (g.size() == 0) return true;
  return is_positive_definite(intersection_matrix(g).negated());
}

std::vector<Int> AbelianGroup::nontrivial() const {
  std::vector<Int> out;
  for (const auto& f : factors)
    if (f != 1) out.push_back(f);
  return out;
}

AbelianGroup homology(const PlumbingGraph& g) {
  if (!g.is_tree() || !g.all_genus_zero())
    throw validation_error("homology: graph must be a genus-zero tree (b1 of the link must vanish)");
  AbelianGroup h;
  h.factors = smith_normal_form(intersection_matrix(g));
  h.order = 1;
  for (const auto& f : h.factors) h.order *= f;
  return h;
}

CanonicalResult canonical_k2s(const PlumbingGraph& g) {
  if (!is_negative_definite(g))
    throw validation_error("canonical cycle: graph is not negative definite");
  const std::size_t n = g.size();
  IntMatrix m = intersection_matrix(g);
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices()[i];
    rhs[i] = Rational(2 * Int(v.genus) - 2 - v.euler);
  }
  std::vector<Rational> x = solve_rational(m, rhs);
  Rational k2 = 0;
  for (std::size_t i = 0; i < n; ++i) k2 += x[i] * rhs[i];

  CanonicalResult res;
  res.k.coeffs = std::move(x);
  for (const auto& v : g.vertices()) res.k.ids.push_back(v.id);
  res.k2s = k2 + Int(n);
  return res;
}

std::vector<Int> cycle_pairing(const PlumbingGraph& g, const std::vector<Int>& coeffs) {
  IntMatrix m = intersection_matrix(g);
  const std::size_t n = g.size();
  if (coeffs.size() != n) throw validation_error("cycle_pairing: wrong coefficient count");
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m(i, j) * coeffs[j];
  return out;
}

IntegerCycle minimal_cycle(const PlumbingGraph& g) {
  if (!g.is_connected() || g.size() == 0)
    throw validation_error("minimal cycle: graph must be connected and nonempty");
  if (!is_negative_definite(g))
    throw validation_error("minimal cycle: graph is not negative definite");

  const std::size_t n = g.size();
  std::vector<Int> z(n, Int(1));
  // Laufer ascent: all-ones is <= the minimal cycle on a connected graph,
  // and each step preserves that bound, so the limit is the minimal cycle.
  while (true) {
    std::vector<Int> p = cycle_pairing(g, z);
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] > 0) {
        v = i;
        break;
      }
    if (v == n) break;
    z[v] += 1;
  }

  IntegerCycle cycle;
  for (const auto& v : g.vertices()) cycle.ids.push_back(v.id);
  cycle.coeffs = std::move(z);
  return cycle;
}

std::vector<int> blow_down_candidates(const PlumbingGraph& g) {
  std::vector<int> out;
  for (const auto& v : g.vertices())
    if (v.euler == -1 && v.genus == 0 && g.valence(v.id) <= 2) out.push_back(v.id);
  return out;
}

PlumbingGraph blow_down(const PlumbingGraph& g, int id) {
  const auto& v = g.vertex(id);
  auto nbs = g.neighbors(id);
  if (v.euler != -1 || v.genus != 0 || nbs.size() > 2)
    throw validation_error("vertex " + std::to_string(id) + " cannot be blown down");
  PlumbingGraph out;
  for (const auto& w : g.vertices()) {
    if (w.id == id) continue;
    long long bump = static_cast<long long>(std::count(nbs.begin(), nbs.end(), w.id));
    out.add_vertex_with_id(w.id, w.euler + bump, w.genus);
  }
  for (const auto& [a, b] : g.edges())
    if (a != id && b != id) out.add_edge(a, b);
  if (nbs.size() == 2) out.add_edge(nbs[0], nbs[1]);
  return out;
}

PlumbingGraph minimize(PlumbingGraph g) {
  if (!g.is_tree() && g.size() > 0)
    throw validation_error("minimize: only trees are supported");
  while (true) {
    auto cand = blow_down_candidates(g);
    if (cand.empty()) return g;
    g = blow_down(g, cand.front());
  }
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, int id) {
  PlumbingGraph out;
  int fresh = 0;
  for (const auto& v : g.vertices()) {
    out.add_vertex_with_id(v.id, v.euler - (v.id == id ? 1 : 0), v.genus);
    fresh = std::max(fresh, v.id + 1);
  }
  for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
  out.add_vertex_with_id(fresh, -1, 0);
  out.add_edge(id, fresh);
  return out;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, int a, int b) {
  PlumbingGraph out;
  int fresh = 0;
  for (const auto& v : g.vertices()) {
    long long drop = (v.id == a || v.id == b) ? 1 : 0;
    out.add_vertex_with_id(v.id, v.euler - drop, v.genus);
    fresh = std::max(fresh, v.id + 1);
  }
  bool removed = false;
  for (const auto& [x, y] : g.edges()) {
    bool hit = !removed && ((x == a && y == b) || (x == b && y == a));
    if (hit) {
      removed = true;
      continue;
    }
    out.add_edge(x, y);
  }
  if (!removed) throw validation_error("blow_up_edge: no such edge");
  out.add_vertex_with_id(fresh, -1, 0);
  out.add_edge(a, fresh);
  out.add_edge(fresh, b);
  return out;
}

namespace {

std::string encode_rooted(const PlumbingGraph& g, int v, int parent) {
  const auto& vert = g.vertex(v);
  std::vector<std::string> children;
  for (int w : g.neighbors(v))
    if (w != parent) children.push_back(encode_rooted(g, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(" + std::to_string(vert.euler) + "," + std::to_string(vert.genus);
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

std::vector<int> tree_centroids(const PlumbingGraph& g) {
  // Repeatedly strip leaves; the last one or two vertices remain.
  std::map<int, std::set<int>> adj;
  for (const auto& v : g.vertices()) adj[v.id];
  for (const auto& [a, b] : g.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::size_t remaining = adj.size();
  while (remaining > 2) {
    std::vector<int> leaves;
    for (const auto& [v, nb] : adj)
      if (nb.size() <= 1) leaves.push_back(v);
    for (int v : leaves) {
      for (int w : adj[v]) adj[w].erase(v);
      adj.erase(v);
    }
    remaining = adj.size();
  }
  std::vector<int> out;
  for (const auto& [v, nb] : adj) out.push_back(v);
  return out;
}

}  // namespace

std::string canonical_form(const PlumbingGraph& g) {
  if (g.size() == 0) return "";
  if (!g.is_tree()) throw validation_error("canonical_form: only trees are supported");
  std::string best;
  for (int c : tree_centroids(g)) {
    std::string enc = encode_rooted(g, c, -1);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  return canonical_form(a) == canonical_form(b);
}

PlumbingGraph chain_graph(const std::vector<long long>& eulers) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < eulers.size(); ++i) g.add_vertex_with_id(static_cast<int>(i), eulers[i]);
  for (std::size_t i = 0; i + 1 < eulers.size(); ++i)
    g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  return g;
}

PlumbingGraph star_graph(long long center_euler, const std::vector<std::vector<long long>>& legs) {
  PlumbingGraph g;
  g.add_vertex_with_id(0, center_euler);
  int next = 1;
  for (const auto& leg : legs) {
    int prev = 0;
    for (long long e : leg) {
      g.add_vertex_with_id(next, e);
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

}  // namespace plink
