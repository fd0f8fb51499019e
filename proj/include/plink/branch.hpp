#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plink/plumbing.hpp"
#include "plink/polynomial.hpp"

namespace plink {

/// Multiplicity sequence of a plane branch in the compressed bracket
/// notation "[v_r,...]": value v repeated r times, values >= 2 and
/// non-increasing. The expanded form appends k trailing ones where k is the
/// last multiplicity greater than 1, e.g. [4_2,2_3] -> 4,4,2,2,2,1,1.
struct MultiplicitySequence {
  std::vector<std::pair<int, int>> compressed;  // (value, repeat)
  std::vector<int> expanded;

  static MultiplicitySequence parse(std::string_view text);
  static MultiplicitySequence from_expanded(std::vector<int> expanded);
  std::string str() const;  // canonical bracket notation
  bool operator==(const MultiplicitySequence&) const = default;
};

/// proximity[i] = indices j < i such that point i is proximate to point j.
/// Reconstructed by the exact-sum rule: the points proximate to i are the
/// maximal run i+1..i+s with m_{i+1}+...+m_{i+s} = m_i. Throws
/// validation_error when no exact run exists (sequence not realizable).
std::vector<std::vector<int>> proximity(const MultiplicitySequence& seq);

/// Minimal embedded resolution of the branch, by blowup simulation. Vertex
/// ids are the blowup order 0..n; the unique (-1)-vertex carries the strict
/// transform (the arrow).
struct EmbeddedResolution {
  PlumbingGraph graph;
  std::vector<long long> total_multiplicity;  // M_v, indexed by vertex id
  int arrow = 0;
};

struct PlaneBranch {
  MultiplicitySequence seq;
  std::vector<std::vector<int>> prox;
  EmbeddedResolution resolution;
  long long delta = 0;   // sum of m(m-1)/2 over the expanded sequence
  long long milnor = 0;  // 2 delta
  std::vector<std::pair<long long, long long>> newton_pairs;

  static PlaneBranch from_sequence(const MultiplicitySequence& seq);
  static PlaneBranch parse(std::string_view text);

  bool one_pair() const { return newton_pairs.size() == 1; }
  /// Multiplicity of the (-1)-curve, the a_i entering the central euler number.
  long long arrow_multiplicity() const { return resolution.total_multiplicity[resolution.arrow]; }
};

/// Characteristic polynomial of the branch via the resolution-graph product
/// Delta(t) = (1-t) prod_v (1-t^{M_v})^{-chi_v}, chi_v = 2 - valence(v)
/// (valence counts the arrow). Degree 2 delta, Delta(1) = 1.
IntPolynomial alexander(const PlaneBranch& b);

/// Forward Euclidean-run expansion: the multiplicity sequence of the branch
/// with the given Newton pairs. Inverse of PlaneBranch::newton_pairs.
std::vector<int> expand_newton_pairs(const std::vector<std::pair<long long, long long>>& pairs);

}  // namespace plink
