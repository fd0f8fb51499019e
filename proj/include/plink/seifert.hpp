#pragma once

#include <vector>

#include "plink/branch.hpp"
#include "plink/plumbing.hpp"

namespace plink {

struct SeifertLeg {
  Int alpha;  // >= 2
  Int beta;   // 1 <= beta < alpha, coprime to alpha
  bool operator==(const SeifertLeg&) const = default;
};

/// Seifert invariants of a star-shaped graph: central euler number -b and
/// one (alpha, beta) pair per leg, alpha/beta the negative continued
/// fraction of the leg read from the vertex adjacent to the center outward.
struct SeifertData {
  Int b;
  std::vector<SeifertLeg> legs;

  /// Orbifold Euler number -b + sum beta_i/alpha_i; negative for links.
  Rational e() const;
  bool operator==(const SeifertData&) const = default;
};

/// Recognize a star-shaped graph (at most one vertex of valence >= 3) and
/// read off its Seifert data. For chains the first vertex serves as the
/// center. Throws validation_error for two or more valence >= 3 vertices
/// ("not star-shaped") or a leg entry > -2 ("not minimal").
SeifertData star_shape(const PlumbingGraph& g);

/// Central -b vertex plus one Hirzebruch-Jung chain per leg; inverse of
/// star_shape on minimized star graphs.
PlumbingGraph seifert_to_graph(const SeifertData& s);

/// Negative continued fraction expansion alpha/beta = b1 - 1/(b2 - ...),
/// all entries >= 2.
std::vector<Int> hirzebruch_jung(Int alpha, Int beta);

/// Geometric genus of the weighted homogeneous singularity with these
/// Seifert invariants:
///   p_g = sum_{l >= 0} max(0, -1 - l b + sum_i ceil(l beta_i / alpha_i)).
/// Every term with l > (#legs - 1)/|e| is negative, which bounds the sum.
Int pinkham_pg(const SeifertData& s);

struct BrieskornTriple {
  Int a1, a2, a3;  // all >= 2, gcd of the three = 1
};

/// Seifert invariants of the Brieskorn link of x^a1 + y^a2 + z^a3. Rejects
/// triples whose link fibers over a positive-genus base.
SeifertData brieskorn_seifert(const BrieskornTriple& t);

PlumbingGraph brieskorn_graph(const BrieskornTriple& t);

/// Milnor number (a1-1)(a2-1)(a3-1).
Int brieskorn_mu(const BrieskornTriple& t);

/// Geometric genus as the lattice-point count
/// #{k in Z^3_{>0} : k1/a1 + k2/a2 + k3/a3 <= 1}.
Int brieskorn_pg(const BrieskornTriple& t);

/// 12 p_g = mu - (K^2 + s), exactly.
bool laufer_check(const Int& mu, const Int& pg, const Rational& k2s);

/// Universal abelian cover of the superisolated singularity with one cusp:
/// for a one-Newton-pair cusp (p, q) and degree d this is the Brieskorn
/// link of Sigma(p, q, pq + d). Throws for multi-pair cusps.
BrieskornTriple uac_brieskorn(int d, const PlaneBranch& cusp);

}  // namespace plink
