#pragma once

#include <string>
#include <vector>

#include "plink/branch.hpp"
#include "plink/plumbing.hpp"
#include "plink/polynomial.hpp"

namespace plink {

/// A superisolated singularity f = f_d + (generic f_{d+1}): degree d plus
/// the multiplicity sequences of the cusps of the rational cuspidal curve
/// {f_d = 0}.
struct SISInput {
  int d = 0;
  std::vector<MultiplicitySequence> cusps;

  static SISInput parse(int d, std::string_view comma_separated_cusps);
  std::string cusp_str() const;  // "[3],[2_3]"
};

/// Checks d >= 3, per-cusp realizability, the genus constraint
/// sum mu_i = (d-1)(d-2), and first multiplicity <= d-1. Throws
/// validation_error with the offending numbers.
void validate(const SISInput& input);

struct SISGraph {
  PlumbingGraph graph;
  int central = 0;          // id of the central vertex
  std::vector<int> arrows;  // id of each cusp's (-1)-vertex
  std::vector<PlaneBranch> branches;
};

/// Minimal good resolution graph: the cusps' embedded resolution graphs
/// joined to a central vertex with euler number -d - sum(a_i).
SISGraph build_graph(const SISInput& input);

struct ClosedForms {
  Rational k2s;  // -d(d-2)^2 + 1
  Int mu;        // (d-1)^3 + (d-1)(d-2)
  Int pg;        // d(d-1)(d-2)/6
  Int h_order;   // d
};

/// The four closed forms, each cross-checked against the graph-derived
/// value (canonical_k2s, homology); a mismatch raises internal_error.
ClosedForms closed_forms(const SISInput& input);

/// Characteristic polynomial Delta_f(t) = (t^d-1)/(t-1) prod_i Delta_i(t^{d+1}).
IntPolynomial char_poly(const SISInput& input);

/// Casson-Walker invariant
///   lambda = -(1/2) Dbar''(1) + (d-1)(d-2)/24,
/// Dbar the symmetrized product of the cusp characteristic polynomials.
Rational casson_walker(const SISInput& input);

/// Reidemeister-Turaev torsion
///   T = (1/d) sum_{xi^d=1, xi != 1} prod_i Delta_i(xi) / (xi-1)^2,
/// evaluated exactly through reduction mod t^d - 1 and the closed forms
/// S1(d), S2(d) for the pure root-of-unity sums.
Rational torsion(const SISInput& input);

/// sum_{xi^d=1, xi!=1} 1/(xi-1)   = -(d-1)/2
Rational s1_sum(int d);
/// sum_{xi^d=1, xi!=1} 1/(xi-1)^2 = -(d-1)(d-5)/12
Rational s2_sum(int d);

struct InvariantReport {
  SISInput input;
  PlumbingGraph graph;
  Int h_order;
  Rational k2s;
  Int mu;
  Int pg;
  IntPolynomial delta_f;
  Rational lambda;
  Rational torsion;
  Rational sw;       // -lambda/|H| + torsion
  Rational swc_rhs;  // sw - (K^2+s)/8
  bool swc_rhs_integral = false;
  bool swc_holds = false;  // pg == swc_rhs
};

InvariantReport sw_verdict(const SISInput& input);

struct CatalogEntry {
  std::string label;
  SISInput input;
};

/// The bundled classification of rational cuspidal curves for d = 4, 5, 6.
std::vector<CatalogEntry> catalog(int d);

struct TableRow {
  std::string label;
  std::string cusps;
  InvariantReport report;
};

/// One sw_verdict per catalog entry, in catalog order.
std::vector<TableRow> table(int d);

std::string format_table(const std::vector<TableRow>& rows);

}  // namespace plink
