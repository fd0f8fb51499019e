// Independent test oracles. Everything here recomputes results along routes
// the library does not use: cofactor determinants, semigroup-based
// characteristic polynomials, floating-point root-of-unity sums, brute-force
// cycle enumeration.
#pragma once

#include <complex>
#include <random>

#include "plink/branch.hpp"
#include "plink/matrix.hpp"
#include "plink/plumbing.hpp"
#include "plink/superisolated.hpp"

namespace plink::testing {

/// Determinant by cofactor expansion; exponential, keep n small.
Int cofactor_det(const IntMatrix& m);

/// Closed form (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) for a one-pair cusp.
IntPolynomial one_pair_alexander(long long p, long long q);

/// Semigroup generators of the branch from its Newton pairs.
std::vector<long long> branch_semigroup_generators(const PlaneBranch& b);

/// Characteristic polynomial through the semigroup route:
/// (1-t) sum_{s in S, s < c} t^s + t^c with conductor c = 2 delta.
IntPolynomial semigroup_alexander(const PlaneBranch& b);

std::complex<long double> eval_complex(const IntPolynomial& p, std::complex<long double> z);

/// Direct summation of the torsion over the nontrivial d-th roots of unity.
std::complex<long double> torsion_shadow(const SISInput& input);

/// Direct summation of sum 1/(xi-1) and sum 1/(xi-1)^2.
std::complex<long double> s1_shadow(int d);
std::complex<long double> s2_shadow(int d);

/// Random labeled tree on n vertices with euler numbers in [emin, emax].
PlumbingGraph random_tree(std::mt19937& rng, int n, long long emin, long long emax);

/// Random tree that is negative definite by diagonal dominance.
PlumbingGraph random_negdef_tree(std::mt19937& rng, int n);

/// Checks by enumeration that no nonzero effective cycle strictly below z is
/// anti-nef. Returns false if the box is larger than `cap` candidates
/// (caller should skip), throws internal_error on an actual counterexample.
bool minimal_cycle_minimality_brute(const PlumbingGraph& g, const std::vector<Int>& z,
                                    unsigned long long cap);

}  // namespace plink::testing
