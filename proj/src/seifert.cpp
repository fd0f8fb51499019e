#include "plink/seifert.hpp"

#include <algorithm>
#include <numeric>

namespace plink {

Rational SeifertData::e() const {
  Rational acc(-b);
  for (const auto& leg : legs) acc += make_rational(leg.beta, leg.alpha);
  return acc;
}

std::vector<Int> hirzebruch_jung(Int alpha, Int beta) {
  if (alpha < 2 || beta < 1 || beta >= alpha || gcd(alpha, beta) != 1)
    throw validation_error("continued fraction requires 1 <= beta < alpha coprime");
  std::vector<Int> out;
  while (beta > 0) {
    Int b = ceil_div(alpha, beta);
    out.push_back(b);
    Int next_beta = b * beta - alpha;
    alpha = beta;
    beta = next_beta;
  }
  return out;
}

SeifertData star_shape(const PlumbingGraph& g) {
  if (g.size() == 0) throw validation_error("star_shape: empty graph");
  if (!g.is_tree()) throw validation_error("star_shape: graph is not a tree");
  if (!g.all_genus_zero()) throw validation_error("star_shape: graph has positive genus");

  std::vector<int> hubs;
  for (const auto& v : g.vertices())
    if (g.valence(v.id) >= 3) hubs.push_back(v.id);
  if (hubs.size() > 1) throw validation_error("not star-shaped");
  const int center = hubs.empty() ? g.vertices().front().id : hubs.front();

  SeifertData s;
  s.b = -Int(g.vertex(center).euler);
  if (s.b < 1) throw validation_error("star_shape: central euler number must be negative");

  for (int first : g.neighbors(center)) {
    // Collect the leg chain walking away from the center.
    std::vector<Int> entries;
    int prev = center, cur = first;
    while (true) {
      if (g.vertex(cur).euler > -2) throw validation_error("not minimal: leg entry > -2");
      entries.push_back(-Int(g.vertex(cur).euler));
      auto nbs = g.neighbors(cur);
      nbs.erase(std::remove(nbs.begin(), nbs.end(), prev), nbs.end());
      if (nbs.empty()) break;
      prev = cur;
      cur = nbs.front();
    }
    // alpha/beta = b1 - 1/(b2 - ...), evaluated from the far end inward.
    Int alpha = entries.back(), beta = 1;
    for (std::size_t i = entries.size() - 1; i-- > 0;) {
      Int next_alpha = entries[i] * alpha - beta;
      beta = alpha;
      alpha = next_alpha;
    }
    s.legs.push_back({alpha, beta});
  }
  return s;
}

PlumbingGraph seifert_to_graph(const SeifertData& s) {
  std::vector<std::vector<long long>> legs;
  for (const auto& leg : s.legs) {
    std::vector<long long> chain;
    for (const Int& b : hirzebruch_jung(leg.alpha, leg.beta)) chain.push_back(-to_ll(b));
    legs.push_back(std::move(chain));
  }
  return star_graph(-to_ll(s.b), legs);
}

Int pinkham_pg(const SeifertData& s) {
  Rational e = s.e();
  if (e >= 0) throw validation_error("pinkham_pg: orbifold euler number must be negative");
  const Int nlegs(s.legs.size());
  // Terms with l > (#legs - 1)/|e| are negative; sum up to the ceiling.
  Int bound = nlegs <= 1 ? Int(0) : ceil_div((nlegs - 1) * denominator(e), -numerator(e));
  Int pg = 0;
  for (Int l = 0; l <= bound; ++l) {
    Int term = -1 - l * s.b;
    for (const auto& leg : s.legs) term += ceil_div(l * leg.beta, leg.alpha);
    if (term > 0) pg += term;
  }
  return pg;
}

namespace {

Int mod_inverse(Int a, const Int& m) {
  Int old_r = ((a % m) + m) % m, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw internal_error("mod_inverse: arguments not coprime");
  return ((old_s % m) + m) % m;
}

struct LegClass {
  Int alpha;
  Int count;                     // number of identical legs
  std::vector<Int> candidates;  // admissible beta values
};

}  // namespace

SeifertData brieskorn_seifert(const BrieskornTriple& t) {
  const Int a[3] = {t.a1, t.a2, t.a3};
  for (const Int& ai : a)
    if (ai < 2) throw validation_error("Brieskorn exponents must be >= 2");
  if (gcd(gcd(a[0], a[1]), a[2]) != 1)
    throw validation_error("Brieskorn exponents must have trivial common gcd");

  const Int l = lcm(lcm(a[0], a[1]), a[2]);
  const Rational e = make_rational(-a[0] * a[1] * a[2], l * l);

  // The base of the Seifert fibration must be a sphere; compare the orbifold
  // Euler characteristic computed from the exponents with the one implied by
  // the exceptional-fiber data.
  Rational chi_orb = make_rational(a[1] * a[2] + a[0] * a[2] + a[0] * a[1] - a[0] * a[1] * a[2], l);
  Rational chi_fibers = 2;

  std::vector<LegClass> classes;
  for (int i = 0; i < 3; ++i) {
    const Int &aj = a[(i + 1) % 3], &ak = a[(i + 2) % 3];
    Int alpha = l / lcm(aj, ak);
    if (alpha == 1) continue;
    Int count = gcd(aj, ak);
    Int c = gcd(a[i], aj) * gcd(a[i], ak);
    chi_fibers -= Rational(count) * (1 - make_rational(1, alpha));

    // beta solves (l/alpha) beta = -c (mod alpha); when the congruence is
    // degenerate every lift is kept and the base obstruction below decides.
    Int sigma = (l / alpha) % alpha;
    Int g = gcd(sigma, alpha);
    if (c % g != 0)
      throw validation_error("unsupported triple (positive base genus suspected)");
    Int alpha_red = alpha / g;
    Int beta0 = alpha_red == 1
                    ? Int(0)
                    : (mod_inverse(sigma / g, alpha_red) * (((-c / g) % alpha_red + alpha_red) % alpha_red)) % alpha_red;
    LegClass cls{alpha, count, {}};
    for (Int m = 0; m < g; ++m) {
      Int beta = beta0 + m * alpha_red;
      if (beta >= 1 && beta < alpha && gcd(beta, alpha) == 1) cls.candidates.push_back(beta);
    }
    if (cls.candidates.empty())
      throw validation_error("unsupported triple (positive base genus suspected)");
    classes.push_back(std::move(cls));
  }

  if (chi_orb != chi_fibers)
    throw validation_error("unsupported triple (positive base genus suspected)");

  // Pick the unique candidate combination making b a positive integer.
  std::vector<std::size_t> choice(classes.size(), 0);
  std::vector<std::vector<Int>> solutions;
  while (true) {
    Rational b_rat = -e;
    for (std::size_t i = 0; i < classes.size(); ++i)
      b_rat += Rational(classes[i].count) *
               make_rational(classes[i].candidates[choice[i]], classes[i].alpha);
    if (is_integer(b_rat) && numerator(b_rat) >= 1) {
      std::vector<Int> betas;
      for (std::size_t i = 0; i < classes.size(); ++i) betas.push_back(classes[i].candidates[choice[i]]);
      solutions.push_back(std::move(betas));
    }
    std::size_t i = 0;
    for (; i < classes.size(); ++i) {
      if (++choice[i] < classes[i].candidates.size()) break;
      choice[i] = 0;
    }
    if (i == classes.size()) break;
  }
  if (solutions.size() != 1)
    throw validation_error("unsupported triple (positive base genus suspected)");

  SeifertData s;
  Rational b_rat = -e;
  for (std::size_t i = 0; i < classes.size(); ++i)
    b_rat += Rational(classes[i].count) * make_rational(solutions[0][i], classes[i].alpha);
  s.b = numerator(b_rat);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Int k = 0; k < classes[i].count; ++k)
      s.legs.push_back({classes[i].alpha, solutions[0][i]});

  if (s.e() != e) throw internal_error("brieskorn_seifert: euler number self-check failed");
  return s;
}

PlumbingGraph brieskorn_graph(const BrieskornTriple& t) { return seifert_to_graph(brieskorn_seifert(t)); }

Int brieskorn_mu(const BrieskornTriple& t) { return (t.a1 - 1) * (t.a2 - 1) * (t.a3 - 1); }

Int brieskorn_pg(const BrieskornTriple& t) {
  // #{k > 0 : k1/a1 + k2/a2 + k3/a3 <= 1}, i.e.
  // k1 a2 a3 + k2 a1 a3 + k3 a1 a2 <= a1 a2 a3.
  const Int total = t.a1 * t.a2 * t.a3;
  Int pg = 0;
  for (Int k1 = 1; k1 < t.a1; ++k1)
    for (Int k2 = 1; k2 < t.a2; ++k2) {
      Int slack = total - k1 * t.a2 * t.a3 - k2 * t.a1 * t.a3;
      if (slack <= 0) break;
      Int k3_max = slack / (t.a1 * t.a2);
      if (k3_max >= 1) pg += k3_max;
    }
  return pg;
}

bool laufer_check(const Int& mu, const Int& pg, const Rational& k2s) {
  return Rational(12 * pg) == Rational(mu) - k2s;
}

BrieskornTriple uac_brieskorn(int d, const PlaneBranch& cusp) {
  if (d < 3) throw validation_error("degree must be >= 3");
  if (!cusp.one_pair())
    throw validation_error(
        "unsupported: general universal abelian cover construction out of scope "
        "(cusp has " + std::to_string(cusp.newton_pairs.size()) + " Newton pairs)");
  auto [p, q] = cusp.newton_pairs.front();
  return BrieskornTriple{Int(p), Int(q), Int(p) * q + d};
}

}  // namespace plink
