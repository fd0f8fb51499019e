#include "plink/superisolated.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "plink/catalog_data.hpp"

namespace plink {

SISInput SISInput::parse(int d, std::string_view text) {
  SISInput input;
  input.d = d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '[') throw validation_error("cusp list: expected '[' at position " + std::to_string(pos));
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw validation_error("cusp list: missing ']'");
    input.cusps.push_back(MultiplicitySequence::parse(text.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  if (input.cusps.empty()) throw validation_error("cusp list is empty");
  return input;
}

std::string SISInput::cusp_str() const {
  std::string out;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    if (i) out += ",";
    out += cusps[i].str();
  }
  return out;
}

void validate(const SISInput& input) {
  if (input.d < 3) throw validation_error("degree must be >= 3");
  long long mu_sum = 0;
  for (const auto& seq : input.cusps) {
    PlaneBranch b = PlaneBranch::from_sequence(seq);  // throws if not realizable
    mu_sum += b.milnor;
    if (seq.expanded.front() > input.d - 1)
      throw validation_error("cusp " + seq.str() + " has multiplicity " +
                             std::to_string(seq.expanded.front()) + " > d-1 = " +
                             std::to_string(input.d - 1));
  }
  const long long expected = static_cast<long long>(input.d - 1) * (input.d - 2);
  if (mu_sum != expected)
    throw validation_error("no rational cuspidal curve: sum of Milnor numbers is " +
                           std::to_string(mu_sum) + ", rationality requires (d-1)(d-2) = " +
                           std::to_string(expected));
}

SISGraph build_graph(const SISInput& input) {
  validate(input);
  SISGraph out;
  long long central_euler = -input.d;
  int offset = 0;
  std::vector<std::pair<int, int>> pending_edges;
  for (const auto& seq : input.cusps) {
    PlaneBranch b = PlaneBranch::from_sequence(seq);
    for (const auto& v : b.resolution.graph.vertices())
      out.graph.add_vertex_with_id(v.id + offset, v.euler, v.genus);
    for (const auto& [a, c] : b.resolution.graph.edges())
      pending_edges.emplace_back(a + offset, c + offset);
    out.arrows.push_back(b.resolution.arrow + offset);
    central_euler -= b.arrow_multiplicity();
    offset += static_cast<int>(b.resolution.graph.size());
    out.branches.push_back(std::move(b));
  }
  out.central = offset;
  out.graph.add_vertex_with_id(out.central, central_euler);
  for (const auto& [a, c] : pending_edges) out.graph.add_edge(a, c);
  for (int arrow : out.arrows) out.graph.add_edge(arrow, out.central);
  return out;
}

ClosedForms closed_forms(const SISInput& input) {
  validate(input);
  const Int d(input.d);
  ClosedForms cf;
  cf.k2s = Rational(-d * (d - 2) * (d - 2) + 1);
  cf.mu = (d - 1) * (d - 1) * (d - 1) + (d - 1) * (d - 2);
  cf.pg = d * (d - 1) * (d - 2) / 6;
  cf.h_order = d;

  SISGraph built = build_graph(input);
  if (canonical_k2s(built.graph).k2s != cf.k2s)
    throw internal_error("closed_forms: K^2+s disagrees with the graph value");
  AbelianGroup h = homology(built.graph);
  if (h.order != cf.h_order)
    throw internal_error("closed_forms: |H| disagrees with the graph value");
  return cf;
}

IntPolynomial char_poly(const SISInput& input) {
  validate(input);
  // (t^d - 1)/(t - 1) = 1 + t + ... + t^{d-1}
  IntPolynomial result(std::vector<Int>(input.d, Int(1)));
  for (const auto& seq : input.cusps) {
    PlaneBranch b = PlaneBranch::from_sequence(seq);
    result = result * alexander(b).compose_power(static_cast<std::size_t>(input.d) + 1);
  }
  if (result.at_one() != input.d)
    throw internal_error("char_poly: Delta_f(1) != d");
  return result;
}

Rational casson_walker(const SISInput& input) {
  validate(input);
  IntPolynomial product = IntPolynomial::one();
  Int delta_total = 0;
  Int second_derivative_sum = 0;  // sum of the symmetrized Dbar_i''(1)
  for (const auto& seq : input.cusps) {
    PlaneBranch b = PlaneBranch::from_sequence(seq);
    IntPolynomial a = alexander(b);
    product = product * a;
    delta_total += b.delta;
    Int di(b.delta);
    second_derivative_sum += di * (di + 1) - 2 * di * a.derivative().at_one() +
                             a.derivative().derivative().at_one();
  }
  // Dbar(t) = t^{-delta} P(t) with P(1) = 1, so
  // Dbar''(1) = delta(delta+1) - 2 delta P'(1) + P''(1).
  Int p1 = product.derivative().at_one();
  Int p2 = product.derivative().derivative().at_one();
  Int dbar2 = delta_total * (delta_total + 1) - 2 * delta_total * p1 + p2;
  if (dbar2 != second_derivative_sum)
    throw internal_error("casson_walker: per-cusp second derivatives disagree with the product");

  const Int d(input.d);
  return make_rational(-dbar2, 2) + make_rational((d - 1) * (d - 2), 24);
}

Rational s1_sum(int d) { return make_rational(-Int(d - 1), 2); }

Rational s2_sum(int d) { return make_rational(-Int(d - 1) * (d - 5), 12); }

Rational torsion(const SISInput& input) {
  validate(input);
  const int d = input.d;
  IntPolynomial product = IntPolynomial::one();
  for (const auto& seq : input.cusps)
    product = product * alexander(PlaneBranch::from_sequence(seq));

  // Only the residue of the product mod t^d - 1 matters at d-th roots of
  // unity. Split off the pole at xi = 1:
  //   P~ = Q (t-1)^2 + a1 (t-1) + a0,  a0 = P~(1) = 1.
  IntPolynomial reduced = product.reduce_mod_power_minus_one(static_cast<std::size_t>(d));
  IntPolynomial t_minus_1{Int(-1), Int(1)};
  auto [q1, a0] = reduced.divrem(t_minus_1);
  auto [q2, a1] = q1.divrem(t_minus_1);
  if (a0.at_one() != 1) throw internal_error("torsion: product does not evaluate to 1 at t = 1");

  // Sum of Q over all nontrivial d-th roots of unity: exponent k contributes
  // d if d | k and 0 otherwise, minus the value at 1. deg Q < d-2, so only
  // the constant coefficient survives the first part.
  Int q_sum = Int(d) * q2.coeff(0) - q2.at_one();
  Rational total = Rational(q_sum) + Rational(a1.at_one()) * s1_sum(d) + s2_sum(d);
  return total / d;
}

InvariantReport sw_verdict(const SISInput& input) {
  InvariantReport rep;
  rep.input = input;
  SISGraph built = build_graph(input);
  rep.graph = built.graph;
  ClosedForms cf = closed_forms(input);
  rep.h_order = cf.h_order;
  rep.k2s = cf.k2s;
  rep.mu = cf.mu;
  rep.pg = cf.pg;
  rep.delta_f = char_poly(input);
  if (rep.delta_f.degree() != rep.mu)
    throw internal_error("sw_verdict: deg Delta_f != mu");
  rep.lambda = casson_walker(input);
  rep.torsion = torsion(input);
  rep.sw = -rep.lambda / Rational(rep.h_order) + rep.torsion;
  rep.swc_rhs = rep.sw - rep.k2s / 8;
  rep.swc_rhs_integral = is_integer(rep.swc_rhs);
  rep.swc_holds = rep.swc_rhs == Rational(rep.pg);
  return rep;
}

std::vector<CatalogEntry> catalog(int d) {
  auto data = nlohmann::json::parse(detail::kCatalogJson);
  const std::string key = std::to_string(d);
  if (!data.contains(key))
    throw validation_error("no bundled catalog for degree " + key + " (have 4, 5, 6)");
  std::vector<CatalogEntry> out;
  for (const auto& row : data[key]) {
    CatalogEntry entry;
    entry.label = row["label"].get<std::string>();
    entry.input.d = d;
    for (const auto& cusp : row["cusps"])
      entry.input.cusps.push_back(MultiplicitySequence::parse(cusp.get<std::string>()));
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<TableRow> table(int d) {
  std::vector<CatalogEntry> entries = catalog(d);
  std::vector<TableRow> rows(entries.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    try {
      rows[i].label = entries[i].label;
      rows[i].cusps = entries[i].input.cusp_str();
      rows[i].report = sw_verdict(entries[i].input);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
  std::size_t label_w = 5, cusp_w = 10;
  for (const auto& r : rows) {
    label_w = std::max(label_w, r.label.size());
    cusp_w = std::max(cusp_w, r.cusps.size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.label << std::string(label_w - r.label.size() + 2, ' ');
    os << r.cusps << std::string(cusp_w - r.cusps.size() + 2, ' ');
    if (r.report.swc_holds)
      os << "True";
    else
      os << "False (" << rational_str(r.report.swc_rhs) << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace plink
