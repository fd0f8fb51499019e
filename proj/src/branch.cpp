#include "plink/branch.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace plink {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& why) {
  throw validation_error("cusp notation \"" + std::string(text) + "\": " + why +
                         " at position " + std::to_string(pos));
}

int read_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) parse_fail(text, pos, "expected a number");
  int value = 0;
  for (std::size_t i = start; i < pos; ++i) {
    value = value * 10 + (text[i] - '0');
    if (value > 1'000'000) parse_fail(text, start, "number too large");
  }
  return value;
}

}  // namespace

MultiplicitySequence MultiplicitySequence::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') parse_fail(text, pos, "expected '['");
  ++pos;
  std::vector<std::pair<int, int>> items;
  while (true) {
    skip_ws();
    int value = read_int(text, pos);
    int repeat = 1;
    if (pos < text.size() && text[pos] == '_') {
      ++pos;
      repeat = read_int(text, pos);
    }
    if (value < 2) parse_fail(text, pos, "multiplicities must be >= 2");
    if (repeat < 1) parse_fail(text, pos, "repeat count must be >= 1");
    if (!items.empty() && value > items.back().first)
      parse_fail(text, pos, "multiplicities must be non-increasing");
    if (!items.empty() && value == items.back().first)
      items.back().second += repeat;
    else
      items.emplace_back(value, repeat);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= text.size() || text[pos] != ']') parse_fail(text, pos, "expected ']'");
  ++pos;
  skip_ws();
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");

  MultiplicitySequence seq;
  seq.compressed = std::move(items);
  for (const auto& [v, r] : seq.compressed) seq.expanded.insert(seq.expanded.end(), r, v);
  // The number of trailing ones equals the last multiplicity greater than 1.
  seq.expanded.insert(seq.expanded.end(), seq.compressed.back().first, 1);
  return seq;
}

MultiplicitySequence MultiplicitySequence::from_expanded(std::vector<int> expanded) {
  MultiplicitySequence seq;
  std::size_t cut = expanded.size();
  while (cut > 0 && expanded[cut - 1] == 1) --cut;
  if (cut == 0) throw validation_error("multiplicity sequence has no entry >= 2");
  for (std::size_t i = 0; i < cut; ++i) {
    int v = expanded[i];
    if (v < 2 || (i > 0 && v > expanded[i - 1]))
      throw validation_error("expanded multiplicity sequence is not non-increasing");
    if (!seq.compressed.empty() && seq.compressed.back().first == v)
      seq.compressed.back().second += 1;
    else
      seq.compressed.emplace_back(v, 1);
  }
  if (static_cast<int>(expanded.size() - cut) != expanded[cut - 1])
    throw validation_error("trailing ones do not match the last multiplicity > 1");
  seq.expanded = std::move(expanded);
  return seq;
}

std::string MultiplicitySequence::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < compressed.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(compressed[i].first);
    if (compressed[i].second > 1) out += "_" + std::to_string(compressed[i].second);
  }
  return out + "]";
}

std::vector<std::vector<int>> proximity(const MultiplicitySequence& seq) {
  const auto& m = seq.expanded;
  const std::size_t n = m.size();
  std::vector<std::vector<int>> prox(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    long long target = m[i], acc = 0;
    std::size_t j = i + 1;
    for (; j < n && acc < target; ++j) {
      acc += m[j];
      prox[j].push_back(static_cast<int>(i));
    }
    if (acc != target)
      throw validation_error("invalid multiplicity sequence " + seq.str() +
                             ": no exact proximity run for entry " + std::to_string(i));
  }
  for (std::size_t j = 1; j < n; ++j) {
    // A point sits on at most two exceptional curves.
    if (prox[j].size() > 2)
      throw validation_error("invalid multiplicity sequence " + seq.str() +
                             ": point " + std::to_string(j) + " proximate to " +
                             std::to_string(prox[j].size()) + " points");
  }
  return prox;
}

namespace {

EmbeddedResolution build_resolution(const MultiplicitySequence& seq,
                                    const std::vector<std::vector<int>>& prox) {
  const auto& m = seq.expanded;
  const int n = static_cast<int>(m.size());

  EmbeddedResolution res;
  std::set<std::pair<int, int>> edges;
  auto edge_key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  // Blowup simulation. A free point sits on one exceptional curve, a
  // satellite point on the intersection of two; blowing it up separates them.
  for (int i = 1; i < n; ++i) {
    if (prox[i].size() == 1) {
      edges.insert(edge_key(i, prox[i][0]));
    } else {
      int a = prox[i][0], b = prox[i][1];
      if (!edges.erase(edge_key(a, b)))
        throw validation_error("invalid multiplicity sequence " + seq.str() +
                               ": satellite point " + std::to_string(i) +
                               " on non-intersecting curves");
      edges.insert(edge_key(i, a));
      edges.insert(edge_key(i, b));
    }
  }

  std::vector<int> proximate_count(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i : prox[j]) ++proximate_count[i];

  for (int i = 0; i < n; ++i)
    res.graph.add_vertex_with_id(i, -1 - static_cast<long long>(proximate_count[i]));
  for (const auto& [a, b] : edges) res.graph.add_edge(a, b);

  res.total_multiplicity.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    long long total = m[i];
    for (int j : prox[i]) total += res.total_multiplicity[j];
    res.total_multiplicity[i] = total;
  }
  res.arrow = n - 1;

  if (res.graph.vertex(res.arrow).euler != -1)
    throw internal_error("embedded resolution: last curve is not a (-1)-curve");
  return res;
}

struct RunCursor {
  const std::vector<std::pair<long long, long long>>* runs;  // (value, count)
  std::size_t run = 0;
  long long left = 0;

  bool done() const { return run >= runs->size(); }
  long long value() const { return (*runs)[run].first; }
  void normalize() {
    while (run < runs->size() && left == 0) {
      ++run;
      left = run < runs->size() ? (*runs)[run].second : 0;
    }
  }
  void consume(long long count, long long expect, const MultiplicitySequence& seq) {
    while (count > 0) {
      normalize();
      if (done() || value() != expect)
        throw validation_error("multiplicity sequence " + seq.str() +
                               " is not a chain of Euclidean runs");
      long long take = std::min(count, left);
      left -= take;
      count -= take;
    }
    normalize();
  }
};

// The multiplicity sequence is the concatenation of the subtractive
// Euclidean chains of (q_k e_k, p_k e_k), one block per Newton pair, with
// adjacent equal-value runs merged. Each block's leading dividend is
// recoverable from the run structure, which makes the scan deterministic.
std::vector<std::pair<long long, long long>> reconstruct_newton_pairs(
    const MultiplicitySequence& seq) {
  std::vector<std::pair<long long, long long>> runs;
  for (int v : seq.expanded) {
    if (!runs.empty() && runs.back().first == v)
      runs.back().second += 1;
    else
      runs.emplace_back(v, 1);
  }

  RunCursor cur{&runs, 0, runs[0].second};
  std::vector<std::pair<long long, long long>> pairs;
  long long modulus = seq.expanded[0];  // block divisor: m_0, then gcd of the previous block

  while (!cur.done()) {
    long long dividend;
    if (cur.value() == modulus) {
      // Leading copies of the divisor, then the first remainder.
      long long copies = cur.left;
      if (cur.run + 1 >= runs.size())
        throw validation_error("multiplicity sequence " + seq.str() +
                               ": Euclidean chain ends prematurely");
      dividend = copies * modulus + runs[cur.run + 1].first;
    } else {
      dividend = cur.value();  // dividend smaller than the divisor
    }

    long long x = std::max(dividend, modulus), y = std::min(dividend, modulus);
    long long g;
    while (true) {
      long long q = x / y, r = x % y;
      cur.consume(q, y, seq);
      if (r == 0) {
        g = y;
        break;
      }
      x = y;
      y = r;
    }
    pairs.emplace_back(modulus / g, dividend / g);
    modulus = g;
  }
  if (modulus != 1)
    throw validation_error("multiplicity sequence " + seq.str() +
                           ": Euclidean chains do not terminate at 1");
  return pairs;
}

}  // namespace

PlaneBranch PlaneBranch::from_sequence(const MultiplicitySequence& seq) {
  PlaneBranch b;
  b.seq = seq;
  b.prox = proximity(seq);
  b.resolution = build_resolution(seq, b.prox);
  for (int m : seq.expanded) b.delta += static_cast<long long>(m) * (m - 1) / 2;
  b.milnor = 2 * b.delta;
  b.newton_pairs = reconstruct_newton_pairs(seq);
  return b;
}

PlaneBranch PlaneBranch::parse(std::string_view text) {
  return from_sequence(MultiplicitySequence::parse(text));
}

IntPolynomial alexander(const PlaneBranch& b) {
  const auto& g = b.resolution.graph;
  IntPolynomial num{Int(1), Int(-1)};  // the (1 - t) prefactor
  IntPolynomial den = IntPolynomial::one();
  for (const auto& v : g.vertices()) {
    long long chi = 2 - static_cast<long long>(g.valence(v.id)) - (v.id == b.resolution.arrow ? 1 : 0);
    if (chi == 0) continue;
    std::size_t m = static_cast<std::size_t>(b.resolution.total_multiplicity[v.id]);
    IntPolynomial factor = IntPolynomial::one() - IntPolynomial::monomial(Int(1), m);
    for (long long k = 0; k < std::abs(chi); ++k) {
      if (chi < 0)
        num = num * factor;
      else
        den = den * factor;
    }
  }
  IntPolynomial delta = num.exact_div(den);
  if (delta.degree() != b.milnor || delta.at_one() != 1)
    throw internal_error("alexander: resolution product failed normalization for " + b.seq.str());
  return delta;
}

std::vector<int> expand_newton_pairs(const std::vector<std::pair<long long, long long>>& pairs) {
  if (pairs.empty()) throw validation_error("expand_newton_pairs: empty pair list");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [p, q] = pairs[k];
    if (p < 2 || q < 1 || std::gcd(p, q) != 1 || (k == 0 && q <= p))
      throw validation_error("invalid Newton pair (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
  }
  std::vector<long long> e(pairs.size() + 1, 1);
  for (std::size_t k = pairs.size(); k-- > 0;) e[k] = e[k + 1] * pairs[k].first;

  std::vector<int> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    long long a = pairs[k].second * e[k + 1];  // q_k e_k
    long long b = pairs[k].first * e[k + 1];   // p_k e_k = e_{k-1}
    long long x = std::max(a, b), y = std::min(a, b);
    while (true) {
      long long q = x / y, r = x % y;
      out.insert(out.end(), static_cast<std::size_t>(q), static_cast<int>(y));
      if (r == 0) break;
      x = y;
      y = r;
    }
  }
  return out;
}

}  // namespace plink
