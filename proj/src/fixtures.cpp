#include "plink/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "plink/graph_io.hpp"
#include "plink/seifert.hpp"
#include "plink/splice.hpp"
#include "plink/superisolated.hpp"

namespace plink {

namespace {

nlohmann::json exp_entry(nlohmann::json value, const std::string& ref) {
  return {{"value", std::move(value)}, {"ref", ref}};
}

PlumbingGraph with_leg(PlumbingGraph g, int at, const std::vector<long long>& leg) {
  int next = 0;
  for (const auto& v : g.vertices()) next = std::max(next, v.id + 1);
  int prev = at;
  for (long long e : leg) {
    g.add_vertex_with_id(next, e);
    g.add_edge(prev, next);
    prev = next++;
  }
  return g;
}

nlohmann::json star_json(const char* b, std::initializer_list<std::pair<const char*, const char*>> legs,
                         const char* e) {
  nlohmann::json legs_json = nlohmann::json::array();
  for (const auto& [alpha, beta] : legs) legs_json.push_back({alpha, beta});
  nlohmann::json out = {{"b", b}, {"legs", legs_json}};
  if (e) out["e"] = e;
  return out;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;

  {
    Fixture f;
    f.name = "sec4.4-gamma";
    f.ref = "sec4.4";
    f.graph = with_leg(chain_graph({-2, -2, -3, -1, -18}), 3, {-2});
    f.expected["h_nontrivial"] = exp_entry({"4"}, "sec4.4");
    f.expected["k2s"] = exp_entry("-15", "sec2.3 closed form, d=4");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["minimal"] = exp_entry(true, "sec4.4");
    f.expected["star"] = exp_entry(star_json("1", {{"18", "1"}, {"2", "1"}, {"7", "3"}}, "-1/63"),
                                   "derived from the sec4.4 figure");
    f.expected["pinkham_pg"] = exp_entry("4", "sec4.4");
    f.expected["sis"] = exp_entry({{"d", 4}, {"cusps", "[2_3]"}}, "sec4.4");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec4.4-gamma-ab";
    f.ref = "sec4.4";
    f.graph = with_leg(with_leg(chain_graph({-3, -2, -2, -2, -2, -2, -3}), 3, {-2}), 7, {-5});
    f.expected["h_nontrivial"] = exp_entry({"7"}, "sec4.4");
    f.expected["k2s"] = exp_entry("-18", "sec4.4");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["minimal"] = exp_entry(true, "sec4.4");
    f.expected["star"] = exp_entry(star_json("2", {{"7", "5"}, {"7", "5"}, {"9", "5"}}, nullptr),
                                   "derived from the sec4.4 figure");
    f.expected["pinkham_pg"] = exp_entry("10", "sec4.4 (Laufer from mu = 102, K^2+s = -18)");
    f.expected["brieskorn"] = exp_entry({"7", "18", "2"}, "sec4.4");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec4.5-gamma";
    f.ref = "sec4.5";
    f.graph = with_leg(chain_graph({-2, -2, -2, -2, -2, -3, -1, -31}), 6, {-2});
    f.expected["h_nontrivial"] = exp_entry({"5"}, "sec2.3, d=5");
    f.expected["k2s"] = exp_entry("-44", "sec4.1");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["minimal"] = exp_entry(true, "sec4.5");
    f.expected["star"] = exp_entry(star_json("1", {{"31", "1"}, {"2", "1"}, {"13", "6"}}, "-5/806"),
                                   "derived from the sec4.5 figure");
    f.expected["pinkham_pg"] = exp_entry("10", "sec4.5");
    f.expected["sis"] = exp_entry({{"d", 5}, {"cusps", "[2_6]"}}, "sec4.5");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec4.5-gamma-ab";
    f.ref = "sec4.5";
    f.graph = with_leg(chain_graph({-7, -2, -2, -2, -2, -2, -2, -2, -5}), 5, {-2});
    f.expected["det"] = exp_entry("1", "sec4.5: integral homology sphere");
    f.expected["h_nontrivial"] = exp_entry(nlohmann::json::array(), "sec4.5");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["star"] = exp_entry(star_json("2", {{"13", "9"}, {"31", "25"}, {"2", "1"}}, nullptr),
                                   "derived from the sec4.5 figure");
    f.expected["k2s"] = exp_entry("-120", "derived");
    f.expected["pinkham_pg"] = exp_entry("40", "derived");
    f.expected["brieskorn"] = exp_entry({"13", "31", "2"}, "sec4.5");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec4.2-suspension";
    f.ref = "sec4.2";
    PlumbingGraph g;
    g.add_vertex_with_id(0, -3);
    g.add_vertex_with_id(1, -3);
    g.add_edge(0, 1);
    for (int i = 2; i <= 6; ++i) {
      g.add_vertex_with_id(i, -6);
      g.add_edge(0, i);
    }
    for (int i = 7; i <= 11; ++i) {
      g.add_vertex_with_id(i, -2);
      g.add_edge(1, i);
    }
    f.graph = std::move(g);
    f.expected["h_nontrivial"] =
        exp_entry({"2", "2", "2", "2", "6", "6", "6", "6"}, "sec4.2: H = Z_6^4 + Z_2^4");
    f.expected["k2s"] = exp_entry("-244", "sec4.2");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec4.3-suspension";
    f.ref = "sec4.3";
    f.graph = with_leg(with_leg(chain_graph({-2, -2, -2, -2, -2, -2, -2, -4, -2}), 2, {-2}), 7, {-2});
    f.expected["h_nontrivial"] = exp_entry({"4"}, "sec4.3: first homology Z_4");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["semigroup_passes"] = exp_entry(false, "sec4.3");
    f.expected["semigroup_witness"] =
        exp_entry({{"weight", "1"}, {"generators", {"2", "3"}}},
                  "sec4.3: the E8 subgraph has determinant 1");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec5.2-uac";
    f.ref = "sec5.2";
    PlumbingGraph g;
    g.add_vertex_with_id(0, -10);
    // Three E8 pieces, attached to the hub at the far end of the long arm.
    for (int k = 0; k < 3; ++k) {
      int base = 1 + 8 * k;
      for (int i = 0; i < 8; ++i) g.add_vertex_with_id(base + i, -2);
      int branch = base;  // arms of lengths 1, 2, 4
      g.add_edge(branch, base + 1);
      g.add_edge(branch, base + 2);
      g.add_edge(base + 2, base + 3);
      g.add_edge(branch, base + 4);
      g.add_edge(base + 4, base + 5);
      g.add_edge(base + 5, base + 6);
      g.add_edge(base + 6, base + 7);
      g.add_edge(0, base + 7);
    }
    // The suspension piece of the (2,7)-cusp: -1 center with legs -2, [-4,-2], -5.
    g.add_vertex_with_id(25, -1);
    g.add_vertex_with_id(26, -2);
    g.add_vertex_with_id(27, -4);
    g.add_vertex_with_id(28, -2);
    g.add_vertex_with_id(29, -5);
    g.add_edge(25, 26);
    g.add_edge(25, 27);
    g.add_edge(27, 28);
    g.add_edge(25, 29);
    g.add_edge(0, 29);
    f.graph = std::move(g);
    f.expected["det"] = exp_entry("1", "sec5.2: unimodular");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["semigroup_passes"] = exp_entry(false, "sec5.2");
    out.push_back(std::move(f));
  }
  {
    Fixture f;
    f.name = "sec5.3-ci";
    f.ref = "sec5.3";
    f.graph = with_leg(with_leg(chain_graph({-2, -1, -13, -1, -2}), 1, {-3}), 3, {-3});
    f.expected["det"] = exp_entry("1", "sec5.3: unimodular");
    f.expected["negative_definite"] = exp_entry(true, "derived");
    f.expected["zmin"] = exp_entry({3, 6, 1, 6, 3, 2, 2}, "derived");
    f.expected["zmin_pairing"] = exp_entry({0, 0, -1, 0, 0, 0, 0},
                                           "sec5.3: -1 against the -13 curve, 0 elsewhere");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Int> json_int_list(const nlohmann::json& j) {
  std::vector<Int> out;
  for (const auto& v : j)
    out.push_back(v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long long>()));
  return out;
}

FixtureCheck run_check(const Fixture& f, const std::string& key, const nlohmann::json& value) {
  FixtureCheck c{f.name, key, false, ""};
  auto report = [&](bool ok, const std::string& got, const std::string& want) {
    c.pass = ok;
    c.detail = ok ? got : "got " + got + ", expected " + want;
  };

  if (key == "det") {
    Int got = graph_determinant(f.graph);
    report(got.str() == value.get<std::string>(), got.str(), value.get<std::string>());
  } else if (key == "h_nontrivial") {
    auto got = homology(f.graph).nontrivial();
    auto want = json_int_list(value);
    std::ostringstream os;
    for (const auto& x : got) os << x << " ";
    report(got == want, os.str(), value.dump());
  } else if (key == "k2s") {
    Rational got = canonical_k2s(f.graph).k2s;
    report(rational_str(got) == value.get<std::string>(), rational_str(got),
           value.get<std::string>());
  } else if (key == "negative_definite") {
    bool got = is_negative_definite(f.graph);
    report(got == value.get<bool>(), got ? "true" : "false", value.dump());
  } else if (key == "minimal") {
    bool got = minimize(f.graph).size() == f.graph.size();
    report(got == value.get<bool>(), got ? "true" : "false", value.dump());
  } else if (key == "star") {
    SeifertData got = star_shape(f.graph);
    SeifertData want;
    want.b = Int(value.at("b").get<std::string>());
    for (const auto& leg : value.at("legs"))
      want.legs.push_back({Int(leg[0].get<std::string>()), Int(leg[1].get<std::string>())});
    auto key_fn = [](const SeifertLeg& l) { return std::pair(l.alpha, l.beta); };
    auto sorted = [&](std::vector<SeifertLeg> legs) {
      std::sort(legs.begin(), legs.end(),
                [&](const SeifertLeg& x, const SeifertLeg& y) { return key_fn(x) < key_fn(y); });
      return legs;
    };
    bool ok = got.b == want.b && sorted(got.legs) == sorted(want.legs);
    if (ok && value.contains("e"))
      ok = rational_str(got.e()) == value.at("e").get<std::string>();
    std::ostringstream os;
    os << "b=" << got.b << " legs=";
    for (const auto& l : got.legs) os << "(" << l.alpha << "," << l.beta << ")";
    os << " e=" << rational_str(got.e());
    report(ok, os.str(), value.dump());
  } else if (key == "pinkham_pg") {
    Int got = pinkham_pg(star_shape(f.graph));
    report(got.str() == value.get<std::string>(), got.str(), value.get<std::string>());
  } else if (key == "sis") {
    SISInput input = SISInput::parse(value.at("d").get<int>(), value.at("cusps").get<std::string>());
    bool ok = isomorphic(build_graph(input).graph, f.graph);
    report(ok, ok ? "isomorphic" : "not isomorphic", "isomorphic");
  } else if (key == "brieskorn") {
    auto t = json_int_list(value);
    bool ok = isomorphic(brieskorn_graph({t.at(0), t.at(1), t.at(2)}), f.graph);
    report(ok, ok ? "isomorphic" : "not isomorphic", "isomorphic");
  } else if (key == "semigroup_passes") {
    bool got = semigroup_condition(splice_diagram(f.graph)).passes;
    report(got == value.get<bool>(), got ? "true" : "false", value.dump());
  } else if (key == "semigroup_witness") {
    auto verdict = semigroup_condition(splice_diagram(f.graph));
    Int weight(value.at("weight").get<std::string>());
    auto gens = json_int_list(value.at("generators"));
    std::sort(gens.begin(), gens.end());
    bool ok = false;
    for (const auto& fail : verdict.failures) {
      auto got_gens = fail.generators;
      std::sort(got_gens.begin(), got_gens.end());
      if (fail.weight == weight && got_gens == gens) ok = true;
    }
    report(ok, ok ? "witness found" : "no matching witness", value.dump());
  } else if (key == "zmin") {
    auto got = minimal_cycle(f.graph).coeffs;
    auto want = json_int_list(value);
    std::ostringstream os;
    for (const auto& x : got) os << x << " ";
    report(got == want, os.str(), value.dump());
  } else if (key == "zmin_pairing") {
    auto got = cycle_pairing(f.graph, minimal_cycle(f.graph).coeffs);
    auto want = json_int_list(value);
    std::ostringstream os;
    for (const auto& x : got) os << x << " ";
    report(got == want, os.str(), value.dump());
  } else {
    c.detail = "unknown expectation key";
  }
  return c;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : all_fixtures())
    if (f.name == name) return f;
  throw validation_error("no fixture named \"" + name + "\"");
}

std::vector<FixtureCheck> verify_fixtures() {
  std::vector<FixtureCheck> out;
  for (const auto& f : all_fixtures())
    for (const auto& [key, entry] : f.expected.items()) {
      try {
        out.push_back(run_check(f, key, entry.at("value")));
      } catch (const std::exception& ex) {
        out.push_back({f.name, key, false, std::string("exception: ") + ex.what()});
      }
    }
  return out;
}

nlohmann::json dump_fixtures() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : all_fixtures())
    out.push_back({{"name", f.name},
                   {"ref", f.ref},
                   {"graph", graph_to_json(f.graph)},
                   {"expected", f.expected}});
  return out;
}

}  // namespace plink
