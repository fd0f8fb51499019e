// plink: exact invariants of plumbed 3-manifolds and superisolated
// hypersurface singularity links.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "plink/fixtures.hpp"
#include "plink/graph_io.hpp"
#include "plink/seifert.hpp"
#include "plink/splice.hpp"
#include "plink/superisolated.hpp"

namespace {

using namespace plink;
using nlohmann::json;

// Accepts a path to a JSON/DOT graph file, or the name of a bundled
// fixture (with or without a .json suffix).
PlumbingGraph cli_load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_graph_file(arg);
  std::string name = arg;
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  for (const auto& f : all_fixtures())
    if (f.name == name) return f.graph;
  throw validation_error("no such file or fixture: " + arg);
}

json report_to_json(const InvariantReport& rep) {
  json coeffs = json::array();
  for (const auto& c : rep.delta_f.coeffs()) coeffs.push_back(c.str());
  json cusps = json::array();
  for (const auto& c : rep.input.cusps) cusps.push_back(c.str());
  return {{"d", rep.input.d},
          {"cusps", cusps},
          {"h_order", rep.h_order.str()},
          {"k2s", rational_str(rep.k2s)},
          {"mu", rep.mu.str()},
          {"pg", rep.pg.str()},
          {"delta_f", {{"degree", rep.delta_f.degree()}, {"coefficients", coeffs}}},
          {"lambda", rational_str(rep.lambda)},
          {"torsion", rational_str(rep.torsion)},
          {"sw", rational_str(rep.sw)},
          {"swc_rhs", rational_str(rep.swc_rhs)},
          {"swc_rhs_integral", rep.swc_rhs_integral},
          {"swc_holds", rep.swc_holds},
          {"graph", graph_to_json(rep.graph)}};
}

void print_report(const InvariantReport& rep) {
  std::cout << "d               = " << rep.input.d << "\n"
            << "cusps           = " << rep.input.cusp_str() << "\n"
            << "|H|             = " << rep.h_order << "\n"
            << "K^2+s           = " << rational_str(rep.k2s) << "\n"
            << "mu              = " << rep.mu << "\n"
            << "p_g             = " << rep.pg << "\n"
            << "deg Delta_f     = " << rep.delta_f.degree() << "\n"
            << "lambda          = " << rational_str(rep.lambda) << "\n"
            << "torsion         = " << rational_str(rep.torsion) << "\n"
            << "sw              = " << rational_str(rep.sw) << "\n"
            << "sw - (K^2+s)/8  = " << rational_str(rep.swc_rhs) << "\n"
            << "SWC             = " << (rep.swc_holds ? "TRUE" : "FALSE");
  if (!rep.swc_holds)
    std::cout << " (p_g = " << rep.pg << " vs " << rational_str(rep.swc_rhs) << ")";
  std::cout << "\n";
  if (!rep.swc_rhs_integral)
    std::cout << "warning: sw - (K^2+s)/8 is not an integer\n";
}

json verdict_to_json(const SemigroupVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures) {
    json gens = json::array();
    for (const auto& g : f.generators) gens.push_back(g.str());
    failures.push_back({{"node", f.node},
                        {"toward", f.toward},
                        {"weight", f.weight.str()},
                        {"generators", gens}});
  }
  return {{"passes", v.passes}, {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of plumbed 3-manifolds and superisolated singularity links"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- sis ---
  auto* sis = app.add_subcommand("sis", "Superisolated singularity computations");
  sis->require_subcommand(1);
  {
    auto* cmd = sis->add_subcommand("report", "Full invariant report for one (d, cusp list)");
    auto d = std::make_shared<int>(0);
    auto cusps = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--d", *d, "degree of the tangent cone curve")->required();
    cmd->add_option("--cusps", *cusps, "cusp list, e.g. \"[3],[2_3]\"")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");
    cmd->callback([=] {
      InvariantReport rep = sw_verdict(SISInput::parse(*d, *cusps));
      if (*as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
      else
        print_report(rep);
    });
  }
  {
    auto* cmd = sis->add_subcommand("table", "Verdict table over the bundled catalog");
    auto d = std::make_shared<int>(0);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--d", *d, "degree (4, 5 or 6)")->required();
    cmd->add_flag("--json", *as_json);
    cmd->callback([=] {
      auto rows = table(*d);
      if (*as_json) {
        json out = json::array();
        for (const auto& r : rows)
          out.push_back({{"label", r.label}, {"cusps", r.cusps}, {"report", report_to_json(r.report)}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << format_table(rows);
      }
    });
  }

  // --- plumbing ---
  auto* plumbing = app.add_subcommand("plumbing", "Plumbing graph computations");
  plumbing->require_subcommand(1);
  auto graph_arg = std::make_shared<std::string>();
  auto add_graph_cmd = [&](const char* name, const char* help, auto action) {
    auto* cmd = plumbing->add_subcommand(name, help);
    cmd->add_option("--graph", *graph_arg, "graph file (JSON or DOT) or fixture name")->required();
    cmd->callback([=] { action(cli_load_graph(*graph_arg)); });
    return cmd;
  };
  add_graph_cmd("det", "Graph determinant det(-M)",
                [](const PlumbingGraph& g) { std::cout << graph_determinant(g) << "\n"; });
  add_graph_cmd("homology", "H1 of the plumbed manifold", [](const PlumbingGraph& g) {
    AbelianGroup h = homology(g);
    auto nt = h.nontrivial();
    std::cout << "invariant factors:";
    if (nt.empty()) std::cout << " (trivial)";
    for (const auto& f : nt) std::cout << " " << f;
    std::cout << "\norder: " << h.order << "\n";
  });
  add_graph_cmd("k2s", "Canonical cycle and K^2+s", [](const PlumbingGraph& g) {
    CanonicalResult r = canonical_k2s(g);
    std::cout << "K^2+s = " << rational_str(r.k2s) << "\nK =";
    for (std::size_t i = 0; i < r.k.ids.size(); ++i)
      std::cout << " " << r.k.ids[i] << ":" << rational_str(r.k.coeffs[i]);
    std::cout << "\n";
  });
  add_graph_cmd("zmin", "Minimal (Artin) cycle", [](const PlumbingGraph& g) {
    IntegerCycle z = minimal_cycle(g);
    std::cout << "Z =";
    for (std::size_t i = 0; i < z.ids.size(); ++i)
      std::cout << " " << z.ids[i] << ":" << z.coeffs[i];
    auto pairing = cycle_pairing(g, z.coeffs);
    std::cout << "\nZ.E =";
    for (const auto& p : pairing) std::cout << " " << p;
    std::cout << "\n";
  });
  add_graph_cmd("minimize", "Blow down to the minimal graph (JSON out)",
                [](const PlumbingGraph& g) { std::cout << graph_to_json(minimize(g)).dump(2) << "\n"; });
  add_graph_cmd("seifert", "Seifert data of a star-shaped graph", [](const PlumbingGraph& g) {
    SeifertData s = star_shape(g);
    std::cout << "b = " << s.b << "\nlegs =";
    for (const auto& leg : s.legs) std::cout << " (" << leg.alpha << "," << leg.beta << ")";
    std::cout << "\ne = " << rational_str(s.e()) << "\n";
  });
  add_graph_cmd("dot", "DOT export",
                [](const PlumbingGraph& g) { std::cout << graph_to_dot(g); });

  // --- splice ---
  auto* splice = app.add_subcommand("splice", "Splice diagrams and the semigroup condition");
  splice->require_subcommand(1);
  {
    auto* cmd = splice->add_subcommand("check", "Semigroup condition of a plumbing tree");
    auto file = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--graph", *file, "graph file (JSON or DOT) or fixture name")->required();
    cmd->add_flag("--json", *as_json);
    cmd->callback([=] {
      SemigroupVerdict v = semigroup_condition(splice_diagram(cli_load_graph(*file)));
      if (*as_json) {
        std::cout << verdict_to_json(v).dump(2) << "\n";
      } else if (v.passes) {
        std::cout << "semigroup condition: PASS\n";
      } else {
        std::cout << "semigroup condition: FAIL\n";
        for (const auto& f : v.failures) {
          std::cout << "  node " << f.node << " toward " << f.toward << ": weight " << f.weight
                    << " not in semigroup of {";
          for (std::size_t i = 0; i < f.generators.size(); ++i)
            std::cout << (i ? "," : "") << f.generators[i];
          std::cout << "}\n";
        }
      }
    });
  }

  // --- brieskorn ---
  auto* brieskorn = app.add_subcommand("brieskorn", "Brieskorn link Sigma(a1,a2,a3)");
  brieskorn->require_subcommand(1);
  auto exponents = std::make_shared<std::vector<std::string>>();
  auto parse_triple = [exponents] {
    return BrieskornTriple{Int(exponents->at(0)), Int(exponents->at(1)), Int(exponents->at(2))};
  };
  auto add_brieskorn_cmd = [&](const char* name, const char* help, auto action) {
    auto* cmd = brieskorn->add_subcommand(name, help);
    cmd->add_option("exponents", *exponents, "a1 a2 a3")->expected(3);
    cmd->callback([=] { action(parse_triple()); });
  };
  add_brieskorn_cmd("graph", "Plumbing graph (JSON out)", [](const BrieskornTriple& t) {
    std::cout << graph_to_json(brieskorn_graph(t)).dump(2) << "\n";
  });
  add_brieskorn_cmd("pg", "Geometric genus (lattice count)",
                    [](const BrieskornTriple& t) { std::cout << brieskorn_pg(t) << "\n"; });
  add_brieskorn_cmd("mu", "Milnor number",
                    [](const BrieskornTriple& t) { std::cout << brieskorn_mu(t) << "\n"; });

  // --- seifert ---
  auto* seifert = app.add_subcommand("seifert", "Star-shaped graph computations");
  seifert->require_subcommand(1);
  {
    auto* cmd = seifert->add_subcommand("pg", "Geometric genus of the weighted homogeneous singularity");
    auto file = std::make_shared<std::string>();
    cmd->add_option("--graph", *file, "graph file (JSON or DOT) or fixture name")->required();
    cmd->callback([=] { std::cout << pinkham_pg(star_shape(cli_load_graph(*file))) << "\n"; });
  }

  // --- uac ---
  {
    auto* cmd = app.add_subcommand("uac", "Universal abelian cover of a one-cusp superisolated link");
    auto d = std::make_shared<int>(0);
    auto cusp = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--d", *d, "degree")->required();
    cmd->add_option("--cusp", *cusp, "the single cusp, e.g. \"[2_3]\"")->required();
    cmd->add_flag("--json", *as_json);
    cmd->callback([=] {
      SISInput input = SISInput::parse(*d, *cusp);
      if (input.cusps.size() != 1) throw validation_error("uac expects exactly one cusp");
      validate(input);
      BrieskornTriple t = uac_brieskorn(*d, PlaneBranch::from_sequence(input.cusps.front()));
      PlumbingGraph g = brieskorn_graph(t);
      AbelianGroup h = homology(g);
      if (*as_json) {
        std::cout << json{{"triple", {t.a1.str(), t.a2.str(), t.a3.str()}},
                          {"h_order", h.order.str()},
                          {"graph", graph_to_json(g)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "Sigma(" << t.a1 << "," << t.a2 << "," << t.a3 << ")\n"
                  << "|H1| = " << h.order << "\n";
      }
    });
  }

  // --- fixtures ---
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Bundled reference graphs");
  fixtures_cmd->require_subcommand(1);
  {
    auto* cmd = fixtures_cmd->add_subcommand("verify", "Check every fixture against its expected values");
    cmd->callback([&exit_code] {
      bool all_ok = true;
      for (const auto& check : verify_fixtures()) {
        bool ok = check.pass;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << check.fixture << "  " << check.key;
        if (!ok) std::cout << "  [" << check.detail << "]";
        std::cout << "\n";
      }
      if (!all_ok) exit_code = 1;
    });
  }
  {
    auto* cmd = fixtures_cmd->add_subcommand("dump", "Write fixture graphs as JSON files");
    auto dir = std::make_shared<std::string>(".");
    cmd->add_option("--dir", *dir, "output directory");
    cmd->callback([=] {
      std::filesystem::create_directories(*dir);
      for (const auto& f : all_fixtures()) {
        auto path = std::filesystem::path(*dir) / (f.name + ".json");
        std::ofstream out(path);
        out << graph_to_json(f.graph).dump(2) << "\n";
        std::cout << path.string() << "\n";
      }
      auto combined = std::filesystem::path(*dir) / "fixtures.json";
      std::ofstream out(combined);
      out << dump_fixtures().dump(2) << "\n";
      std::cout << combined.string() << "\n";
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const plink::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const plink::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
