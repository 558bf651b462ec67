#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "topotutte/expansions.hpp"
#include "topotutte/quasitree.hpp"
#include "topotutte/relative.hpp"
#include "topotutte/rgfile.hpp"
#include "topotutte/verify.hpp"

using namespace topotutte;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

EdgeOrder parse_order(const RibbonGraph& g, const std::string& text) {
  EdgeOrder order;
  for (const auto& name : split_names(text)) order.push_back(g.find_edge(name));
  edge_ranks(order, g.num_edges());  // validates the permutation
  return order;
}

std::string edge_list(const RibbonGraph& g, EdgeSet f) {
  std::string out = "{";
  for (int e : f.indices()) {
    if (out.size() > 1) out += ',';
    out += g.edge(e).name;
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int info(const RibbonGraph& g) {
  const auto m = metrics(g);
  std::cout << "vertices: " << m.v << "\n"
            << "edges: " << m.e << "\n"
            << "components: " << m.k << "\n"
            << "boundary components: " << m.bc << "\n"
            << "s: " << m.s << "\n"
            << "orientable: " << yes_no(m.orientable) << "\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& a = g.attributes(e);
    std::cout << "edge " << g.edge(e).name << ": " << to_string(classify_edge(g, e));
    if (a.zero) std::cout << ", zero";
    if (a.phantom) std::cout << ", phantom";
    if (!a.phantom && g.is_loop(e) && is_separable_loop(g, e)) std::cout << ", separable";
    std::cout << "\n";
  }
  return kExitOk;
}

std::string flag_text(const Chord& c) {
  return std::string(c.internal ? "int" : "ext") + "/" + (c.live ? "live" : "dead") + "/" +
         (c.orientable ? "or" : "nonor");
}

int quasitrees(const RibbonGraph& g, const EdgeOrder& order, const EnumerationOptions& opts) {
  for (const auto& t : butler_terms(g, order, opts)) {
    std::cout << edge_list(g, t.q);
    for (int e = 0; e < g.num_edges(); ++e) std::cout << ' ' << g.edge(e).name << '=' << flag_text(t.diagram.chords[e]);
    std::cout << " : " << t.contribution << "\n";
  }
  return kExitOk;
}

bool suites_fail(const std::string& suite, const RibbonGraph& g, const VerifyOptions& opts) {
  try {
    for (const auto& r : run_suites(suite, g, opts))
      if (!r.ok()) return true;
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

// Deletes edges while the failure persists.
RibbonGraph shrink(const std::string& suite, RibbonGraph g, const VerifyOptions& opts) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < g.num_edges(); ++e) {
      RibbonGraph smaller = delete_edge(g, e);
      if (suites_fail(suite, smaller, opts)) {
        g = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return g;
}

int verify(const std::string& suite, const RibbonGraph& g, const VerifyOptions& opts) {
  bool failed = false;
  for (const auto& r : run_suites(suite, g, opts)) {
    if (r.checks == 0 && r.skipped > 0) {
      std::cout << r.suite << ": skipped (does not apply)\n";
      continue;
    }
    if (r.ok())
      std::cout << r.suite << ": ok (" << r.checks << " checks, " << r.skipped << " skipped)\n";
    else
      std::cout << r.suite << ": FAILED (" << r.failures.size() << " of " << r.checks << " checks)\n";
    for (const auto& line : r.details) std::cout << "  " << line << "\n";
    if (r.ok()) continue;
    if (r.details.empty())
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    failed = true;
  }
  if (!failed) return kExitOk;

  const RibbonGraph small = shrink(suite, g, opts);
  std::cout << "counterexample (" << small.num_edges() << " of " << g.num_edges() << " edges):\n"
            << serialize_rg(small);
  for (const auto& r : run_suites(suite, small, opts))
    if (!r.ok()) std::cout << "# " << r.suite << ": " << r.failures.front() << "\n";
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological Tutte polynomials of ribbon graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string file;
  EnumerationOptions enumeration;
  app.add_flag("--force", enumeration.force, "Allow more than 24 edges");
  app.add_option("--threads", enumeration.threads, "Worker threads for subset sums")->check(CLI::PositiveNumber);

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file")->required(); };

  auto* info_cmd = app.add_subcommand("info", "Metrics and edge classes");
  add_file(info_cmd);

  auto* br_cmd = app.add_subcommand("br", "Bollobas-Riordan polynomial");
  add_file(br_cmd);
  bool signed_flag = false, dichromatic_flag = false, arrow_flag = false;
  std::vector<std::string> godsil;
  auto* o_signed = br_cmd->add_flag("--signed", signed_flag, "Signed version (edges carry sign=+|-)");
  auto* o_godsil = br_cmd->add_option("--godsil-royle", godsil, "Godsil-Royle version with weights alpha beta")
                       ->expected(2);
  auto* o_dichromatic = br_cmd->add_flag("--dichromatic", dichromatic_flag, "Dichromatic version Z(a, b x_e, c)");
  auto* o_arrow = br_cmd->add_flag("--arrow", arrow_flag, "Arrow version");
  o_signed->excludes(o_godsil, o_dichromatic, o_arrow);
  o_godsil->excludes(o_dichromatic, o_arrow);
  o_dichromatic->excludes(o_arrow);

  auto* kr_cmd = app.add_subcommand("krushkal", "Krushkal polynomial");
  add_file(kr_cmd);
  auto* lv_cmd = app.add_subcommand("lv", "Las Vergnas polynomial");
  add_file(lv_cmd);
  auto* rel_cmd = app.add_subcommand("reltutte", "Relative Tutte polynomial of a plane graph with zero edges");
  add_file(rel_cmd);

  auto* qt_cmd = app.add_subcommand("quasitrees", "Quasi-trees, edge flags and Butler contributions");
  add_file(qt_cmd);
  std::string order_text;
  qt_cmd->add_option("--order", order_text, "Edge order, smallest first, as a comma separated list of names");

  auto* dual_cmd = app.add_subcommand("dual", "Geometric dual");
  add_file(dual_cmd);
  auto* pd_cmd = app.add_subcommand("partial-dual", "Partial dual");
  add_file(pd_cmd);
  std::string pd_edges;
  pd_cmd->add_option("-e,--edges", pd_edges, "Comma separated edge names")->required();

  auto* conv_cmd = app.add_subcommand("convert", "Conversions");
  add_file(conv_cmd);
  bool rel_to_ribbon = false;
  conv_cmd->add_flag("--relative-to-ribbon", rel_to_ribbon, "Relative plane graph to ribbon graph")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check polynomial identities on a graph");
  add_file(verify_cmd);
  std::string suite = "all";
  VerifyOptions vopts;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "Identity suite")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--points", vopts.points, "Evaluation points per identity")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopts.seed, "Seed for evaluation points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RibbonGraph g = read_rg_file(file);
    vopts.enumeration = enumeration;

    if (*info_cmd) return info(g);
    if (*br_cmd) {
      if (signed_flag) {
        std::cout << signed_br(g, enumeration) << "\n";
      } else if (!godsil.empty()) {
        std::cout << signed_br_godsil_royle(g, Poly::parse(godsil[0]), Poly::parse(godsil[1]), enumeration) << "\n";
      } else if (dichromatic_flag) {
        std::vector<Poly> b;
        for (int e = 0; e < g.num_edges(); ++e) b.push_back(Poly::variable("b") * g.attributes(e).weight_x);
        std::cout << dichromatic_br(g, b, enumeration) << "\n";
      } else if (arrow_flag) {
        std::cout << arrow_br(g, enumeration) << "\n";
      } else {
        std::cout << bollobas_riordan(g, enumeration) << "\n";
      }
      return kExitOk;
    }
    if (*kr_cmd) {
      std::cout << krushkal(g, enumeration) << "\n";
      return kExitOk;
    }
    if (*lv_cmd) {
      std::cout << las_vergnas(g, enumeration) << "\n";
      return kExitOk;
    }
    if (*rel_cmd) {
      std::cout << relative_tutte(RelativeGraph(g), enumeration) << "\n";
      return kExitOk;
    }
    if (*qt_cmd) return quasitrees(g, order_text.empty() ? EdgeOrder{} : parse_order(g, order_text), enumeration);
    if (*dual_cmd) {
      std::cout << serialize_rg(geometric_dual(g));
      return kExitOk;
    }
    if (*pd_cmd) {
      std::cout << serialize_rg(partial_dual(g, g.edge_set(split_names(pd_edges))));
      return kExitOk;
    }
    if (*conv_cmd) {
      std::cout << serialize_rg(to_ribbon(RelativeGraph(g)));
      return kExitOk;
    }
    if (*verify_cmd) return verify(suite, g, vopts);
  } catch (const ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --force)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
