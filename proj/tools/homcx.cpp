// homcx: classify the components of graph hom spaces over square-free
// targets, walk reconfiguration paths, inspect fundamental-group data, and
// materialize cover balls.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcx/classify.hpp"
#include "homcx/cover.hpp"
#include "homcx/edge_list.hpp"
#include "homcx/report.hpp"

namespace {

using homcx::Graph;
using homcx::Hom;
using homcx::InvalidInput;
using homcx::RunConfig;
using nlohmann::ordered_json;

struct CommonArgs {
  std::string g_path, h_path;
  std::string format = "text";
  RunConfig cfg;
};

Graph load(const std::string& path) { return homcx::read_graph_file(path); }

void write_dot_reconfig(const std::string& path, const homcx::ReconfigGraph& rg) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open dot output file: " + path);
  out << "graph reconfiguration {\n";
  for (std::size_t i = 0; i < rg.homs.size(); ++i)
    out << "  n" << i << " [label=\"" << homcx::hom_to_spec(rg.homs[i]) << "\"];\n";
  for (auto [i, j] : rg.edges) out << "  n" << i << " -- n" << j << ";\n";
  out << "}\n";
}

void write_dot_ball(const std::string& path, const homcx::CoverBall& ball) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open dot output file: " + path);
  out << "graph coverball {\n";
  for (int v = 0; v < ball.tree.vertex_count(); ++v)
    out << "  n" << v << " [label=\"" << v << ":" << ball.projection[v] << "\"];\n";
  for (auto [u, v] : ball.tree.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
}

int run_classify(const CommonArgs& args, const std::optional<std::string>& seed_spec) {
  auto start = std::chrono::steady_clock::now();
  Graph g = load(args.g_path);
  Graph h = load(args.h_path);
  std::optional<Hom> seed;
  if (seed_spec) seed = homcx::parse_hom_spec(*seed_spec);
  homcx::PairReport rep =
      homcx::classify_pair(g, h, args.cfg, args.g_path, args.h_path, seed);
  if (args.format == "json") {
    std::cout << homcx::to_json(rep).dump(2) << "\n";
  } else {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    homcx::write_text(std::cout, rep, elapsed);
  }
  return rep.all_ok() ? 0 : 2;
}

int run_reconfigure(const CommonArgs& args, const std::string& from_spec,
                    const std::string& to_spec, const std::optional<std::string>& dot) {
  Graph g = load(args.g_path);
  Graph h = load(args.h_path);
  Hom from = homcx::parse_hom_spec(from_spec);
  Hom to = homcx::parse_hom_spec(to_spec);
  if (!homcx::is_hom(g, h, from)) throw InvalidInput("--from is not a homomorphism");
  if (!homcx::is_hom(g, h, to)) throw InvalidInput("--to is not a homomorphism");
  if (dot) write_dot_reconfig(*dot, homcx::reconfig_components(g, h, args.cfg.max_homs));
  auto path = homcx::find_xhomotopy_path(g, h, from, to, args.cfg.max_homs);
  if (args.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    if (path) {
      j["path"] = ordered_json::array();
      for (const Hom& f : *path) j["path"].push_back(f);
    } else {
      j["path"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (path) {
    std::cout << "path of " << path->size() - 1 << " step(s):\n";
    for (const Hom& f : *path) std::cout << "  " << homcx::hom_to_spec(f) << "\n";
  } else {
    std::cout << "unreachable: the two homs lie in different components\n";
  }
  return 0;
}

int run_pi(const CommonArgs& args, const std::string& hom_spec) {
  Graph g = load(args.g_path);
  Graph h = load(args.h_path);
  if (!homcx::is_connected(g) || g.edge_count() == 0)
    throw InvalidInput("source graph must be connected with at least one edge");
  if (!homcx::is_connected(h) || h.edge_count() == 0)
    throw InvalidInput("target graph must be connected with at least one edge");
  if (!homcx::is_square_free(h)) throw InvalidInput("target graph must be square-free");
  Hom f = homcx::parse_hom_spec(hom_spec);
  if (!homcx::is_hom(g, h, f)) throw InvalidInput("--seed-hom is not a homomorphism");

  int v = 0;
  while (v < g.vertex_count() && g.neighbors(v).empty()) ++v;
  homcx::Pi1Presentation pg = homcx::pi1_presentation(g, v);
  homcx::Pi1Presentation ph = homcx::pi1_presentation(h, f[v]);
  std::vector<homcx::Word> image = homcx::induced_map(f, pg, ph);
  auto [image_class, image_graph] = homcx::stallings_classify(image, ph.rank());

  homcx::ReconfigGraph rg = homcx::reconfig_components(g, h, args.cfg.max_homs);
  auto it = std::lower_bound(rg.homs.begin(), rg.homs.end(), f);
  homcx::RealizableSubgroup pi = homcx::realizable_subgroup(
      g, h, rg, static_cast<int>(it - rg.homs.begin()), v, ph, args.cfg.debug_checks);

  bool all_commute = true;
  for (const homcx::Word& a : image)
    for (const homcx::Word& b : pi.generators)
      if (!homcx::commutes(a, b)) all_commute = false;

  if (args.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["hom"] = homcx::hom_to_spec(f);
    j["image_class"] = homcx::to_string(image_class);
    j["image_generators"] = ordered_json::array();
    for (const homcx::Word& w : image) j["image_generators"].push_back(homcx::word_to_string(w));
    j["realizable_class"] = homcx::to_string(pi.cls);
    j["realizable_rank"] = pi.graph.rank();
    j["realizable_generators"] = ordered_json::array();
    for (const homcx::Word& w : pi.generators)
      j["realizable_generators"].push_back(homcx::word_to_string(w));
    j["commutes"] = all_commute;
    if (args.cfg.debug_checks) j["neighbor_agreement"] = pi.neighbor_agreement;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "hom " << homcx::hom_to_spec(f) << " (component of "
              << rg.component_members[rg.component_id[it - rg.homs.begin()]].size()
              << " homs)\n";
    std::cout << "  fundamental-group image: " << homcx::to_string(image_class) << "\n";
    for (const homcx::Word& w : image)
      std::cout << "    generator image: " << homcx::word_to_string(w) << "\n";
    std::cout << "  realizable subgroup: " << homcx::to_string(pi.cls) << ", rank "
              << pi.graph.rank() << "\n";
    for (const homcx::Word& w : pi.generators)
      std::cout << "    realized class: " << homcx::word_to_string(w) << "\n";
    std::cout << "  commutes with image: " << (all_commute ? "yes" : "NO") << "\n";
    if (args.cfg.debug_checks)
      std::cout << "  neighbor agreement: " << (pi.neighbor_agreement ? "yes" : "NO")
                << "\n";
  }
  return 0;
}

int run_coverball(const CommonArgs& args, int base, int radius,
                  const std::optional<std::string>& dot) {
  Graph h = load(args.h_path);
  homcx::CoverBall ball = homcx::cover_ball(h, base, radius, args.cfg.max_ball);
  bool ok = homcx::verify_two_covering(ball, h);
  int interior = 0;
  for (int v = 0; v < ball.tree.vertex_count(); ++v)
    if (ball.interior(v)) ++interior;
  if (dot) write_dot_ball(*dot, ball);
  if (args.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["radius"] = radius;
    j["vertices"] = ball.tree.vertex_count();
    j["edges"] = ball.tree.edge_count();
    j["interior_vertices"] = interior;
    j["verified"] = ok;
    j["projection"] = ball.projection;
    j["depth"] = ball.depth;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cover ball of radius " << radius << " at vertex " << base << ": "
              << ball.tree.vertex_count() << " vertices, " << ball.tree.edge_count()
              << " edges, " << interior << " interior\n";
    std::cout << "  local bijectivity: " << (ok ? "verified" : "FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hom-space component classification over square-free targets"};
  app.require_subcommand(1);

  CommonArgs args;
  std::optional<std::string> seed_spec, dot_path;
  std::string from_spec, to_spec;
  int base = 0, radius = 2;

  auto add_common = [&](CLI::App* cmd, bool needs_g) {
    // The default help flag's short form -h would collide with --h.
    cmd->set_help_flag("--help", "print help and exit");
    if (needs_g) cmd->add_option("--g", args.g_path, "source graph edge list")->required();
    cmd->add_option("--h", args.h_path, "target graph edge list")->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* classify = app.add_subcommand("classify", "classify hom-space components");
  add_common(classify, true);
  classify->add_option("--max-homs", args.cfg.max_homs, "hom enumeration cap")
      ->capture_default_str();
  classify->add_option("--max-cells", args.cfg.max_cells, "poset cell cap")
      ->capture_default_str();
  classify->add_option("--max-simplices", args.cfg.max_simplices, "order-complex simplex cap")
      ->capture_default_str();
  classify->add_option("--max-dim", args.cfg.max_dim, "top simplex dimension computed")
      ->capture_default_str();
  classify->add_flag("--fold", args.cfg.fold, "fold the target before classifying");
  classify->add_flag("--debug-checks", args.cfg.debug_checks,
                     "run the slow internal consistency checks");
  classify->add_option("--seed-hom", [&seed_spec](const std::vector<std::string>& v) {
        seed_spec = v.front();
        return true;
      },
      "restrict to the component of this hom (comma-separated images)");

  CLI::App* reconf = app.add_subcommand("reconfigure", "shortest reconfiguration path");
  add_common(reconf, true);
  reconf->add_option("--max-homs", args.cfg.max_homs, "hom enumeration cap")
      ->capture_default_str();
  reconf->add_option("--from", from_spec, "start hom (comma-separated images)")->required();
  reconf->add_option("--to", to_spec, "end hom (comma-separated images)")->required();
  reconf->add_option("--dot", [&dot_path](const std::vector<std::string>& v) {
        dot_path = v.front();
        return true;
      },
      "write the reconfiguration graph as DOT");

  CLI::App* pi = app.add_subcommand("pi", "fundamental-group image and realizable classes");
  add_common(pi, true);
  pi->add_option("--max-homs", args.cfg.max_homs, "hom enumeration cap")->capture_default_str();
  pi->add_flag("--debug-checks", args.cfg.debug_checks, "verify neighbor independence");
  std::string pi_hom;
  pi->add_option("--seed-hom", pi_hom, "hom whose component is analyzed")->required();

  CLI::App* ball = app.add_subcommand("coverball", "finite ball of the walk tree");
  add_common(ball, false);
  ball->add_option("--base", base, "base vertex")->capture_default_str();
  ball->add_option("--radius", radius, "ball radius")->capture_default_str();
  ball->add_option("--max-ball", args.cfg.max_ball, "ball vertex cap")->capture_default_str();
  ball->add_option("--dot", [&dot_path](const std::vector<std::string>& v) {
        dot_path = v.front();
        return true;
      },
      "write the ball as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems exit 1
  }

  try {
    if (classify->parsed()) return run_classify(args, seed_spec);
    if (reconf->parsed()) return run_reconfigure(args, from_spec, to_spec, dot_path);
    if (pi->parsed()) return run_pi(args, pi_hom);
    if (ball->parsed()) return run_coverball(args, base, radius, dot_path);
  } catch (const homcx::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
