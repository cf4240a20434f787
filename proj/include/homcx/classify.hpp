#pragma once

// End-to-end classification of hom-space components: predict each
// component's homotopy type from the fundamental-group image of a
// representative, verify the prediction against exact homology of the
// dismantled component's order complex, and run the structural cross-checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcx/complex.hpp"
#include "homcx/cover.hpp"
#include "homcx/errors.hpp"
#include "homcx/free_group.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"
#include "homcx/homology.hpp"

namespace homcx {

enum class Prediction { Point, Circle, PointOrCircle, TypeOfH, DoubleCoverOfH };
enum class Verdict { Match, ResolvedPoint, ResolvedCircle, Mismatch };

inline const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::Point: return "Point";
    case Prediction::Circle: return "Circle";
    case Prediction::PointOrCircle: return "PointOrCircle";
    case Prediction::TypeOfH: return "TypeOfH";
    default: return "DoubleCoverOfH";
  }
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::ResolvedPoint: return "Resolved(Point)";
    case Verdict::ResolvedCircle: return "Resolved(Circle)";
    default: return "Mismatch";
  }
}

/// Homotopy type of a component from the class of the fundamental-group
/// image of any of its homs (constant across the component).
inline Prediction predict(SubgroupClass image, bool h_bipartite) {
  switch (image) {
    case SubgroupClass::NonabelianFree: return Prediction::Point;
    case SubgroupClass::InfiniteCyclic: return Prediction::PointOrCircle;
    default: return h_bipartite ? Prediction::TypeOfH : Prediction::DoubleCoverOfH;
  }
}

/// First Betti number each definite prediction demands; -1 for the
/// ambiguous PointOrCircle case.
inline long long expected_b1(Prediction p, int chi_h) {
  switch (p) {
    case Prediction::Point: return 0;
    case Prediction::Circle: return 1;
    case Prediction::TypeOfH: return 1 - static_cast<long long>(chi_h);
    case Prediction::DoubleCoverOfH: return 1 - 2 * static_cast<long long>(chi_h);
    default: return -1;
  }
}

/// Exact-match test: b0 = 1, b1 as predicted, H2 = 0, and no torsion in
/// any determined degree. Undetermined values (over-truncated complexes)
/// count as Mismatch.
inline Verdict verify_prediction(Prediction p, const HomologyProfile& prof, int chi_h) {
  auto betti_at = [&](int k) -> std::optional<long long> {
    if (k <= prof.computed_dim) return prof.betti[k];
    if (!prof.truncated) return 0;  // no simplices there at all
    return std::nullopt;
  };
  auto torsion_free_at = [&](int k) -> std::optional<bool> {
    if (k <= prof.computed_dim) return prof.torsion[k].empty();
    if (!prof.truncated) return true;
    return std::nullopt;
  };
  auto b0 = betti_at(0), b1 = betti_at(1), b2 = betti_at(2);
  for (int k = 0; k <= 2; ++k) {
    auto tf = torsion_free_at(k);
    if (!tf || !*tf) return Verdict::Mismatch;
  }
  if (!b0 || !b1 || !b2 || *b0 != 1 || *b2 != 0) return Verdict::Mismatch;
  if (p == Prediction::PointOrCircle) {
    if (*b1 == 0) return Verdict::ResolvedPoint;
    if (*b1 == 1) return Verdict::ResolvedCircle;
    return Verdict::Mismatch;
  }
  return *b1 == expected_b1(p, chi_h) ? Verdict::Match : Verdict::Mismatch;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunConfig {
  std::size_t max_homs = 200000;
  std::size_t max_cells = 1000000;
  std::size_t max_simplices = 5000000;
  std::size_t max_ball = 1000000;
  int max_dim = 3;
  bool fold = false;
  bool debug_checks = false;
};

struct ComponentReport {
  int id = 0;
  Hom representative;
  long long size_homs = 0;
  long long cells = 0;
  long long cell_chi = 0;
  SubgroupClass image_class = SubgroupClass::Trivial;
  Prediction prediction = Prediction::Point;
  HomologyProfile profile;
  Verdict verdict = Verdict::Mismatch;
};

struct PairReport {
  std::string g_name = "g", h_name = "h";
  bool g_bipartite = false, h_bipartite = false;
  int chi_h = 0;
  int h_vertices = 0, h_vertices_after_fold = 0;
  std::optional<Hom> seed;
  std::vector<ComponentReport> components;
  std::vector<Check> checks;
  long long total_homs = 0, total_cells = 0, total_simplices = 0;
  RunConfig config;

  bool all_ok() const {
    for (const auto& c : components)
      if (c.verdict == Verdict::Mismatch) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Counts the components of null-homotopic maps; for bipartite sources
/// there must be exactly two over a bipartite target, one otherwise.
inline Check trivial_image_count_check(bool h_bipartite,
                                       const std::vector<ComponentReport>& comps) {
  int trivial = 0;
  for (const auto& c : comps)
    if (c.image_class == SubgroupClass::Trivial) ++trivial;
  int want = h_bipartite ? 2 : 1;
  Check out{"trivial-image-component-count", trivial == want, ""};
  out.detail = "counted " + std::to_string(trivial) + ", expected " + std::to_string(want);
  return out;
}

/// Non-bipartite sources admit no null-homotopic maps, and every component
/// must come out a point or a circle.
inline Check nonbipartite_check(const std::vector<ComponentReport>& comps) {
  Check out{"nonbipartite-components-point-or-circle", true, ""};
  for (const auto& c : comps) {
    bool shape_ok = (c.prediction == Prediction::Point ||
                     c.prediction == Prediction::PointOrCircle) &&
                    c.verdict != Verdict::Mismatch;
    if (c.image_class == SubgroupClass::Trivial || !shape_ok) {
      out.pass = false;
      out.detail = "component " + std::to_string(c.id) + " violates the odd-cycle restriction";
      return out;
    }
  }
  return out;
}

/// Tree-target structure: homs exist iff the source is bipartite; when they
/// do, there are exactly two components, each contractible, and two homs
/// share a component iff their images sit at even tree distance (checked at
/// every source vertex for consistency).
inline std::vector<Check> hom_tree_check(const Graph& g, const Graph& t,
                                         const RunConfig& cfg = {}) {
  if (!is_connected(t) || t.edge_count() != t.vertex_count() - 1)
    throw InvalidInput("hom_tree_check target must be a tree");
  std::vector<Check> out;
  ReconfigGraph rg = reconfig_components(g, t, cfg.max_homs);
  bool gb = is_bipartite(g);
  out.push_back({"tree-nonempty-iff-source-bipartite", rg.homs.empty() == !gb, ""});
  if (rg.homs.empty()) return out;

  bool two = rg.component_count == 2;
  bool contractible = true;
  for (const auto& members : rg.component_members) {
    CellPoset poset = build_component_poset(g, t, rg.homs[members.front()], cfg.max_cells);
    HomologyProfile prof = homology_profile(
        order_complex(dismantle_core(poset), cfg.max_dim, cfg.max_simplices));
    if (verify_prediction(Prediction::Point, prof, 0) != Verdict::Match) contractible = false;
  }
  out.push_back({"tree-two-contractible-components", two && contractible, ""});

  // Pairwise even-distance criterion.
  std::vector<std::vector<int>> dist(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    dist[v].assign(t.vertex_count(), -1);
    dist[v][v] = 0;
    std::vector<int> queue{v};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : t.neighbors(queue[head]))
        if (dist[v][w] == -1) {
          dist[v][w] = dist[v][queue[head]] + 1;
          queue.push_back(w);
        }
  }
  bool criterion = true;
  const std::size_t m = rg.homs.size();
  for (std::size_t i = 0; i < m && criterion; ++i)
    for (std::size_t j = i + 1; j < m && criterion; ++j) {
      int parity = -1;
      for (int x = 0; x < g.vertex_count(); ++x) {
        if (g.neighbors(x).empty()) continue;
        int p = dist[rg.homs[i][x]][rg.homs[j][x]] % 2;
        if (parity == -1) parity = p;
        if (p != parity) criterion = false;  // must agree at every vertex
      }
      bool same = rg.component_id[i] == rg.component_id[j];
      if (same != (parity == 0)) criterion = false;
    }
  out.push_back({"tree-even-distance-criterion", criterion, ""});
  return out;
}

/// Full pipeline for one (source, target) pair. Throws InvalidInput for
/// inputs outside the supported class and ResourceLimit past the caps.
inline PairReport classify_pair(const Graph& g, const Graph& h_input, const RunConfig& cfg = {},
                                std::string g_name = "g", std::string h_name = "h",
                                std::optional<Hom> seed = std::nullopt) {
  PairReport rep;
  rep.g_name = std::move(g_name);
  rep.h_name = std::move(h_name);
  rep.config = cfg;
  rep.h_vertices = h_input.vertex_count();

  if (g.vertex_count() == 0 || g.edge_count() == 0)
    throw InvalidInput("source graph needs at least one edge");
  if (!is_connected(g)) throw InvalidInput("source graph must be connected");
  if (h_input.vertex_count() == 0 || h_input.edge_count() == 0)
    throw InvalidInput("target graph needs at least one edge");
  if (!is_connected(h_input)) throw InvalidInput("target graph must be connected");

  if (seed) {
    if (static_cast<int>(seed->size()) != g.vertex_count())
      throw InvalidInput("seed hom length must equal the source vertex count");
    for (int x : *seed)
      if (x < 0 || x >= h_input.vertex_count())
        throw InvalidInput("seed hom vertex out of range");
  }

  Graph h = h_input;
  if (cfg.fold) {
    FoldResult fr = fold_reduce(h_input);
    h = fr.graph;
    if (seed)
      for (int& x : *seed) x = fr.vertex_map[x];
  }
  rep.h_vertices_after_fold = h.vertex_count();
  if (auto witness = square_violation(h)) {
    std::string msg = "target graph is not square-free: ";
    if (witness->size() == 1) {
      msg += "loop at vertex " + std::to_string((*witness)[0]);
    } else {
      msg += "4-cycle (" + std::to_string((*witness)[0]) + " " + std::to_string((*witness)[1]) +
             " " + std::to_string((*witness)[2]) + " " + std::to_string((*witness)[3]) + ")";
    }
    if (!cfg.fold) msg += "; --fold may remove it";
    throw InvalidInput(msg);
  }

  rep.g_bipartite = is_bipartite(g);
  rep.h_bipartite = is_bipartite(h);
  rep.chi_h = euler_characteristic(h);
  rep.seed = seed;
  if (seed && !is_hom(g, h, *seed)) throw InvalidInput("seed hom is not a homomorphism");

  int v = 0;
  while (v < g.vertex_count() && g.neighbors(v).empty()) ++v;
  Pi1Presentation pg = pi1_presentation(g, v);

  ReconfigGraph rg = reconfig_components(g, h, cfg.max_homs);
  rep.total_homs = static_cast<long long>(rg.homs.size());

  int only_component = -1;
  if (seed) {
    auto it = std::lower_bound(rg.homs.begin(), rg.homs.end(), *seed);
    only_component = rg.component_id[it - rg.homs.begin()];
  }

  bool atoms_ok = true, b0_ok = true, chi_ok = true;
  bool realizable_rank_ok = true, realizable_consistent = true, commute_ok = true,
       neighbor_ok = true;
  for (int cid = 0; cid < rg.component_count; ++cid) {
    if (only_component != -1 && cid != only_component) continue;
    const auto& members = rg.component_members[cid];
    ComponentReport c;
    c.id = cid;
    c.representative = rg.homs[members.front()];
    c.size_homs = static_cast<long long>(members.size());

    Pi1Presentation ph = pi1_presentation(h, c.representative[v]);
    std::vector<Word> image_words = induced_map(c.representative, pg, ph);
    auto [image_class, image_graph] = stallings_classify(image_words, ph.rank());
    c.image_class = image_class;
    c.prediction = predict(image_class, rep.h_bipartite);

    CellPoset poset = build_component_poset(g, h, c.representative, cfg.max_cells);
    c.cells = static_cast<long long>(poset.cells.size());
    c.cell_chi = euler_characteristic_cells(poset);
    rep.total_cells += c.cells;
    if (static_cast<long long>(poset.atoms.size()) != c.size_homs) atoms_ok = false;

    // Homology runs on the dismantled core: same homotopy type, far fewer
    // chains. Cell counts and chi above describe the full poset, and the
    // chi check against the core's complex below guards the reduction.
    OrderComplex oc = order_complex(dismantle_core(poset), cfg.max_dim, cfg.max_simplices);
    for (int k = 0; k <= oc.top_dim(); ++k) rep.total_simplices += oc.count(k);
    c.profile = homology_profile(oc);
    if (c.profile.computed_dim >= 0 && c.profile.betti[0] != 1) b0_ok = false;
    if (c.profile.chi && *c.profile.chi != c.cell_chi) chi_ok = false;
    c.verdict = verify_prediction(c.prediction, c.profile, rep.chi_h);

    if (cfg.debug_checks) {
      RealizableSubgroup pi =
          realizable_subgroup(g, h, rg, members.front(), v, ph, true);
      if (!pi.neighbor_agreement) neighbor_ok = false;
      if (c.profile.computed_dim >= 1 &&
          pi.graph.rank() != c.profile.betti[1]) realizable_rank_ok = false;
      switch (image_class) {
        case SubgroupClass::NonabelianFree:
          if (pi.cls != SubgroupClass::Trivial) realizable_consistent = false;
          break;
        case SubgroupClass::InfiniteCyclic:
          if (pi.cls == SubgroupClass::NonabelianFree) realizable_consistent = false;
          break;
        default: {
          std::vector<Word> even = even_part_generators(ph);
          auto [ecls, egraph] = stallings_classify(even, ph.rank());
          if (!subgroups_equal(pi.graph, pi.generators, egraph, even))
            realizable_consistent = false;
          break;
        }
      }
      for (const Word& a : image_words)
        for (const Word& b : pi.generators)
          if (!commutes(a, b)) commute_ok = false;
    }
    rep.components.push_back(std::move(c));
  }

  rep.checks.push_back({"component-b0-is-1", b0_ok, ""});
  rep.checks.push_back({"poset-atoms-match-reconfig", atoms_ok, ""});
  rep.checks.push_back({"euler-cells-vs-complex", chi_ok, ""});
  if (!seed) {
    if (rep.g_bipartite)
      rep.checks.push_back(trivial_image_count_check(rep.h_bipartite, rep.components));
    else
      rep.checks.push_back(nonbipartite_check(rep.components));
    if (h.edge_count() == h.vertex_count() - 1) {
      for (Check& c : hom_tree_check(g, h, cfg)) rep.checks.push_back(std::move(c));
    }
  }
  if (cfg.debug_checks) {
    rep.checks.push_back({"realizable-rank-matches-b1", realizable_rank_ok, ""});
    rep.checks.push_back({"realizable-image-consistency", realizable_consistent, ""});
    rep.checks.push_back({"realized-commutes-with-image", commute_ok, ""});
    rep.checks.push_back({"realized-neighbor-agreement", neighbor_ok, ""});
  }
  return rep;
}

}  // namespace homcx
