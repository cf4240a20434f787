#pragma once

// Rendering of classification reports: a stable JSON document (identical
// bytes for identical inputs and configuration) and a human-oriented text
// form that may include timing.

#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "homcx/classify.hpp"

namespace homcx {

inline std::string hom_to_spec(const Hom& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s;
}

inline nlohmann::ordered_json betti_json(const HomologyProfile& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int k = 0; k <= 2; ++k) {
    if (k <= p.computed_dim)
      arr.push_back(p.betti[k]);
    else if (!p.truncated)
      arr.push_back(0);
    else
      arr.push_back(nullptr);  // undetermined at this truncation
  }
  return arr;
}

inline nlohmann::ordered_json torsion_json(const HomologyProfile& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int k = 0; k <= 2; ++k) {
    nlohmann::ordered_json deg = nlohmann::ordered_json::array();
    if (k <= p.computed_dim) {
      for (const BigInt& t : p.torsion[k]) {
        if (t <= std::numeric_limits<long long>::max())
          deg.push_back(static_cast<long long>(t));
        else
          deg.push_back(t.str());
      }
    } else if (p.truncated) {
      deg.push_back(nullptr);  // undetermined
    }
    arr.push_back(deg);
  }
  return arr;
}

inline nlohmann::ordered_json to_json(const PairReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["input"] = {{"g", r.g_name},
                {"h", r.h_name},
                {"square_free", true},
                {"bipartite_g", r.g_bipartite},
                {"bipartite_h", r.h_bipartite},
                {"chi_h", r.chi_h}};
  j["components"] = nlohmann::ordered_json::array();
  for (const ComponentReport& c : r.components) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["size_homs"] = c.size_homs;
    cj["cells"] = c.cells;
    cj["image_class"] = to_string(c.image_class);
    cj["prediction"] = to_string(c.prediction);
    cj["betti"] = betti_json(c.profile);
    cj["torsion"] = torsion_json(c.profile);
    cj["chi"] = c.cell_chi;
    cj["verdict"] = to_string(c.verdict);
    j["components"].push_back(std::move(cj));
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks)
    j["checks"].push_back(nlohmann::ordered_json{{"name", c.name}, {"pass", c.pass}});
  j["stats"] = {{"homs", r.total_homs},
                {"cells", r.total_cells},
                {"simplices", r.total_simplices},
                {"max_homs", r.config.max_homs},
                {"max_cells", r.config.max_cells},
                {"max_simplices", r.config.max_simplices},
                {"max_dim", r.config.max_dim},
                {"fold", r.config.fold},
                {"h_vertices", r.h_vertices},
                {"h_vertices_after_fold", r.h_vertices_after_fold}};
  if (r.seed)
    j["stats"]["seed_hom"] = hom_to_spec(*r.seed);
  else
    j["stats"]["seed_hom"] = nullptr;
  return j;
}

inline void write_text(std::ostream& out, const PairReport& r, long long elapsed_ms = -1) {
  out << "classify " << r.g_name << " -> " << r.h_name << "\n";
  out << "  target: " << r.h_vertices_after_fold << " vertices"
      << (r.config.fold ? " after folding" : "") << ", square-free, "
      << (r.h_bipartite ? "bipartite" : "non-bipartite") << ", chi = " << r.chi_h << "\n";
  out << "  source: " << (r.g_bipartite ? "bipartite" : "non-bipartite") << "\n";
  out << "  homs: " << r.total_homs << ", components reported: " << r.components.size()
      << "\n";
  for (const ComponentReport& c : r.components) {
    out << "  component " << c.id << ": homs " << c.size_homs << ", cells " << c.cells
        << ", image " << to_string(c.image_class) << ", prediction "
        << to_string(c.prediction) << ", betti [";
    nlohmann::ordered_json b = betti_json(c.profile);
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i].dump();
    out << "], chi " << c.cell_chi << ", verdict " << to_string(c.verdict) << "\n";
  }
  for (const Check& c : r.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << "  result: " << (r.all_ok() ? "verified" : "MISMATCH");
  if (elapsed_ms >= 0) out << " (" << elapsed_ms << " ms)";
  out << "\n";
}

}  // namespace homcx
