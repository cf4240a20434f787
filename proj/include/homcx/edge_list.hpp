#pragma once

// Plain-text edge lists. Format: optional comment lines ('#' starts a
// comment anywhere), then a header line "n <vertex-count>", then one
// "u v" pair per line. "u u" declares a loop.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/graph.hpp"

namespace homcx {

inline Graph read_graph(std::istream& in, const std::string& source = "<stream>") {
  auto fail = [&](int line, const std::string& what) -> void {
    throw InvalidInput(source + ":" + std::to_string(line) + ": " + what);
  };

  Graph g;
  bool have_header = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only

    if (!have_header) {
      int n;
      if (first != "n" || !(ls >> n))
        fail(lineno, "expected header line 'n <vertex-count>'");
      if (n < 1) fail(lineno, "vertex count must be positive");
      std::string extra;
      if (ls >> extra) fail(lineno, "trailing junk after header");
      g = Graph(n);
      have_header = true;
      continue;
    }

    int u, v;
    std::istringstream es(raw);
    std::string extra;
    if (!(es >> u >> v)) fail(lineno, "expected edge line 'u v'");
    if (es >> extra) fail(lineno, "trailing junk after edge");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      fail(lineno, "vertex id out of range");
    g.add_edge(u, v);
  }
  if (!have_header) fail(lineno, "missing header line 'n <vertex-count>'");
  return g;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file: " + path);
  return read_graph(in, path);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

/// Comma-separated vertex images in source-vertex order, e.g. "0,2,1".
inline std::vector<int> parse_hom_spec(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad hom spec entry: '" + token + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty hom spec");
  return out;
}

}  // namespace homcx
