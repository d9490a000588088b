#pragma once

#include <vector>

#include "indshell/graph.hpp"

namespace fixtures {

using indshell::Graph;
using indshell::Vertex;
using indshell::VertexSet;

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Centre 0, leaves 1..k.
inline Graph star(int k) {
  Graph g(k + 1);
  for (Vertex v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

inline std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<Vertex>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) out.emplace_back(l);
  return out;
}

inline std::vector<std::uint64_t> masks(const std::vector<VertexSet>& family) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : family) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
