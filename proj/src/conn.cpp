#include "indshell/conn.hpp"

#include <string>

#include "indshell/error.hpp"

namespace indshell {

namespace {

// Include/exclude branching on the lowest frontier vertex. A declined vertex
// joins `banned` for the rest of that branch, so the two branches produce
// disjoint families of sets.
void grow(const Graph& g, VertexSet allowed, VertexSet current, VertexSet frontier, VertexSet banned, int k,
          std::vector<VertexSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  while (!frontier.empty()) {
    const Vertex v = frontier.min();
    frontier = frontier.without(v);
    const VertexSet next = current.with(v);
    const VertexSet next_frontier = (frontier | (g.neighbors(v) & allowed)) - next - banned;
    grow(g, allowed, next, next_frontier, banned, k, out);
    banned = banned.with(v);
  }
}

std::vector<VertexSet> from_anchor(const Graph& g, Vertex anchor, int k) {
  std::vector<VertexSet> out;
  const VertexSet allowed = g.vertices() - VertexSet::range(anchor + 1);
  grow(g, allowed, VertexSet::single(anchor), g.neighbors(anchor) & allowed, VertexSet{}, k, out);
  return out;
}

void check_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "subset size must be positive, got " + std::to_string(k));
}

}  // namespace

std::vector<VertexSet> connected_subsets(const Graph& g, int k) {
  check_k(k);
  std::vector<VertexSet> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    std::vector<VertexSet> part = from_anchor(g, a, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  canonicalize(out);
  return out;
}

std::vector<VertexSet> connected_subsets_parallel(const Graph& g, int k) {
  check_k(k);
  const int n = g.vertex_count();
  std::vector<std::vector<VertexSet>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < n; ++a) parts[static_cast<std::size_t>(a)] = from_anchor(g, a, k);
  std::vector<VertexSet> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  canonicalize(out);
  return out;
}

Hypergraph con_r(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive, got " + std::to_string(r));
  return Hypergraph::make(g.vertices(), connected_subsets(g, r + 1));
}

}  // namespace indshell
