#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "indshell/vertex_set.hpp"

namespace indshell {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64) with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Builds a graph from an edge list; loops and repeated edges are rejected
  /// with InvalidGraph, out-of-range endpoints with InvalidVertex.
  static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

  /// Adds {u,v}; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  VertexSet vertices() const { return VertexSet::range(vertex_count()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adjacency_;
};

/// G[A] relabelled onto 0..|A|-1; `original[i]` is the label in the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a);

/// G with the vertices of `removed` dropped, keeping host labels (the removed
/// vertices become isolated). Used where labels must survive deletion.
Graph remove_vertices_keep_labels(const Graph& g, VertexSet removed);

/// Vertices reachable from `start` inside `within`.
VertexSet component_of(const Graph& g, Vertex start, VertexSet within);
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// Components sorted by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Maximum eccentricity; std::nullopt stands for an infinite diameter
/// (disconnected graph). Throws InvalidInput on the empty graph.
std::optional<int> diameter(const Graph& g);

/// Vertices of `within` whose neighbourhood inside `within` is a clique.
VertexSet simplicial_vertices(const Graph& g, VertexSet within);
VertexSet simplicial_vertices(const Graph& g);

/// V_1, V_2, ...: V_i is the simplicial set of G minus the earlier layers.
struct EliminationLayers {
  std::vector<VertexSet> layers;

  VertexSet covered() const;
  /// 1-based layer index of v, or 0 when v is in no layer.
  int layer_of(Vertex v) const;
};

EliminationLayers elimination_layers(const Graph& g);

/// S_v: the union, minus v, of the largest cliques through v whose other
/// vertices all lie in V_1. Requires v in V_2.
VertexSet clique_shadow(const Graph& g, const EliminationLayers& layers, Vertex v);

struct BlockDecomposition {
  /// Biconnected components (an isolated vertex is its own block), sorted.
  std::vector<VertexSet> blocks;
  /// Vertices lying in two or more blocks.
  VertexSet cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

/// Perfect-elimination-ordering test via maximum cardinality search.
bool is_chordal(const Graph& g);
bool is_block_graph(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// A chain of cliques B_1..B_n where consecutive cliques share exactly the
/// connector x_i and non-consecutive cliques are disjoint.
struct CliquePath {
  std::vector<VertexSet> cliques;
  std::vector<Vertex> connectors;

  int length() const { return static_cast<int>(cliques.size()); }
  VertexSet vertices() const;
  bool operator==(const CliquePath&) const = default;
};

/// Every maximum-length clique path built from blocks of a connected block
/// graph, one orientation each, in canonical order (the first entry is what
/// maximum_clique_path returns).
std::vector<CliquePath> maximum_clique_paths(const Graph& g);

/// Canonical maximum clique path: smallest sorted connector list, then
/// smallest connector sequence, then smallest clique sequence.
/// Throws InvalidInput unless g is a connected block graph.
CliquePath maximum_clique_path(const Graph& g);

/// All longest paths of a tree, as vertex sequences, one orientation each.
std::vector<std::vector<Vertex>> longest_paths(const Graph& tree);

struct FamilyFlags {
  bool is_forest = false;
  bool is_tree = false;
  bool is_chordal = false;
  bool is_block_graph = false;
  bool is_caterpillar = false;
  bool is_lobster = false;
  bool is_t1 = false;
  bool is_t2 = false;
};

FamilyFlags classify_families(const Graph& g);

/// Per-component T1 / T2 tests (block graphs only; false otherwise).
bool is_t1_graph(const Graph& g);
bool is_t2_graph(const Graph& g);

/// An injective map V(h) -> V(g) whose image induces a copy of h.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h);
bool contains_induced(const Graph& g, const Graph& h);

}  // namespace indshell
