#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "indshell/graph.hpp"

namespace indshell {

/// A graph with a human-readable name per vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Vertex carrying `label`; throws InvalidVertex when absent.
  Vertex vertex(const std::string& label) const;
  std::string label(Vertex v) const;
  VertexSet vertices(const std::vector<std::string>& names) const;
};

/// Plain 0..n-1 labels.
LabeledGraph with_index_labels(const Graph& g);

/// SC(x): cliques glued at a centre. `clique_sizes[i]` counts the vertices of
/// B_i other than the centre, so |V| = 1 + sum. The centre is vertex 0.
LabeledGraph star_clique(const std::vector<int>& clique_sizes);

struct CliquePathGraph {
  LabeledGraph graph;
  CliquePath path;
};

/// CP(B_1..B_n) with |B_i| = clique_sizes[i] (each >= 2).
CliquePathGraph clique_path(const std::vector<int>& clique_sizes);

struct CliqueCycleGraph {
  LabeledGraph graph;
  /// x_1..x_n; x_i = B_i ∩ B_{i+1}, x_n = B_n ∩ B_1.
  std::vector<Vertex> connectors;
  std::vector<VertexSet> cliques;
};

/// CC(B_1..B_n), n >= 3, each |B_i| >= 2.
CliqueCycleGraph clique_cycle(const std::vector<int>& clique_sizes);

/// Star-clique attachments: vertex -> sizes of the cliques hung there (each
/// counting the new vertices only).
using Attachments = std::map<Vertex, std::vector<int>>;

/// CCG(H, S, r): a star-clique with at least r+1 vertices (the attachment
/// point included) glued at every x in S. With `require_cover` S must cover
/// every edge of H (NotAVertexCover otherwise). New vertices are numbered
/// after the host in attachment order.
LabeledGraph attach_star_cliques(const LabeledGraph& host, VertexSet s, int r, const Attachments& sizes,
                                 bool require_cover);

/// W(G): one pendant vertex at every vertex.
LabeledGraph whiskered(const LabeledGraph& host);

/// Clique vertex-partition W_1..W_k of V(G) with whisker counts t_i.
struct CliquePartition {
  std::vector<VertexSet> parts;
  std::vector<int> whisker_counts;
};

/// The trivial partition into singletons, every t_i = t.
CliquePartition trivial_partition(const Graph& g, int t);

/// G^π_r with r = min t_i: each W_i grows by t_i fresh vertices into a clique.
/// Throws InvalidPartition for overlapping, non-covering or non-clique parts.
LabeledGraph clique_whisker(const LabeledGraph& host, const CliquePartition& p);

/// G(r): a clique cycle with star-cliques at chosen connectors. At least one
/// attached star-clique needs r+1 vertices; the others are unconstrained.
LabeledGraph clique_cycle_with_attachments(const std::vector<int>& clique_sizes, const Attachments& at_connector,
                                           int r);

/// G_t from three connected graphs H_1..H_3 (|V(H_i)| >= r-3, r >= 4): a
/// spider v1..v7 with H_i joined by the edges v3-u1, v5-u2, v7-u3, where u_i
/// is vertex 0 of H_i.
LabeledGraph counterexample_gt(int r, const Graph& h1, const Graph& h2, const Graph& h3);

/// G_t with every H_i a path on t vertices (so G_t is a tree).
LabeledGraph counterexample_gt_paths(int r, int t);

struct SheHigherFamily {
  LabeledGraph h;
  LabeledGraph g;
  int critical_r = 0;
  /// V(G) minus {a1, b1, c, d}.
  VertexSet contraction_set;
};

/// The chordal H on a_1..a_n, b_1..b_n, c, d with a clique of t fresh
/// vertices at every vertex; critical r = n*t + n.
SheHigherFamily she_higher_family(int n, int t);

/// The 9-vertex T3 graph on x1..x9.
LabeledGraph t3_graph();

enum class FamilyKind { Tree, BlockGraph, T1, T2, Chordal };

/// Seeded random member of a family on n vertices, certified by the matching
/// recognizer before it is returned.
Graph random_family(FamilyKind kind, int n, std::uint64_t seed);

/// Uniformly random graph on n vertices with edge probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace indshell
