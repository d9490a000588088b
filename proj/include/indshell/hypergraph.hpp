#pragma once

#include <functional>
#include <vector>

#include "indshell/vertex_set.hpp"

namespace indshell {

/// Simple hypergraph: a vertex set and an antichain of nonempty edges.
///
/// Vertex labels are kept through deletion and contraction, so a minor still
/// names the vertices of its host.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Reduces `raw_edges` to its inclusion-minimal members. Throws InvalidEdge
  /// for an empty edge or an edge leaving `vertices`.
  static Hypergraph make(VertexSet vertices, std::vector<VertexSet> raw_edges);

  VertexSet vertices() const { return vertices_; }
  /// Edges in canonical (sorted) order.
  const std::vector<VertexSet>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(VertexSet vertices, std::vector<VertexSet> edges) : vertices_(vertices), edges_(std::move(edges)) {}

  friend Hypergraph delete_vertices(const Hypergraph&, VertexSet);
  friend Hypergraph contract_vertices(const Hypergraph&, VertexSet);

  VertexSet vertices_;
  std::vector<VertexSet> edges_;
};

/// A deletion set V_d and a disjoint contraction set V_c.
struct MinorSpec {
  VertexSet deleted;
  VertexSet contracted;

  bool operator==(const MinorSpec&) const = default;
};

Hypergraph delete_vertex(const Hypergraph& h, Vertex v);
/// Throws EmptyEdgeCollapse when {v} is an edge.
Hypergraph contract_vertex(const Hypergraph& h, Vertex v);

Hypergraph delete_vertices(const Hypergraph& h, VertexSet vs);
/// Throws EmptyEdgeCollapse when some edge lies inside `vs`.
Hypergraph contract_vertices(const Hypergraph& h, VertexSet vs);

/// H \ V_d / V_c. Throws InvalidVertex for a malformed spec and
/// EmptyEdgeCollapse when an edge surviving the deletion lies inside V_c.
Hypergraph minor(const Hypergraph& h, const MinorSpec& spec);

/// True iff the spec is disjoint, inside V(h), and avoids EmptyEdgeCollapse.
bool minor_is_defined(const Hypergraph& h, const MinorSpec& spec);

bool is_hyper_simplicial(const Hypergraph& h, Vertex v);
VertexSet hyper_simplicial_vertices(const Hypergraph& h);
/// Cheaper existence test that stops at the first simplicial vertex.
bool has_hyper_simplicial_vertex(const Hypergraph& h);

bool has_singleton(const Hypergraph& h);

enum class ContractionFilter { All, CPrime };

/// Every V_c subset of V(h), by size then lexicographically, whose
/// contraction is defined; with CPrime only results without singleton edges.
/// Equal hypergraphs reached from different V_c are all reported.
void for_each_contraction(const Hypergraph& h, ContractionFilter filter,
                          const std::function<void(VertexSet, const Hypergraph&)>& visit);

struct Contraction {
  VertexSet contracted;
  Hypergraph result;
};

std::vector<Contraction> enumerate_contractions(const Hypergraph& h, ContractionFilter filter);

/// Subsets of `universe` ordered by size, then lexicographically by sorted
/// element list. Visiting stops early when `visit` returns false.
void for_each_subset_by_size(VertexSet universe, const std::function<bool(VertexSet)>& visit);

}  // namespace indshell
