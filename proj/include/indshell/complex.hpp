#pragma once

#include <vector>

#include "indshell/graph.hpp"
#include "indshell/hypergraph.hpp"

namespace indshell {

/// Simplicial complex stored by its facets.
///
/// The void complex (no faces at all) has no facets and `is_void()` true; the
/// empty complex {∅} has the single facet ∅. They are different objects.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal members of `faces`. With no faces the
  /// result is the void complex.
  static SimplicialComplex from_faces(VertexSet ground, std::vector<VertexSet> faces);
  static SimplicialComplex void_complex(VertexSet ground) { return SimplicialComplex(ground, {}); }
  static SimplicialComplex simplex(VertexSet vertices) { return SimplicialComplex(vertices, {vertices}); }

  VertexSet ground() const { return ground_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool is_void() const { return facets_.empty(); }
  /// dim = max facet size - 1; -1 for {∅}, and also reported as -1 for void.
  int dimension() const;
  bool is_pure() const;
  bool is_face(VertexSet f) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(VertexSet ground, std::vector<VertexSet> facets) : ground_(ground), facets_(std::move(facets)) {}

  VertexSet ground_;
  std::vector<VertexSet> facets_;
};

bool is_r_independent(const Graph& g, VertexSet a, int r);

/// ind_r(G), enumerated directly on the graph: a vertex may join a partial
/// set only if its component in the induced subgraph stays within r vertices.
SimplicialComplex ind_r_complex(const Graph& g, int r);

/// ind(H): the maximal subsets of V(H) containing no edge.
SimplicialComplex independence_complex(const Hypergraph& h);

/// link_Δ(F). Throws NotAFace when F is not a face.
SimplicialComplex link(const SimplicialComplex& d, VertexSet f);

/// Δ \ F: faces avoiding F.
SimplicialComplex deletion(const SimplicialComplex& d, VertexSet f);

/// Cone over a fresh apex vertex (must lie outside the ground set).
SimplicialComplex cone(const SimplicialComplex& d, Vertex apex);

/// Relabels a complex through `map` (old label -> new label).
SimplicialComplex relabel(const SimplicialComplex& d, const std::vector<Vertex>& map);

}  // namespace indshell
