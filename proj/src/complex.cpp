#include "indshell/complex.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "indshell/error.hpp"

namespace indshell {

SimplicialComplex SimplicialComplex::from_faces(VertexSet ground, std::vector<VertexSet> faces) {
  for (VertexSet f : faces) {
    if (!f.subset_of(ground)) throw Error(ErrorKind::InvalidInput, "face " + f.to_string() + " leaves the ground set");
  }
  return SimplicialComplex(ground, maximal_sets(std::move(faces)));
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::is_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](VertexSet facet) { return f.subset_of(facet); });
}

bool is_r_independent(const Graph& g, VertexSet a, int r) {
  VertexSet rest = a;
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.min(), a);
    if (c.size() > r) return false;
    rest -= c;
  }
  return true;
}

namespace {

// Shared include/exclude walk over vertices 0..n-1. `fits(S, v)` says whether
// v may join S; `blockable(x, S, reach)` is a necessary condition for an
// excluded x to be blocked by some final set between S and S ∪ reach;
// `blocked(x, S)` is the exact leaf test.
std::vector<VertexSet> enumerate_maximal(VertexSet ground, const std::function<bool(VertexSet, Vertex)>& fits,
                                         const std::function<bool(Vertex, VertexSet, VertexSet)>& blockable,
                                         const std::function<bool(Vertex, VertexSet)>& blocked) {
  const std::vector<Vertex> order = ground.to_vector();
  std::vector<VertexSet> out;
  std::function<void(std::size_t, VertexSet, VertexSet)> walk = [&](std::size_t i, VertexSet chosen, VertexSet excluded) {
    if (i == order.size()) {
      for (Vertex x : excluded) {
        if (!blocked(x, chosen)) return;
      }
      out.push_back(chosen);
      return;
    }
    const Vertex v = order[i];
    VertexSet undecided;
    for (std::size_t k = i + 1; k < order.size(); ++k) undecided = undecided.with(order[k]);
    if (fits(chosen, v)) walk(i + 1, chosen.with(v), excluded);
    const VertexSet now_excluded = excluded.with(v);
    for (Vertex x : now_excluded) {
      if (!blockable(x, chosen, undecided)) return;
    }
    walk(i + 1, chosen, now_excluded);
  };
  walk(0, VertexSet{}, VertexSet{});
  return out;
}

}  // namespace

SimplicialComplex ind_r_complex(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive, got " + std::to_string(r));
  auto fits = [&](VertexSet chosen, Vertex v) { return component_of(g, v, chosen.with(v)).size() <= r; };
  auto blockable = [&](Vertex x, VertexSet chosen, VertexSet reach) {
    return component_of(g, x, (chosen | reach).with(x)).size() > r;
  };
  auto blocked = [&](Vertex x, VertexSet chosen) { return component_of(g, x, chosen.with(x)).size() > r; };
  return SimplicialComplex::from_faces(g.vertices(), enumerate_maximal(g.vertices(), fits, blockable, blocked));
}

SimplicialComplex independence_complex(const Hypergraph& h) {
  std::vector<std::vector<VertexSet>> through(kMaxVertices);
  for (VertexSet e : h.edges()) {
    for (Vertex v : e) through[static_cast<std::size_t>(v)].push_back(e);
  }
  auto closes_edge = [&](Vertex x, VertexSet pool) {
    const auto& es = through[static_cast<std::size_t>(x)];
    return std::any_of(es.begin(), es.end(), [&](VertexSet e) { return e.without(x).subset_of(pool); });
  };
  auto fits = [&](VertexSet chosen, Vertex v) { return !closes_edge(v, chosen); };
  auto blockable = [&](Vertex x, VertexSet chosen, VertexSet reach) { return closes_edge(x, chosen | reach); };
  auto blocked = [&](Vertex x, VertexSet chosen) { return closes_edge(x, chosen); };
  return SimplicialComplex::from_faces(h.vertices(), enumerate_maximal(h.vertices(), fits, blockable, blocked));
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet f) {
  if (!d.is_face(f)) throw Error(ErrorKind::NotAFace, f.to_string() + " is not a face");
  std::vector<VertexSet> faces;
  for (VertexSet facet : d.facets()) {
    if (f.subset_of(facet)) faces.push_back(facet - f);
  }
  return SimplicialComplex::from_faces(d.ground() - f, std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& d, VertexSet f) {
  std::vector<VertexSet> faces;
  for (VertexSet facet : d.facets()) faces.push_back(facet - f);
  return SimplicialComplex::from_faces(d.ground() - f, std::move(faces));
}

SimplicialComplex cone(const SimplicialComplex& d, Vertex apex) {
  if (d.ground().contains(apex)) throw Error(ErrorKind::InvalidVertex, "apex already in the ground set");
  std::vector<VertexSet> faces;
  for (VertexSet facet : d.facets()) faces.push_back(facet.with(apex));
  return SimplicialComplex::from_faces(d.ground().with(apex), std::move(faces));
}

SimplicialComplex relabel(const SimplicialComplex& d, const std::vector<Vertex>& map) {
  auto apply = [&](VertexSet s) {
    VertexSet out;
    for (Vertex v : s) {
      if (static_cast<std::size_t>(v) >= map.size()) throw Error(ErrorKind::InvalidVertex, "no image for " + std::to_string(v));
      out = out.with(map[static_cast<std::size_t>(v)]);
    }
    return out;
  };
  std::vector<VertexSet> faces;
  for (VertexSet facet : d.facets()) faces.push_back(apply(facet));
  if (faces.empty()) return SimplicialComplex::void_complex(apply(d.ground()));
  return SimplicialComplex::from_faces(apply(d.ground()), std::move(faces));
}

}  // namespace indshell
