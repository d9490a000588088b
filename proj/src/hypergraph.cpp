#include "indshell/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "indshell/error.hpp"

namespace indshell {

Hypergraph Hypergraph::make(VertexSet vertices, std::vector<VertexSet> raw_edges) {
  for (VertexSet e : raw_edges) {
    if (e.empty()) throw Error(ErrorKind::InvalidEdge, "empty edge");
    if (!e.subset_of(vertices)) {
      throw Error(ErrorKind::InvalidEdge, "edge " + e.to_string() + " leaves vertex set " + vertices.to_string());
    }
  }
  return Hypergraph(vertices, minimal_sets(std::move(raw_edges)));
}

Hypergraph delete_vertices(const Hypergraph& h, VertexSet vs) {
  std::vector<VertexSet> kept;
  kept.reserve(h.edges_.size());
  for (VertexSet e : h.edges_) {
    if (!e.intersects(vs)) kept.push_back(e);
  }
  // A subfamily of an antichain is an antichain and stays sorted.
  return Hypergraph(h.vertices_ - vs, std::move(kept));
}

Hypergraph contract_vertices(const Hypergraph& h, VertexSet vs) {
  std::vector<VertexSet> shrunk;
  shrunk.reserve(h.edges_.size());
  for (VertexSet e : h.edges_) {
    VertexSet rest = e - vs;
    if (rest.empty()) throw Error(ErrorKind::EmptyEdgeCollapse, "edge " + e.to_string() + " lies in the contraction");
    shrunk.push_back(rest);
  }
  return Hypergraph(h.vertices_ - vs, minimal_sets(std::move(shrunk)));
}

namespace {

void require_vertex(const Hypergraph& h, Vertex v) {
  if (!h.vertices().contains(v)) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " not in hypergraph");
}

}  // namespace

Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  require_vertex(h, v);
  return delete_vertices(h, VertexSet::single(v));
}

Hypergraph contract_vertex(const Hypergraph& h, Vertex v) {
  require_vertex(h, v);
  return contract_vertices(h, VertexSet::single(v));
}

bool minor_is_defined(const Hypergraph& h, const MinorSpec& spec) {
  if (spec.deleted.intersects(spec.contracted)) return false;
  if (!(spec.deleted | spec.contracted).subset_of(h.vertices())) return false;
  return std::none_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) {
    return !e.intersects(spec.deleted) && e.subset_of(spec.contracted);
  });
}

Hypergraph minor(const Hypergraph& h, const MinorSpec& spec) {
  if (spec.deleted.intersects(spec.contracted)) {
    throw Error(ErrorKind::InvalidVertex, "deleted and contracted sets overlap");
  }
  if (!(spec.deleted | spec.contracted).subset_of(h.vertices())) {
    throw Error(ErrorKind::InvalidVertex, "minor spec names vertices outside the hypergraph");
  }
  return contract_vertices(delete_vertices(h, spec.deleted), spec.contracted);
}

bool is_hyper_simplicial(const Hypergraph& h, Vertex v) {
  std::vector<VertexSet> through;
  for (VertexSet e : h.edges()) {
    if (e.contains(v)) through.push_back(e);
  }
  for (std::size_t i = 0; i < through.size(); ++i) {
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      const VertexSet room = (through[i] | through[j]).without(v);
      bool found = std::any_of(h.edges().begin(), h.edges().end(), [room](VertexSet e) { return e.subset_of(room); });
      if (!found) return false;
    }
  }
  return true;
}

VertexSet hyper_simplicial_vertices(const Hypergraph& h) {
  VertexSet out;
  for (Vertex v : h.vertices()) {
    if (is_hyper_simplicial(h, v)) out = out.with(v);
  }
  return out;
}

bool has_hyper_simplicial_vertex(const Hypergraph& h) {
  // Vertices in at most one edge are simplicial, so check those first.
  VertexSet seen_once;
  VertexSet seen_twice;
  for (VertexSet e : h.edges()) {
    seen_twice |= seen_once & e;
    seen_once |= e;
  }
  if (!(h.vertices() - seen_twice).empty()) return true;
  for (Vertex v : h.vertices()) {
    if (is_hyper_simplicial(h, v)) return true;
  }
  return false;
}

bool has_singleton(const Hypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(), [](VertexSet e) { return e.size() == 1; });
}

void for_each_subset_by_size(VertexSet universe, const std::function<bool(VertexSet)>& visit) {
  const std::vector<Vertex> items = universe.to_vector();
  const int n = static_cast<int>(items.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      VertexSet s;
      for (int i : idx) s = s.with(items[static_cast<std::size_t>(i)]);
      if (!visit(s)) return;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

void for_each_contraction(const Hypergraph& h, ContractionFilter filter,
                          const std::function<void(VertexSet, const Hypergraph&)>& visit) {
  for_each_subset_by_size(h.vertices(), [&](VertexSet vc) {
    const MinorSpec spec{VertexSet{}, vc};
    if (!minor_is_defined(h, spec)) return true;
    Hypergraph result = contract_vertices(h, vc);
    if (filter == ContractionFilter::CPrime && has_singleton(result)) return true;
    visit(vc, result);
    return true;
  });
}

std::vector<Contraction> enumerate_contractions(const Hypergraph& h, ContractionFilter filter) {
  std::vector<Contraction> out;
  for_each_contraction(h, filter, [&](VertexSet vc, const Hypergraph& result) { out.push_back({vc, result}); });
  return out;
}

}  // namespace indshell
