#include "indshell/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "indshell/error.hpp"

namespace indshell {

Vertex LabeledGraph::vertex(const std::string& name) const {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw Error(ErrorKind::InvalidVertex, "no vertex labelled " + name);
  return static_cast<Vertex>(it - labels.begin());
}

std::string LabeledGraph::label(Vertex v) const {
  if (v >= 0 && static_cast<std::size_t>(v) < labels.size()) return labels[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

VertexSet LabeledGraph::vertices(const std::vector<std::string>& names) const {
  VertexSet out;
  for (const auto& n : names) out = out.with(vertex(n));
  return out;
}

LabeledGraph with_index_labels(const Graph& g) {
  LabeledGraph out{g, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.labels.push_back(std::to_string(v));
  return out;
}

namespace {

// Grows a labelled graph one vertex at a time.
class Builder {
 public:
  Builder() = default;
  explicit Builder(const LabeledGraph& start) : edges_(start.graph.edges()), labels_(start.labels) {}

  Vertex add(std::string label) {
    if (static_cast<int>(labels_.size()) >= kMaxVertices) {
      throw Error(ErrorKind::TooLarge, "construction exceeds " + std::to_string(kMaxVertices) + " vertices");
    }
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }
  void join(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (std::find(edges_.begin(), edges_.end(), Edge{u, v}) == edges_.end()) edges_.emplace_back(u, v);
  }
  void make_clique(VertexSet s) {
    for (Vertex u : s) {
      for (Vertex v : s) {
        if (u < v) join(u, v);
      }
    }
  }
  LabeledGraph build() const {
    Graph g(static_cast<int>(labels_.size()));
    for (auto [u, v] : edges_) g.add_edge(u, v);
    return {g, labels_};
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Hangs cliques of the given sizes (new vertices only) at `centre`.
void hang_cliques(Builder& b, Vertex centre, const std::string& prefix, const std::vector<int>& sizes) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw Error(ErrorKind::InvalidInput, "star-clique cliques need at least one new vertex");
    VertexSet clique = VertexSet::single(centre);
    for (int j = 0; j < sizes[i]; ++j) {
      clique = clique.with(b.add(prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    }
    b.make_clique(clique);
  }
}

int star_order(const std::vector<int>& sizes) { return 1 + std::accumulate(sizes.begin(), sizes.end(), 0); }

}  // namespace

LabeledGraph star_clique(const std::vector<int>& clique_sizes) {
  if (clique_sizes.empty()) throw Error(ErrorKind::InvalidInput, "a star-clique needs at least one clique");
  Builder b;
  const Vertex centre = b.add("x");
  hang_cliques(b, centre, "b", clique_sizes);
  return b.build();
}

CliquePathGraph clique_path(const std::vector<int>& clique_sizes) {
  if (clique_sizes.empty()) throw Error(ErrorKind::InvalidInput, "a clique path needs at least one clique");
  Builder b;
  CliquePath path;
  Vertex carry = -1;
  for (std::size_t i = 0; i < clique_sizes.size(); ++i) {
    const int size = clique_sizes[i];
    if (size < 2 && clique_sizes.size() > 1) throw Error(ErrorKind::InvalidInput, "clique path cliques need >= 2 vertices");
    if (size < 1) throw Error(ErrorKind::InvalidInput, "empty clique");
    VertexSet clique;
    if (carry >= 0) clique = clique.with(carry);
    const bool last = i + 1 == clique_sizes.size();
    const int fresh = size - (carry >= 0 ? 1 : 0);
    Vertex newest = -1;
    for (int j = 0; j < fresh; ++j) {
      // The last new vertex of a non-final clique is the next connector.
      const bool connector = !last && j == fresh - 1;
      newest = b.add(connector ? "x" + std::to_string(i + 1) : "b" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      clique = clique.with(newest);
    }
    b.make_clique(clique);
    path.cliques.push_back(clique);
    if (!last) {
      path.connectors.push_back(newest);
      carry = newest;
    }
  }
  return {b.build(), path};
}

CliqueCycleGraph clique_cycle(const std::vector<int>& clique_sizes) {
  const int n = static_cast<int>(clique_sizes.size());
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a clique cycle needs at least three cliques");
  for (int s : clique_sizes) {
    if (s < 2) throw Error(ErrorKind::InvalidInput, "clique cycle cliques need >= 2 vertices");
  }
  Builder b;
  CliqueCycleGraph out;
  for (int i = 0; i < n; ++i) out.connectors.push_back(b.add("x" + std::to_string(i + 1)));
  for (int i = 0; i < n; ++i) {
    // B_i holds x_{i-1} and x_i (B_1 holds x_n and x_1).
    const Vertex prev = out.connectors[static_cast<std::size_t>((i + n - 1) % n)];
    const Vertex next = out.connectors[static_cast<std::size_t>(i)];
    VertexSet clique = VertexSet::single(prev).with(next);
    for (int j = 0; j < clique_sizes[static_cast<std::size_t>(i)] - 2; ++j) {
      clique = clique.with(b.add("b" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    }
    b.make_clique(clique);
    out.cliques.push_back(clique);
  }
  out.graph = b.build();
  return out;
}

LabeledGraph attach_star_cliques(const LabeledGraph& host, VertexSet s, int r, const Attachments& sizes,
                                 bool require_cover) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  if (!s.subset_of(host.graph.vertices())) throw Error(ErrorKind::InvalidVertex, "attachment set leaves the host");
  if (require_cover) {
    for (auto [u, v] : host.graph.edges()) {
      if (!s.contains(u) && !s.contains(v)) {
        throw Error(ErrorKind::NotAVertexCover, "edge " + host.label(u) + "-" + host.label(v) + " is uncovered");
      }
    }
  }
  Builder b(host);
  for (Vertex x : s) {
    auto it = sizes.find(x);
    if (it == sizes.end()) throw Error(ErrorKind::InvalidInput, "no star-clique given for " + host.label(x));
    if (star_order(it->second) < r + 1) {
      throw Error(ErrorKind::InvalidInput, "star-clique at " + host.label(x) + " has fewer than r+1 vertices");
    }
    hang_cliques(b, x, "sc(" + host.label(x) + ")", it->second);
  }
  return b.build();
}

LabeledGraph whiskered(const LabeledGraph& host) {
  Attachments pendants;
  for (Vertex v = 0; v < host.graph.vertex_count(); ++v) pendants[v] = {1};
  LabeledGraph out = attach_star_cliques(host, host.graph.vertices(), 1, pendants, false);
  for (Vertex v = host.graph.vertex_count(); v < out.graph.vertex_count(); ++v) {
    out.labels[static_cast<std::size_t>(v)] = "w(" + host.label(v - host.graph.vertex_count()) + ")";
  }
  return out;
}

CliquePartition trivial_partition(const Graph& g, int t) {
  CliquePartition p;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    p.parts.push_back(VertexSet::single(v));
    p.whisker_counts.push_back(t);
  }
  return p;
}

LabeledGraph clique_whisker(const LabeledGraph& host, const CliquePartition& p) {
  if (p.parts.size() != p.whisker_counts.size()) {
    throw Error(ErrorKind::InvalidPartition, "one whisker count per part is required");
  }
  VertexSet covered;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const VertexSet part = p.parts[i];
    if (part.intersects(covered)) throw Error(ErrorKind::InvalidPartition, "parts overlap at " + (part & covered).to_string());
    if (!part.subset_of(host.graph.vertices())) throw Error(ErrorKind::InvalidPartition, "part leaves the vertex set");
    if (!is_clique(host.graph, part)) throw Error(ErrorKind::InvalidPartition, part.to_string() + " is not a clique");
    if (p.whisker_counts[i] < 1) throw Error(ErrorKind::InvalidPartition, "whisker counts must be >= 1");
    covered |= part;
  }
  if (covered != host.graph.vertices()) throw Error(ErrorKind::InvalidPartition, "parts do not cover every vertex");
  Builder b(host);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    VertexSet clique = p.parts[i];
    for (int j = 0; j < p.whisker_counts[i]; ++j) {
      clique = clique.with(b.add("w" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
    }
    b.make_clique(clique);
  }
  return b.build();
}

LabeledGraph clique_cycle_with_attachments(const std::vector<int>& clique_sizes, const Attachments& at_connector,
                                           int r) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  CliqueCycleGraph cycle = clique_cycle(clique_sizes);
  Builder b(cycle.graph);
  bool large_enough = false;
  for (const auto& [index, sizes] : at_connector) {
    if (index < 0 || index >= static_cast<int>(cycle.connectors.size())) {
      throw Error(ErrorKind::InvalidVertex, "connector index " + std::to_string(index) + " out of range");
    }
    const Vertex x = cycle.connectors[static_cast<std::size_t>(index)];
    hang_cliques(b, x, "sc(" + cycle.graph.label(x) + ")", sizes);
    large_enough = large_enough || star_order(sizes) >= r + 1;
  }
  if (!large_enough) throw Error(ErrorKind::InvalidInput, "no attached star-clique has r+1 vertices");
  return b.build();
}

LabeledGraph counterexample_gt(int r, const Graph& h1, const Graph& h2, const Graph& h3) {
  if (r < 4) throw Error(ErrorKind::InvalidInput, "the G_t construction needs r >= 4");
  const Graph* hs[3] = {&h1, &h2, &h3};
  for (const Graph* h : hs) {
    if (h->vertex_count() < std::max(1, r - 3)) throw Error(ErrorKind::InvalidInput, "each H_i needs at least r-3 vertices");
    if (!is_connected(*h)) throw Error(ErrorKind::InvalidInput, "each H_i must be connected");
  }
  Builder b;
  for (int i = 1; i <= 7; ++i) b.add("v" + std::to_string(i));
  const Edge spider[] = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  for (auto [u, v] : spider) b.join(u, v);
  const Vertex anchors[3] = {2, 4, 6};  // v3, v5, v7
  for (int i = 0; i < 3; ++i) {
    const Graph& h = *hs[i];
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      ids.push_back(b.add(v == 0 ? "u" + std::to_string(i + 1)
                                 : "h" + std::to_string(i + 1) + "_" + std::to_string(v + 1)));
    }
    for (auto [u, v] : h.edges()) b.join(ids[static_cast<std::size_t>(u)], ids[static_cast<std::size_t>(v)]);
    b.join(anchors[i], ids.front());
  }
  return b.build();
}

LabeledGraph counterexample_gt_paths(int r, int t) {
  if (t < 1) throw Error(ErrorKind::InvalidInput, "t must be positive");
  Graph path(t);
  for (Vertex v = 0; v + 1 < t; ++v) path.add_edge(v, v + 1);
  return counterexample_gt(r, path, path, path);
}

SheHigherFamily she_higher_family(int n, int t) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "she-higher family needs n >= 2");
  if (t < 1) throw Error(ErrorKind::InvalidInput, "she-higher family needs t >= 1");
  Builder hb;
  for (int i = 1; i <= n; ++i) hb.add("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) hb.add("b" + std::to_string(i));
  const Vertex c = hb.add("c");
  const Vertex d = hb.add("d");
  for (int i = 0; i + 1 < n; ++i) {
    hb.join(i, i + 1);
    hb.join(n + i, n + i + 1);
  }
  const Vertex a1 = 0;
  const Vertex b1 = n;
  hb.join(a1, c);
  hb.join(a1, d);
  hb.join(b1, c);
  hb.join(b1, d);
  hb.join(c, d);
  SheHigherFamily out;
  out.h = hb.build();
  Attachments sizes;
  for (Vertex v = 0; v < out.h.graph.vertex_count(); ++v) sizes[v] = {t};
  out.g = attach_star_cliques(out.h, out.h.graph.vertices(), t, sizes, false);
  out.critical_r = n * t + n;
  out.contraction_set = out.g.graph.vertices() - VertexSet{a1, b1, c, d};
  return out;
}

LabeledGraph t3_graph() {
  Builder b;
  for (int i = 1; i <= 9; ++i) b.add("x" + std::to_string(i));
  // x1x2, x2x3, x3x4, x3x5, x4x5, x5x6, x6x7, x4x8, x8x9
  const Edge es[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}};
  for (auto [u, v] : es) b.join(u, v);
  return b.build();
}

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph random_tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, uniform(rng, 0, v - 1));
  return g;
}

Graph random_block_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<VertexSet> cliques;
  for (Vertex v = 1; v < n; ++v) {
    if (!cliques.empty() && uniform(rng, 0, 2) == 0) {
      // Grow an existing block into a bigger clique.
      VertexSet& block = cliques[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cliques.size()) - 1))];
      for (Vertex u : block) g.add_edge(u, v);
      block = block.with(v);
    } else {
      const Vertex u = uniform(rng, 0, v - 1);
      g.add_edge(u, v);
      cliques.push_back(VertexSet{u, v});
    }
  }
  return g;
}

Graph random_chordal(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    // Join v to a random clique through a random earlier vertex; v is then
    // simplicial when added, so the reverse insertion order is a PEO.
    const Vertex u = uniform(rng, 0, v - 1);
    VertexSet clique = VertexSet::single(u);
    for (Vertex w : g.neighbors(u)) {
      if (uniform(rng, 0, 1) == 1 && clique.subset_of(g.neighbors(w))) clique = clique.with(w);
    }
    for (Vertex w : clique) g.add_edge(w, v);
  }
  return g;
}

// A clique path with pendant cliques at connectors, and for `second_level`
// further cliques hung off vertices of those pendant cliques.
Graph random_t_graph(int n, bool second_level, std::mt19937_64& rng) {
  Graph g(n);
  Vertex next = 0;
  auto take = [&]() { return next < n ? next++ : -1; };
  std::vector<Vertex> connectors;
  Vertex carry = take();
  const int path_blocks = std::max(1, uniform(rng, 1, std::max(1, n / 2)));
  for (int i = 0; i < path_blocks && next < n; ++i) {
    VertexSet clique = VertexSet::single(carry);
    const int fresh = uniform(rng, 1, 3);
    Vertex last = carry;
    for (int j = 0; j < fresh; ++j) {
      const Vertex v = take();
      if (v < 0) break;
      clique = clique.with(v);
      last = v;
    }
    for (Vertex a : clique) {
      for (Vertex b : clique) {
        if (a < b) g.add_edge(a, b);
      }
    }
    if (i + 1 < path_blocks && last != carry) {
      connectors.push_back(last);
      carry = last;
    }
  }
  std::vector<Vertex> hanging_vertices;
  while (next < n && !connectors.empty()) {
    const bool deeper = second_level && !hanging_vertices.empty() && uniform(rng, 0, 2) == 0;
    const Vertex at = deeper ? hanging_vertices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hanging_vertices.size()) - 1))]
                             : connectors[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(connectors.size()) - 1))];
    VertexSet clique = VertexSet::single(at);
    const int fresh = uniform(rng, 1, 2);
    for (int j = 0; j < fresh; ++j) {
      const Vertex v = take();
      if (v < 0) break;
      clique = clique.with(v);
      if (!deeper) hanging_vertices.push_back(v);
    }
    for (Vertex a : clique) {
      for (Vertex b : clique) {
        if (a < b) g.add_edge(a, b);
      }
    }
  }
  // Leftover vertices (no connector existed) extend the last clique.
  while (next < n) {
    const Vertex v = take();
    g.add_edge(v, v - 1);
  }
  return g;
}

bool certified(FamilyKind kind, const Graph& g) {
  switch (kind) {
    case FamilyKind::Tree: return is_tree(g);
    case FamilyKind::BlockGraph: return is_block_graph(g);
    case FamilyKind::T1: return is_t1_graph(g);
    case FamilyKind::T2: return is_t2_graph(g);
    case FamilyKind::Chordal: return is_chordal(g);
  }
  return false;
}

}  // namespace

Graph random_family(FamilyKind kind, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "random families need n >= 1");
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "too many vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g;
    switch (kind) {
      case FamilyKind::Tree: g = random_tree(n, rng); break;
      case FamilyKind::BlockGraph: g = random_block_graph(n, rng); break;
      case FamilyKind::T1: g = random_t_graph(n, false, rng); break;
      case FamilyKind::T2: g = random_t_graph(n, true, rng); break;
      case FamilyKind::Chordal: g = random_chordal(n, rng); break;
    }
    g = shuffled(g, rng);
    if (certified(kind, g)) return g;
  }
  throw Error(ErrorKind::InvalidInput, "could not draw a certified member of the family");
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace indshell
