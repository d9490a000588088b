#include "indshell/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

#include "indshell/error.hpp"

namespace indshell {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " not in graph of order " +
                                              std::to_string(g.vertex_count()));
  }
}

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  adjacency_.assign(static_cast<std::size_t>(vertex_count), VertexSet{});
}

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw Error(ErrorKind::InvalidGraph, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at " + std::to_string(u));
  adjacency_[static_cast<std::size_t>(u)] = adjacency_[static_cast<std::size_t>(u)].with(v);
  adjacency_[static_cast<std::size_t>(v)] = adjacency_[static_cast<std::size_t>(v)].with(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet n : adjacency_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a) {
  for (Vertex v : a) check_vertex(g, v);
  InducedSubgraph out{Graph(a.size()), a.to_vector()};
  std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i]) & a) {
      Vertex j = index[static_cast<std::size_t>(w)];
      if (static_cast<Vertex>(i) < j) out.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return out;
}

Graph remove_vertices_keep_labels(const Graph& g, VertexSet removed) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    if (!removed.contains(u) && !removed.contains(v)) out.add_edge(u, v);
  }
  return out;
}

VertexSet component_of(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return component_of(g, within.min(), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(s.without(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.min(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 0; !frontier.empty(); ++d) {
    VertexSet next;
    for (Vertex v : frontier) {
      dist[static_cast<std::size_t>(v)] = d;
      next |= g.neighbors(v);
    }
    frontier = next - seen;
    seen |= frontier;
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorKind::InvalidInput, "diameter of the empty graph");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

VertexSet simplicial_vertices(const Graph& g, VertexSet within) {
  VertexSet out;
  for (Vertex v : within) {
    if (is_clique(g, g.neighbors(v) & within)) out = out.with(v);
  }
  return out;
}

VertexSet simplicial_vertices(const Graph& g) { return simplicial_vertices(g, g.vertices()); }

VertexSet EliminationLayers::covered() const {
  VertexSet all;
  for (VertexSet l : layers) all |= l;
  return all;
}

int EliminationLayers::layer_of(Vertex v) const {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].contains(v)) return static_cast<int>(i) + 1;
  }
  return 0;
}

EliminationLayers elimination_layers(const Graph& g) {
  EliminationLayers out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet layer = simplicial_vertices(g, rest);
    if (layer.empty()) break;
    out.layers.push_back(layer);
    rest -= layer;
  }
  return out;
}

VertexSet clique_shadow(const Graph& g, const EliminationLayers& layers, Vertex v) {
  check_vertex(g, v);
  if (layers.layer_of(v) != 2) {
    throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " is not in V_2");
  }
  const VertexSet first = layers.layers.front();
  std::vector<VertexSet> qualifying;
  for (VertexSet b : blocks(g).blocks) {
    if (b.contains(v) && b.without(v).subset_of(first) && is_clique(g, b)) qualifying.push_back(b);
  }
  if (qualifying.empty()) {
    throw Error(ErrorKind::NoQualifyingClique, "no clique through " + std::to_string(v) + " lies in V_1");
  }
  int largest = 0;
  for (VertexSet b : qualifying) largest = std::max(largest, b.size());
  VertexSet shadow;
  for (VertexSet b : qualifying) {
    if (b.size() == largest) shadow |= b;
  }
  return shadow.without(v);
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  BlockDecomposition out;
  int timer = 0;

  // Recursion depth is bounded by the 64-vertex limit.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
          VertexSet block;
          for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            block = block.with(e.first).with(e.second);
            if (e == Edge{u, w}) break;
          }
          out.blocks.push_back(block);
        }
      } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, w);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[static_cast<std::size_t>(v)] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[static_cast<std::size_t>(v)] = timer++;
      out.blocks.push_back(VertexSet::single(v));
      continue;
    }
    dfs(v, -1);
  }
  canonicalize(out.blocks);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (VertexSet b : out.blocks) {
    for (Vertex v : b) ++count[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (count[static_cast<std::size_t>(v)] >= 2) out.cut_vertices = out.cut_vertices.with(v);
  }
  return out;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search yields a reverse perfect elimination ordering
  // exactly when g is chordal.
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet numbered;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v : g.vertices() - numbered) {
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    order.push_back(pick);
    numbered = numbered.with(pick);
    for (Vertex w : g.neighbors(pick) - numbered) ++weight[static_cast<std::size_t>(w)];
  }
  // order is the reverse of a PEO: each vertex's earlier neighbours must form
  // a clique.
  VertexSet before;
  for (Vertex v : order) {
    if (!is_clique(g, g.neighbors(v) & before)) return false;
    before = before.with(v);
  }
  return true;
}

bool is_block_graph(const Graph& g) {
  for (VertexSet b : blocks(g).blocks) {
    if (!is_clique(g, b)) return false;
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.vertex_count();
}

bool is_tree(const Graph& g) { return g.vertex_count() >= 1 && is_connected(g) && is_forest(g); }

VertexSet CliquePath::vertices() const {
  VertexSet all;
  for (VertexSet b : cliques) all |= b;
  return all;
}

namespace {

// Sort key realising the canonical tie-break between clique paths.
auto clique_path_key(const CliquePath& p) {
  std::vector<Vertex> sorted = p.connectors;
  std::sort(sorted.begin(), sorted.end());
  return std::make_tuple(sorted, p.connectors, p.cliques);
}

// Simple paths in the block-cut tree, walked from every block.
std::vector<CliquePath> all_block_paths(const std::vector<VertexSet>& bs) {
  std::vector<CliquePath> out;
  const int count = static_cast<int>(bs.size());
  std::vector<int> path;
  std::vector<Vertex> connectors;
  std::vector<bool> used(static_cast<std::size_t>(count), false);
  std::function<void(int)> extend = [&](int current) {
    CliquePath p;
    for (int i : path) p.cliques.push_back(bs[static_cast<std::size_t>(i)]);
    p.connectors = connectors;
    out.push_back(p);
    const VertexSet here = bs[static_cast<std::size_t>(current)];
    for (int next = 0; next < count; ++next) {
      if (used[static_cast<std::size_t>(next)]) continue;
      VertexSet shared = here & bs[static_cast<std::size_t>(next)];
      if (shared.empty()) continue;
      Vertex x = shared.min();
      // The connector may not already be used, and the new block must miss
      // every earlier block except through x.
      if (std::find(connectors.begin(), connectors.end(), x) != connectors.end()) continue;
      bool disjoint = true;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (bs[static_cast<std::size_t>(path[k])].intersects(bs[static_cast<std::size_t>(next)])) disjoint = false;
      }
      if (!disjoint) continue;
      used[static_cast<std::size_t>(next)] = true;
      path.push_back(next);
      connectors.push_back(x);
      extend(next);
      connectors.pop_back();
      path.pop_back();
      used[static_cast<std::size_t>(next)] = false;
    }
  };
  for (int start = 0; start < count; ++start) {
    used[static_cast<std::size_t>(start)] = true;
    path.push_back(start);
    extend(start);
    path.pop_back();
    used[static_cast<std::size_t>(start)] = false;
  }
  return out;
}

}  // namespace

std::vector<CliquePath> maximum_clique_paths(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g) || !is_block_graph(g)) {
    throw Error(ErrorKind::InvalidInput, "maximum clique paths need a connected block graph");
  }
  std::vector<CliquePath> paths = all_block_paths(blocks(g).blocks);
  int longest = 0;
  for (const auto& p : paths) longest = std::max(longest, p.length());
  std::vector<CliquePath> out;
  for (auto& p : paths) {
    if (p.length() != longest) continue;
    CliquePath reversed{{p.cliques.rbegin(), p.cliques.rend()}, {p.connectors.rbegin(), p.connectors.rend()}};
    // Keep one orientation of each undirected path.
    if (clique_path_key(reversed) < clique_path_key(p)) continue;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const CliquePath& a, const CliquePath& b) { return clique_path_key(a) < clique_path_key(b); });
  return out;
}

CliquePath maximum_clique_path(const Graph& g) { return maximum_clique_paths(g).front(); }

std::vector<std::vector<Vertex>> longest_paths(const Graph& tree) {
  if (!is_tree(tree)) throw Error(ErrorKind::InvalidInput, "longest_paths needs a tree");
  std::vector<std::vector<Vertex>> out;
  std::size_t best = 0;
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex)> walk = [&](Vertex v, Vertex parent) {
    path.push_back(v);
    if (path.size() > best) {
      best = path.size();
      out.clear();
    }
    if (path.size() == best && path.front() <= path.back()) out.push_back(path);
    for (Vertex w : tree.neighbors(v)) {
      if (w != parent) walk(w, v);
    }
    path.pop_back();
  };
  for (Vertex s = 0; s < tree.vertex_count(); ++s) walk(s, -1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool caterpillar_wrt(const Graph& g, const std::vector<Vertex>& path, int reach) {
  VertexSet on_path = VertexSet::from(path);
  VertexSet near = on_path;
  for (int step = 0; step < reach; ++step) {
    VertexSet grown = near;
    for (Vertex v : near) grown |= g.neighbors(v);
    near = grown;
  }
  return near == g.vertices();
}

enum class TKind { One, Two };

// Checks the off-path clique clauses for one candidate maximum clique path.
bool t_clauses_hold(const std::vector<VertexSet>& bs, const CliquePath& p, TKind kind) {
  const VertexSet on_path = p.vertices();
  VertexSet connectors;
  for (Vertex x : p.connectors) connectors = connectors.with(x);
  std::vector<VertexSet> hanging;  // cliques meeting P in exactly one connector
  std::vector<VertexSet> detached;
  for (VertexSet k : bs) {
    if (std::find(p.cliques.begin(), p.cliques.end(), k) != p.cliques.end()) continue;
    VertexSet meet = k & on_path;
    if (meet.size() == 1 && connectors.contains(meet.min())) {
      hanging.push_back(k);
    } else if (meet.empty()) {
      detached.push_back(k);
    } else {
      return false;
    }
  }
  if (kind == TKind::One) return detached.empty();
  for (VertexSet k : detached) {
    bool linked = std::any_of(hanging.begin(), hanging.end(), [k](VertexSet h) { return (k & h).size() == 1; });
    if (!linked) return false;
  }
  return true;
}

bool t_graph(const Graph& g, TKind kind) {
  if (!is_block_graph(g)) return false;
  for (VertexSet comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    std::vector<VertexSet> bs = blocks(sub.graph).blocks;
    bool ok = false;
    for (const CliquePath& p : maximum_clique_paths(sub.graph)) {
      if (t_clauses_hold(bs, p, kind)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_t1_graph(const Graph& g) { return t_graph(g, TKind::One); }
bool is_t2_graph(const Graph& g) { return t_graph(g, TKind::Two); }

FamilyFlags classify_families(const Graph& g) {
  FamilyFlags f;
  f.is_forest = is_forest(g);
  f.is_tree = f.is_forest && is_tree(g);
  f.is_chordal = is_chordal(g);
  f.is_block_graph = is_block_graph(g);
  if (f.is_tree) {
    for (const auto& path : longest_paths(g)) {
      f.is_caterpillar = f.is_caterpillar || caterpillar_wrt(g, path, 1);
      f.is_lobster = f.is_lobster || caterpillar_wrt(g, path, 2);
    }
  }
  if (f.is_block_graph) {
    f.is_t1 = is_t1_graph(g);
    f.is_t2 = is_t2_graph(g);
  }
  return f;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h) {
  const int hn = h.vertex_count();
  if (hn > g.vertex_count()) return std::nullopt;
  // Map pattern vertices in BFS order from high-degree roots so each new
  // vertex is usually constrained by an already mapped neighbour.
  std::vector<Vertex> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < hn) {
    Vertex root = -1;
    for (Vertex v : h.vertices() - placed) {
      if (root < 0 || h.degree(v) > h.degree(root)) root = v;
    }
    std::vector<Vertex> queue{root};
    placed = placed.with(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (Vertex w : h.neighbors(queue[i]) - placed) {
        placed = placed.with(w);
        queue.push_back(w);
      }
    }
  }

  std::vector<Vertex> image(static_cast<std::size_t>(hn), -1);
  VertexSet used;
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const Vertex hv = order[depth];
    for (Vertex gv : g.vertices() - used) {
      if (g.degree(gv) < h.degree(hv)) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        Vertex hu = order[k];
        consistent = h.adjacent(hv, hu) == g.adjacent(gv, image[static_cast<std::size_t>(hu)]);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(hv)] = gv;
      used = used.with(gv);
      if (place(depth + 1)) return true;
      used = used.without(gv);
    }
    image[static_cast<std::size_t>(hv)] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

bool contains_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

}  // namespace indshell
