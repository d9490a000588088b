#include "indshell/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "indshell/error.hpp"

namespace indshell {

namespace {

// Colour refinement with canonically numbered colours: a colour's id is the
// rank of its signature among all signatures of the round.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      sig[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(around)};
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return colour;
}

// Returns the best code and the position -> vertex map realising it.
std::pair<std::string, std::vector<Vertex>> canonical_labelling(const Graph& g) {
  const int n = g.vertex_count();
  const std::vector<int> colour = refined_colours(g);
  std::vector<Vertex> by_colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) by_colour[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_colour.begin(), by_colour.end(), [&](Vertex a, Vertex b) {
    return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
  });

  // Column-major upper triangle: placing position j fixes bits (i, j), i < j.
  std::string best;
  std::vector<Vertex> best_perm;
  std::string code;
  std::vector<Vertex> perm;
  VertexSet used;
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      if (best_perm.empty() || code < best) {
        best = code;
        best_perm = perm;
      }
      return;
    }
    const int want = colour[static_cast<std::size_t>(by_colour[static_cast<std::size_t>(pos)])];
    for (Vertex v : VertexSet::range(n) - used) {
      if (colour[static_cast<std::size_t>(v)] != want) continue;
      const std::size_t mark = code.size();
      for (Vertex u : perm) code.push_back(g.adjacent(u, v) ? '1' : '0');
      bool worse = !best_perm.empty() && code.compare(0, code.size(), best, 0, code.size()) > 0;
      if (!worse) {
        perm.push_back(v);
        used = used.with(v);
        place(pos + 1);
        used = used.without(v);
        perm.pop_back();
      }
      code.resize(mark);
    }
  };
  place(0);
  return {std::to_string(n) + ":" + best, best_perm};
}

template <typename Grow>
std::vector<Graph> grow_family(int n, Grow grow) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative order");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : level) {
      for (const Graph& child : grow(g)) {
        auto [code, perm] = canonical_labelling(child);
        if (!seen.contains(code)) seen.emplace(code, canonical_form(child));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(g);
  }
  return level;
}

Graph with_new_vertex(const Graph& g, VertexSet attach) {
  Graph out(g.vertex_count() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (Vertex u : attach) out.add_edge(u, g.vertex_count());
  return out;
}

// Unions of connected members whose sizes sum to n, deduplicated.
std::vector<Graph> unions_of(int n, const std::function<std::vector<Graph>(int)>& connected) {
  std::vector<std::vector<Graph>> parts(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) parts[static_cast<std::size_t>(k)] = connected(k);
  std::map<std::string, Graph> seen;
  std::function<void(int, int, const Graph&)> build = [&](int remaining, int max_part, const Graph& acc) {
    if (remaining == 0) {
      const std::string code = canonical_code(acc);
      if (!seen.contains(code)) seen.emplace(code, canonical_form(acc));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      for (const Graph& c : parts[static_cast<std::size_t>(part)]) build(remaining - part, part, disjoint_union(acc, c));
    }
  };
  build(n, n, Graph(0));
  std::vector<Graph> out;
  for (auto& [code, g] : seen) out.push_back(g);
  return out;
}

}  // namespace

std::string canonical_code(const Graph& g) { return canonical_labelling(g).first; }

Graph canonical_form(const Graph& g) {
  const auto perm = canonical_labelling(g).second;
  std::vector<Vertex> position(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) position[static_cast<std::size_t>(perm[i])] = static_cast<Vertex>(i);
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return out;
}

// Every graph on n vertices is a graph on n-1 vertices plus one vertex.
std::vector<Graph> all_graphs(int n) {
  if (n > 7) throw Error(ErrorKind::TooLarge, "exhaustive graph enumeration is limited to 7 vertices");
  return grow_family(n, [](const Graph& g) {
    std::vector<Graph> kids;
    const std::uint64_t subsets = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t s = 0; s < subsets; ++s) kids.push_back(with_new_vertex(g, VertexSet(s)));
    return kids;
  });
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> all_trees(int n) {
  return grow_family(n, [](const Graph& g) {
    std::vector<Graph> kids;
    for (Vertex v = 0; v < g.vertex_count(); ++v) kids.push_back(with_new_vertex(g, VertexSet::single(v)));
    return kids;
  });
}

std::vector<Graph> all_forests(int n) {
  if (n == 0) return {Graph(0)};
  return unions_of(n, all_trees);
}

std::vector<Graph> all_connected_block_graphs(int n) {
  return grow_family(n, [](const Graph& g) {
    std::vector<Graph> kids;
    for (Vertex v = 0; v < g.vertex_count(); ++v) kids.push_back(with_new_vertex(g, VertexSet::single(v)));
    for (VertexSet b : blocks(g).blocks) {
      if (b.size() >= 2) kids.push_back(with_new_vertex(g, b));
    }
    return kids;
  });
}

std::vector<Graph> all_block_graphs(int n) {
  if (n == 0) return {Graph(0)};
  return unions_of(n, all_connected_block_graphs);
}

}  // namespace indshell
