#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "indshell/constructions.hpp"
#include "indshell/enumerate.hpp"
#include "indshell/error.hpp"
#include "oracles.hpp"

using namespace indshell;
using namespace fixtures;

TEST_CASE("graph rejects loops and duplicate edges") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), Error);
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("induced_subgraph") {
  const auto sub = induced_subgraph(cycle(4), VertexSet{0, 1, 2});
  CHECK(sub.graph == path(3));
  CHECK(sub.original == std::vector<Vertex>{0, 1, 2});
  const Graph k4 = complete(4);
  CHECK(induced_subgraph(k4, k4.vertices()).graph == k4);
  CHECK(induced_subgraph(k4, VertexSet{0, 2}).graph == complete(2));
  CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{0, 7}), Error);
}

TEST_CASE("induced_subgraph composes") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(7, 0.5, rng());
    const VertexSet a(rng() & 0x7f);
    const auto outer = induced_subgraph(g, a);
    const VertexSet b(rng() & ((std::uint64_t{1} << outer.graph.vertex_count()) - 1));
    const auto inner = induced_subgraph(outer.graph, b);
    VertexSet mapped;
    for (Vertex v : b) mapped = mapped.with(outer.original[static_cast<std::size_t>(v)]);
    CHECK(inner.graph == induced_subgraph(g, mapped).graph);
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(path(4)) == sets({{0, 1, 2, 3}}));
  CHECK(connected_components(Graph::from_edges(4, {{0, 1}, {2, 3}})) == sets({{0, 1}, {2, 3}}));
  CHECK(connected_components(Graph(3)) == sets({{0}, {1}, {2}}));
}

TEST_CASE("diameter") {
  CHECK(diameter(path(6)) == 5);
  CHECK(diameter(complete(4)) == 1);
  CHECK(diameter(cycle(4)) == 2);
  CHECK_FALSE(diameter(Graph(2)).has_value());
  CHECK_THROWS_AS(diameter(Graph(0)), Error);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(7, 0.4, rng());
    const auto d = oracle::distances(g);
    int best = 0;
    bool finite = true;
    for (const auto& row : d) {
      for (int x : row) {
        if (x >= (1 << 20)) finite = false;
        best = std::max(best, x);
      }
    }
    if (finite) {
      CHECK(diameter(g) == best);
    } else {
      CHECK_FALSE(diameter(g).has_value());
    }
  }
}

TEST_CASE("simplicial_vertices") {
  CHECK(simplicial_vertices(cycle(4)).empty());
  CHECK(simplicial_vertices(complete(3)) == VertexSet{0, 1, 2});
  CHECK(simplicial_vertices(path(3)) == VertexSet{0, 2});
}

TEST_CASE("elimination_layers") {
  CHECK(elimination_layers(complete(4)).layers == sets({{0, 1, 2, 3}}));
  CHECK(elimination_layers(path(4)).layers == sets({{0, 3}, {1, 2}}));
  CHECK(elimination_layers(cycle(4)).layers.empty());
}

TEST_CASE("first layer is the simplicial set; chordal iff layers exhaust") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto layers = elimination_layers(g);
      if (!layers.layers.empty()) CHECK(layers.layers.front() == simplicial_vertices(g));
      const bool chordal = oracle::chordal(g);
      CHECK(is_chordal(g) == chordal);
      CHECK((layers.covered() == g.vertices()) == chordal);
      // Each layer is simplicial once the earlier layers are gone.
      VertexSet gone;
      for (VertexSet layer : layers.layers) {
        CHECK(layer == simplicial_vertices(g, g.vertices() - gone));
        gone |= layer;
      }
    }
  }
}

TEST_CASE("clique_shadow") {
  const Graph p4 = path(4);
  const auto l4 = elimination_layers(p4);
  CHECK(clique_shadow(p4, l4, 1) == VertexSet{0});
  CHECK_THROWS_AS(clique_shadow(p4, l4, 0), Error);
  const Graph k13 = star(3);
  CHECK(clique_shadow(k13, elimination_layers(k13), 0) == VertexSet{1, 2, 3});
}

TEST_CASE("clique_shadow on block graphs is nonempty for every V_2 vertex") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : all_block_graphs(n)) {
      const auto layers = elimination_layers(g);
      if (layers.layers.size() < 2) continue;
      for (Vertex v : layers.layers[1]) CHECK(clique_shadow(g, layers, v).size() >= 1);
    }
  }
}

TEST_CASE("blocks") {
  const auto p3 = blocks(path(3));
  CHECK(p3.blocks == sets({{0, 1}, {1, 2}}));
  CHECK(p3.cut_vertices == VertexSet{1});
  const auto k4 = blocks(complete(4));
  CHECK(k4.blocks == sets({{0, 1, 2, 3}}));
  CHECK(k4.cut_vertices.empty());
  const auto bowtie = blocks(Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
  CHECK(bowtie.blocks.size() == 2);
  CHECK(bowtie.cut_vertices == VertexSet{2});
}

TEST_CASE("cut vertices are the vertices in two or more blocks") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(8, 0.3, rng());
    const auto b = blocks(g);
    VertexSet twice;
    VertexSet once;
    for (VertexSet block : b.blocks) {
      twice |= once & block;
      once |= block;
    }
    CHECK(b.cut_vertices == twice);
    CHECK(once == g.vertices());
  }
}

TEST_CASE("block graph recognizer matches chordal + diamond-free") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const bool expected = oracle::block_graph(g);
      CHECK(is_block_graph(g) == expected);
      bool every_block_clique = true;
      for (VertexSet b : blocks(g).blocks) every_block_clique = every_block_clique && is_clique(g, b);
      CHECK(every_block_clique == expected);
    }
  }
}

TEST_CASE("classify_families") {
  const auto c4 = classify_families(cycle(4));
  CHECK_FALSE(c4.is_chordal);
  CHECK_FALSE(c4.is_block_graph);
  CHECK_FALSE(c4.is_forest);

  const auto t3 = classify_families(t3_graph().graph);
  CHECK(t3.is_chordal);
  CHECK(t3.is_block_graph);
  CHECK_FALSE(t3.is_forest);
  CHECK_FALSE(t3.is_t1);
  // Every maximum clique path of T3 leaves an off-path edge (x4x8, x5x6 or
  // x2x3) meeting it away from the connectors, so T3 is not T2 either.
  CHECK_FALSE(t3.is_t2);
  CHECK(maximum_clique_paths(t3_graph().graph).size() == 3);

  const auto p6 = classify_families(path(6));
  CHECK(p6.is_forest);
  CHECK(p6.is_tree);
  CHECK(p6.is_caterpillar);
  CHECK(p6.is_lobster);
  CHECK(p6.is_t1);
  CHECK(p6.is_t2);
}

TEST_CASE("family hierarchy on all trees up to 9 vertices") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& g : all_trees(n)) {
      const auto f = classify_families(g);
      CHECK(f.is_tree);
      CHECK(f.is_forest);
      CHECK(f.is_block_graph);
      if (f.is_caterpillar) CHECK(f.is_lobster);
      // For trees the clique-path definitions reduce to caterpillar / lobster.
      CHECK(f.is_t1 == f.is_caterpillar);
      CHECK(f.is_t2 == f.is_lobster);
      if (f.is_t1) CHECK(f.is_t2);
    }
  }
}

TEST_CASE("T1 implies T2 on block graphs") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_connected_block_graphs(n)) {
      if (is_t1_graph(g)) CHECK(is_t2_graph(g));
    }
  }
}

TEST_CASE("contains_induced") {
  const Graph t3 = t3_graph().graph;
  const auto witness = find_induced(t3, t3);
  REQUIRE(witness.has_value());
  for (auto [u, v] : t3.edges()) CHECK(t3.adjacent((*witness)[static_cast<std::size_t>(u)], (*witness)[static_cast<std::size_t>(v)]));
  CHECK_FALSE(contains_induced(cycle(4), path(4)));
  CHECK_FALSE(contains_induced(path(9), t3));
}

TEST_CASE("contains_induced agrees with exhaustive embedding search") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(6, 0.5, rng());
    const Graph h = random_graph(3 + static_cast<int>(rng() % 2), 0.5, rng());
    const auto w = find_induced(g, h);
    CHECK(w.has_value() == oracle::contains_induced(g, h));
    if (w) {
      for (Vertex a = 0; a < h.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < h.vertex_count(); ++b) {
          CHECK(h.adjacent(a, b) == g.adjacent((*w)[static_cast<std::size_t>(a)], (*w)[static_cast<std::size_t>(b)]));
        }
      }
    }
  }
}

TEST_CASE("maximum_clique_path") {
  const auto p4 = maximum_clique_path(path(4));
  CHECK(p4.length() == 3);
  CHECK(p4.connectors == std::vector<Vertex>{1, 2});
  const auto k5 = maximum_clique_path(complete(5));
  CHECK(k5.length() == 1);
  CHECK(k5.cliques == sets({{0, 1, 2, 3, 4}}));
  const LabeledGraph t3 = t3_graph();
  const auto p = maximum_clique_path(t3.graph);
  CHECK(p.length() == 5);
  CHECK_THROWS_AS(maximum_clique_path(cycle(4)), Error);
}

TEST_CASE("maximum clique paths are valid clique paths; on trees they are longest paths") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : all_connected_block_graphs(n)) {
      const CliquePath p = maximum_clique_path(g);
      for (VertexSet b : p.cliques) CHECK(is_clique(g, b));
      for (std::size_t i = 0; i + 1 < p.cliques.size(); ++i) {
        CHECK((p.cliques[i] & p.cliques[i + 1]) == VertexSet::single(p.connectors[i]));
        for (std::size_t j = i + 2; j < p.cliques.size(); ++j) CHECK_FALSE(p.cliques[i].intersects(p.cliques[j]));
      }
      if (is_tree(g)) {
        const auto d = oracle::distances(g);
        int diam = 0;
        for (const auto& row : d) diam = std::max(diam, *std::max_element(row.begin(), row.end()));
        CHECK(p.length() == diam);
      }
    }
  }
}
