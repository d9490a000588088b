#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "indshell/constructions.hpp"
#include "indshell/enumerate.hpp"
#include "oracles.hpp"

using namespace indshell;
using namespace fixtures;

TEST_CASE("known class counts") {
  // Graphs (OEIS A000088), connected graphs (A001349), trees (A000055),
  // forests (A005195), connected block graphs (A035053).
  const std::vector<std::size_t> graphs{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == graphs[static_cast<std::size_t>(n - 1)]);
    CHECK(all_connected_graphs(n).size() == connected[static_cast<std::size_t>(n - 1)]);
  }
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (int n = 1; n <= 11; ++n) CHECK(all_trees(n).size() == trees[static_cast<std::size_t>(n - 1)]);
  const std::vector<std::size_t> forests{1, 2, 3, 6, 10, 20, 37, 76, 153};
  for (int n = 1; n <= 9; ++n) CHECK(all_forests(n).size() == forests[static_cast<std::size_t>(n - 1)]);
  const std::vector<std::size_t> blocks{1, 1, 2, 4, 9, 22, 59, 165};
  for (int n = 1; n <= 8; ++n) CHECK(all_connected_block_graphs(n).size() == blocks[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("canonical_code is an isomorphism invariant that separates classes") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.45, rng());
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(oracle::isomorphic(g, canonical_form(g)));
    const Graph other = random_graph(n, 0.45, rng());
    CHECK((canonical_code(g) == canonical_code(other)) == oracle::isomorphic(g, other));
  }
}

TEST_CASE("enumerated classes are pairwise non-isomorphic and in the right family") {
  for (int n = 1; n <= 6; ++n) {
    const auto gs = all_graphs(n);
    std::set<std::string> codes;
    for (const Graph& g : gs) codes.insert(canonical_code(g));
    CHECK(codes.size() == gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size() && n <= 5; ++j) CHECK_FALSE(oracle::isomorphic(gs[i], gs[j]));
    }
    for (const Graph& g : all_block_graphs(n)) CHECK(oracle::block_graph(g));
    for (const Graph& g : all_forests(n)) CHECK(is_forest(g));
    std::size_t expected_blocks = 0;
    for (const Graph& g : gs) expected_blocks += oracle::block_graph(g) ? 1 : 0;
    CHECK(all_block_graphs(n).size() == expected_blocks);
  }
}

TEST_CASE("disjoint_union") {
  const Graph u = disjoint_union(path(3), complete(2));
  CHECK(u.vertex_count() == 5);
  CHECK(u.adjacent(3, 4));
  CHECK_FALSE(u.adjacent(2, 3));
  CHECK(connected_components(u).size() == 2);
}
