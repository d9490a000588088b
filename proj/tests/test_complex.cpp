#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "indshell/complex.hpp"
#include "indshell/conn.hpp"
#include "indshell/constructions.hpp"
#include "indshell/error.hpp"
#include "oracles.hpp"

using namespace indshell;
using namespace fixtures;

TEST_CASE("is_r_independent") {
  CHECK_FALSE(is_r_independent(cycle(4), VertexSet{0, 1, 2}, 2));
  CHECK(is_r_independent(cycle(4), VertexSet{}, 1));
  CHECK(is_r_independent(path(3), VertexSet{0, 2}, 1));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(8, 0.3, rng());
    const VertexSet s(rng() & 0xff);
    const int r = 1 + static_cast<int>(rng() % 4);
    CHECK(is_r_independent(g, s, r) == oracle::r_independent(g, s.bits(), r));
  }
}

TEST_CASE("ind_r_complex") {
  CHECK(ind_r_complex(cycle(4), 1).facets() == sets({{0, 2}, {1, 3}}));
  CHECK(masks(ind_r_complex(path(3), 2).facets()) == masks(sets({{0, 1}, {1, 2}, {0, 2}})));
  for (int n = 1; n <= 6; ++n) {
    const auto d = ind_r_complex(complete(n), n);
    CHECK(d.facets() == std::vector<VertexSet>{VertexSet::range(n)});
  }
}

TEST_CASE("independence_complex") {
  const VertexSet abc{0, 1, 2};
  CHECK(independence_complex(Hypergraph::make(abc, {VertexSet{0, 1}})).facets() == sets({{0, 2}, {1, 2}}));
  CHECK(independence_complex(Hypergraph::make(VertexSet{0, 1}, {})).facets() == sets({{0, 1}}));
  CHECK(independence_complex(Hypergraph::make(VertexSet{0, 1}, {VertexSet{0}})).facets() == sets({{1}}));
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexSet> raw;
    std::vector<oracle::Mask> edges;
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t e = rng() & rng() & 0x3f;
      if (e != 0) raw.emplace_back(e);
    }
    const Hypergraph h = Hypergraph::make(VertexSet(0x3f), raw);
    for (VertexSet e : h.edges()) edges.push_back(e.bits());
    CHECK(masks(independence_complex(h).facets()) == oracle::independence_facets(0x3f, edges));
  }
}

TEST_CASE("void complex and the empty complex differ") {
  const auto v = SimplicialComplex::void_complex(VertexSet{});
  const auto e = SimplicialComplex::from_faces(VertexSet{}, {VertexSet{}});
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(e.dimension() == -1);
  CHECK(e.is_face(VertexSet{}));
  CHECK_FALSE(v.is_face(VertexSet{}));
  CHECK_FALSE(v == e);
}

TEST_CASE("link") {
  const auto d = SimplicialComplex::from_faces(VertexSet{0, 1, 2}, {VertexSet{0, 1}, VertexSet{1, 2}});
  CHECK(link(d, VertexSet{}) == d);
  const auto single = SimplicialComplex::simplex(VertexSet{0, 1});
  const auto l = link(single, VertexSet{0, 1});
  CHECK(l.facets() == sets({{}}));
  CHECK(link(d, VertexSet{1}).facets() == sets({{0}, {2}}));
  try {
    link(d, VertexSet{0, 2});
    FAIL("expected NotAFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFace);
  }
}

TEST_CASE("link of ind_2(W(C4)) at the whiskers is ind(C4)") {
  const LabeledGraph c4 = with_index_labels(cycle(4));
  const LabeledGraph w = whiskered(c4);
  const auto d = ind_r_complex(w.graph, 2);
  const VertexSet whiskers = w.vertices({"w(0)", "w(1)", "w(2)", "w(3)"});
  const auto l = link(d, whiskers);
  CHECK(l.facets() == sets({{0, 2}, {1, 3}}));
  CHECK(l.ground() == VertexSet{0, 1, 2, 3});
}

TEST_CASE("deletion") {
  const auto d = SimplicialComplex::from_faces(VertexSet{0, 1, 2}, {VertexSet{0, 1}, VertexSet{1, 2}});
  CHECK(deletion(d, VertexSet{0}).facets() == sets({{1, 2}}));
  CHECK(deletion(d, VertexSet{}) == d);
  const auto a = SimplicialComplex::simplex(VertexSet{0});
  const auto empty = deletion(a, VertexSet{0});
  CHECK(empty.facets() == sets({{}}));
  CHECK(empty.ground().empty());
}

TEST_CASE("link at a face equals the independence complex of the contraction") {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 0.35, rng());
    for (int r = 1; r <= 3; ++r) {
      const auto d = ind_r_complex(g, r);
      const Hypergraph h = con_r(g, r);
      for (const VertexSet facet : d.facets()) {
        const VertexSet f(facet.bits() & rng());
        const auto l = link(d, f);
        CHECK(l == independence_complex(contract_vertices(h, f)));
        // Link facets are the facets through f with f removed.
        const int smallest = [&] {
          int best = 64;
          for (VertexSet x : d.facets()) {
            if (f.subset_of(x)) best = std::min(best, x.size());
          }
          return best;
        }();
        for (VertexSet x : l.facets()) CHECK(x.size() >= smallest - f.size());
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("cone and relabel") {
  const auto d = SimplicialComplex::from_faces(VertexSet{0, 1, 2}, {VertexSet{0, 1}, VertexSet{2}});
  const auto c = cone(d, 5);
  CHECK(c.facets() == sets({{0, 1, 5}, {2, 5}}));
  const auto r = relabel(d, {2, 1, 0});
  CHECK(masks(r.facets()) == masks(sets({{2, 1}, {0}})));
}
