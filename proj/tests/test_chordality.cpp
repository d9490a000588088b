#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "indshell/chordality.hpp"
#include "indshell/complex.hpp"
#include "indshell/constructions.hpp"
#include "indshell/enumerate.hpp"
#include "indshell/shelling.hpp"
#include "oracles.hpp"

using namespace indshell;
using namespace fixtures;

namespace {

using Verdict = ChordalityDecision::Verdict;

// Exhaustive reference: every disjoint (V_d, V_c) pair with a nonempty,
// defined minor has a simplicial vertex (raw-mask simplicial oracle).
bool w_chordal_oracle(const Hypergraph& h, bool contractions_only) {
  const auto vs = h.vertices().to_vector();
  const int n = static_cast<int>(vs.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    MinorSpec spec;
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) spec.deleted = spec.deleted.with(vs[static_cast<std::size_t>(i)]);
      if (c % 3 == 2) spec.contracted = spec.contracted.with(vs[static_cast<std::size_t>(i)]);
    }
    if (contractions_only && !spec.deleted.empty()) continue;
    if ((spec.deleted | spec.contracted) == h.vertices()) continue;
    if (!minor_is_defined(h, spec)) continue;
    const Hypergraph m = minor(h, spec);
    std::vector<oracle::Mask> edges;
    for (VertexSet e : m.edges()) edges.push_back(e.bits());
    bool any = false;
    for (Vertex v : m.vertices()) any = any || oracle::simplicial(edges, v);
    if (!any) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("MinorCursor walks every defined spec once, in canonical order") {
  const Hypergraph h = con_r(path(4), 1);
  MinorCursor cursor(h, false);
  MinorSpec spec;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  int prev_touched = 0;
  while (cursor.next(spec)) {
    CHECK_FALSE(spec.deleted.intersects(spec.contracted));
    CHECK(minor_is_defined(h, spec));
    CHECK((spec.deleted | spec.contracted) != h.vertices());
    const int touched = (spec.deleted | spec.contracted).size();
    CHECK(touched >= prev_touched);
    prev_touched = touched;
    CHECK(seen.insert({spec.deleted.bits(), spec.contracted.bits()}).second);
  }
  int defined = 0;
  for (int code = 0; code < 81; ++code) {
    MinorSpec s;
    int c = code;
    for (Vertex v = 0; v < 4; ++v, c /= 3) {
      if (c % 3 == 1) s.deleted = s.deleted.with(v);
      if (c % 3 == 2) s.contracted = s.contracted.with(v);
    }
    if ((s.deleted | s.contracted) != h.vertices() && minor_is_defined(h, s)) ++defined;
  }
  CHECK(static_cast<int>(seen.size()) == defined);
}

TEST_CASE("con_4(G_1) is not w-chordal; the certificate is the spider minor") {
  const LabeledGraph g1 = counterexample_gt_paths(4, 1);
  const Hypergraph h = con_r(g1.graph, 4);
  const auto dec = is_w_chordal(h);
  CHECK(dec.verdict == Verdict::Fails);
  REQUIRE(dec.certificate.has_value());
  CHECK(verify_bad_minor(h, *dec.certificate));
  CHECK(dec.certificate->minor_vertices == g1.vertices({"v1", "v2", "v3", "v4", "v5", "v6", "v7"}));
  CHECK(dec.certificate->minor_edges.size() == 6);
  CHECK(dec.certificate->spec.deleted.empty());
  CHECK(dec.certificate->spec.contracted == g1.vertices({"u1", "u2", "u3"}));
}

TEST_CASE("con_r of star-clique graphs is w-chordal") {
  const std::vector<std::vector<int>> shapes{{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {3, 2}, {2, 2, 2}, {4, 1, 1}, {1, 1, 1, 1, 1}};
  for (const auto& shape : shapes) {
    const LabeledGraph g = star_clique(shape);
    REQUIRE(g.graph.vertex_count() <= 9);
    for (int r = 1; r <= 3; ++r) {
      INFO("shape size " << shape.size() << ", r = " << r);
      CHECK(is_w_chordal(con_r(g.graph, r)).holds());
    }
  }
}

TEST_CASE("hypergraphs with at most one edge are w-chordal") {
  CHECK(is_w_chordal(Hypergraph::make(VertexSet{0, 1, 2}, {})).holds());
  CHECK(is_w_chordal(Hypergraph::make(VertexSet{0, 1, 2}, {VertexSet{0, 1}})).holds());
  CHECK(every_contraction_simplicial(Hypergraph::make(VertexSet{0, 1}, {})).holds());
}

TEST_CASE("every_contraction_simplicial on the whiskered 4-cycle") {
  const LabeledGraph w = whiskered(with_index_labels(cycle(4)));
  CHECK(every_contraction_simplicial(con_r(w.graph, 1)).holds());
  const Hypergraph h2 = con_r(w.graph, 2);
  const auto dec = every_contraction_simplicial(h2);
  CHECK(dec.verdict == Verdict::Fails);
  REQUIRE(dec.certificate.has_value());
  CHECK(dec.certificate->spec.deleted.empty());
  CHECK(verify_bad_minor(h2, *dec.certificate));
  // Contracting the whiskers gives the 4-cycle, which has no simplicial vertex.
  const Hypergraph k = contract_vertices(h2, w.vertices({"w(0)", "w(1)", "w(2)", "w(3)"}));
  CHECK(k.edges() == con_r(cycle(4), 1).edges());
  CHECK_FALSE(has_hyper_simplicial_vertex(k));
}

TEST_CASE("scans agree with the exhaustive oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int r = 1; r <= 3; ++r) {
        const Hypergraph h = con_r(g, r);
        CHECK(is_w_chordal(h).holds() == w_chordal_oracle(h, false));
        CHECK(every_contraction_simplicial(h).holds() == w_chordal_oracle(h, true));
      }
    }
  }
}

TEST_CASE("serial and parallel scans return identical certificates") {
  std::mt19937_64 rng(51);
  int failures = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(7, 0.4, rng());
    const int r = 1 + static_cast<int>(rng() % 3);
    const Hypergraph h = con_r(g, r);
    for (bool contractions_only : {false, true}) {
      const auto s = contractions_only ? every_contraction_simplicial(h, kDefaultBudget, Execution::Serial)
                                       : is_w_chordal(h, kDefaultBudget, Execution::Serial);
      const auto p = contractions_only ? every_contraction_simplicial(h, kDefaultBudget, Execution::Parallel)
                                       : is_w_chordal(h, kDefaultBudget, Execution::Parallel);
      CHECK(s.verdict == p.verdict);
      CHECK(s.minors_examined == p.minors_examined);
      REQUIRE(s.certificate.has_value() == p.certificate.has_value());
      if (s.certificate) {
        ++failures;
        CHECK(s.certificate->spec == p.certificate->spec);
        CHECK(s.certificate->minor_edges == p.certificate->minor_edges);
        // Re-applying the spec reproduces the stored minor exactly.
        const Hypergraph m = minor(h, s.certificate->spec);
        CHECK(m.edges() == s.certificate->minor_edges);
        CHECK(m.vertices() == s.certificate->minor_vertices);
        CHECK(verify_bad_minor(h, *s.certificate));
      }
    }
  }
  CHECK(failures > 10);
}

TEST_CASE("budget exhaustion gives Unknown") {
  const Hypergraph h = con_r(star_clique({2, 2, 2}).graph, 2);
  CHECK(is_w_chordal(h, 5, Execution::Serial).verdict == Verdict::Unknown);
  CHECK(is_w_chordal(h, 5, Execution::Parallel).verdict == Verdict::Unknown);
  CHECK(is_w_chordal(h).holds());
}

TEST_CASE("verify_bad_minor rejects tampered certificates") {
  const LabeledGraph g1 = counterexample_gt_paths(4, 1);
  const Hypergraph h = con_r(g1.graph, 4);
  auto cert = *is_w_chordal(h).certificate;
  auto tampered = cert;
  tampered.minor_edges.pop_back();
  CHECK_FALSE(verify_bad_minor(h, tampered));
  tampered = cert;
  tampered.spec.contracted = tampered.spec.contracted.without(g1.vertex("u1"));
  CHECK_FALSE(verify_bad_minor(h, tampered));
}

TEST_CASE("c_prime_minor_stream") {
  const auto p4 = c_prime_minor_stream(path(4), 2);
  REQUIRE_FALSE(p4.empty());
  CHECK(p4.front().contracted.empty());
  CHECK(p4.front().result == con_r(path(4), 2));
  const auto k2 = c_prime_minor_stream(complete(2), 1);
  REQUIRE(k2.size() == 1);
  CHECK(k2.front().contracted.empty());
  CHECK(c_prime_minor_stream(Graph(3), 2).size() == 8);
}

TEST_CASE("deletion hierarchy: hereditary c'-simplicial iff w-chordal on forests and block graphs") {
  int agreed = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> family = all_block_graphs(n);
    for (const Graph& g : family) {
      for (int r = 1; r <= 3; ++r) {
        const Hypergraph h = con_r(g, r);
        const bool hereditary = hereditary_c_prime_simplicial(g, r);
        const auto w = is_w_chordal(h);
        REQUIRE(w.verdict != Verdict::Unknown);
        CHECK(hereditary == w.holds());
        ++agreed;
      }
    }
  }
  MESSAGE("hierarchy instances: " << agreed);
}

TEST_CASE("chain: w-chordal implies contraction-simplicial and shellable") {
  std::mt19937_64 rng(52);
  int strong = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, 0.35, rng());
    const int r = 1 + static_cast<int>(rng() % 3);
    const Hypergraph h = con_r(g, r);
    if (!is_w_chordal(h).holds()) continue;
    CHECK(every_contraction_simplicial(h).holds());
    CHECK(is_shellable(independence_complex(h)).shellable());
    ++strong;
  }
  CHECK(strong > 20);
}

TEST_CASE("contraction-simplicial alone does not force shellability under the literal definition") {
  // C4 on {2,3,4,5} with the path 3-0-1 hung at 3, r = 1. Every contraction
  // has a simplicial vertex, but the link of {1} in ind(G) is ind(C4).
  const Graph g = Graph::from_edges(6, {{0, 1}, {0, 3}, {3, 4}, {3, 5}, {2, 4}, {2, 5}});
  const Hypergraph h = con_r(g, 1);
  CHECK(every_contraction_simplicial(h).holds());
  CHECK_FALSE(is_w_chordal(h).holds());
  const auto d = independence_complex(h);
  CHECK(is_shellable(d).verdict == ShellingDecision::Verdict::NotShellable);
  CHECK(link(d, VertexSet{1}).facets() == sets({{2, 3}, {4, 5}}));
  // The contraction by {1}: its only simplicial vertex is 0, which sits in
  // the singleton edge {0} and so lies in no face of ind.
  const Hypergraph m = contract_vertex(h, 1);
  CHECK(hyper_simplicial_vertices(m) == VertexSet{0});
  CHECK(std::find(m.edges().begin(), m.edges().end(), VertexSet{0}) != m.edges().end());
}
