#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "indshell/complex.hpp"
#include "indshell/constructions.hpp"
#include "indshell/enumerate.hpp"
#include "indshell/error.hpp"
#include "indshell/shelling.hpp"
#include "oracles.hpp"

using namespace indshell;
using namespace fixtures;

namespace {

using Verdict = ShellingDecision::Verdict;

SimplicialComplex complex_of(std::initializer_list<std::initializer_list<Vertex>> facets) {
  const auto fs = sets(facets);
  VertexSet ground;
  for (VertexSet f : fs) ground |= f;
  return SimplicialComplex::from_faces(ground, fs);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int ground, int max_faces, bool dense = true) {
  const std::uint64_t all = (std::uint64_t{1} << ground) - 1;
  std::vector<VertexSet> faces;
  const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_faces));
  for (int i = 0; i < m; ++i) {
    std::uint64_t f = rng() & all;
    if (dense && rng() % 2) f |= rng() & all;
    faces.emplace_back(f);
  }
  return SimplicialComplex::from_faces(VertexSet(all), faces);
}

// Every antichain of nonempty subsets of {0..ground-1} with at most
// `max_facets` members.
void for_each_antichain(int ground, int max_facets, const std::function<void(const std::vector<VertexSet>&)>& visit) {
  const std::uint64_t limit = std::uint64_t{1} << ground;
  std::vector<VertexSet> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t next) {
    if (!cur.empty()) visit(cur);
    if (static_cast<int>(cur.size()) == max_facets) return;
    for (std::uint64_t s = next; s < limit; ++s) {
      const VertexSet x(s);
      const bool ok = std::none_of(cur.begin(), cur.end(), [&](VertexSet f) { return f.subset_of(x) || x.subset_of(f); });
      if (!ok) continue;
      cur.push_back(x);
      rec(s + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace

TEST_CASE("verify_shelling") {
  const auto c4 = complex_of({{1, 3}, {2, 4}});
  CHECK_FALSE(verify_shelling(c4, sets({{1, 3}, {2, 4}})));
  CHECK_FALSE(verify_shelling(c4, sets({{2, 4}, {1, 3}})));
  const auto one = complex_of({{0, 1, 2}});
  CHECK(verify_shelling(one, one.facets()));
  const auto p = complex_of({{1, 2}, {2, 3}});
  CHECK(verify_shelling(p, sets({{1, 2}, {2, 3}})));
  try {
    verify_shelling(p, sets({{1, 2}}));
    FAIL("expected InvalidOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
  CHECK_THROWS_AS(verify_shelling(p, sets({{1, 2}, {1, 2}})), Error);
}

TEST_CASE("is_shellable") {
  const auto c4 = ind_r_complex(cycle(4), 1);
  CHECK(is_shellable(c4).verdict == Verdict::NotShellable);
  CHECK_FALSE(is_shellable(c4).certificate.has_value());
  const auto simplex = SimplicialComplex::simplex(VertexSet{0, 1, 2, 3});
  const auto s = is_shellable(simplex);
  CHECK(s.shellable());
  REQUIRE(s.certificate.has_value());
  CHECK(s.certificate->order == simplex.facets());
  CHECK(is_shellable(SimplicialComplex::void_complex(VertexSet{})).shellable());
  CHECK(is_shellable(SimplicialComplex::from_faces(VertexSet{}, {VertexSet{}})).shellable());
}

TEST_CASE("ind_2 of small block graphs is shellable") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_connected_block_graphs(n)) {
      const auto dec = is_shellable(ind_r_complex(g, 2));
      CHECK(dec.shellable());
      REQUIRE(dec.certificate.has_value());
      CHECK(dec.certificate->verified);
    }
  }
}

TEST_CASE("brute_force_shellable") {
  CHECK(brute_force_shellable(complex_of({{1, 3}, {2, 4}})).verdict == Verdict::NotShellable);
  const auto cone3 = cone(complex_of({{0, 1}, {1, 2}, {2, 3}}), 9);
  CHECK(brute_force_shellable(cone3).shellable());
  CHECK(brute_force_shellable(complex_of({{0, 1}})).shellable());
  std::vector<VertexSet> many;
  for (Vertex v = 0; v < 9; ++v) many.push_back(VertexSet::single(v));
  try {
    brute_force_shellable(SimplicialComplex::from_faces(VertexSet::range(9), many));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("pairwise step criterion equals the definition") {
  // All antichains with at most 5 facets over 5 points, every ordering.
  int compared = 0;
  for_each_antichain(5, 5, [&](const std::vector<VertexSet>& facets) {
    std::vector<VertexSet> order = facets;
    std::sort(order.begin(), order.end());
    do {
      const VertexSet last = order.back();
      const std::vector<VertexSet> earlier(order.begin(), order.end() - 1);
      if (earlier.empty()) continue;
      const bool pair = extends_shelling(last, earlier);
      CHECK(pair == extends_shelling_by_definition(last, earlier));
      ++compared;
    } while (std::next_permutation(order.begin(), order.end()));
  });
  MESSAGE("orderings compared: " << compared);
  CHECK(compared > 100000);

  // Random complexes over 5 and 6 points, whole orders against the face-list oracle.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto d = random_complex(rng, 5 + static_cast<int>(rng() % 2), 5);
    std::vector<VertexSet> order = d.facets();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<oracle::Mask> raw;
    for (VertexSet f : order) raw.push_back(f.bits());
    const bool expected = oracle::is_shelling_by_faces(raw);
    CHECK(verify_shelling(d, order) == expected);
    CHECK(verify_shelling_by_definition(d, order) == expected);
  }
}

TEST_CASE("search agrees with both brute-force oracles on random complexes") {
  std::mt19937_64 rng(42);
  int shellable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int ground = 3 + static_cast<int>(rng() % 5);
    const auto d = random_complex(rng, ground, 6, false);
    const auto fast = is_shellable(d, kDefaultBudget, Execution::Serial);
    const auto brute = brute_force_shellable(d);
    std::vector<oracle::Mask> raw;
    for (VertexSet f : d.facets()) raw.push_back(f.bits());
    const bool expected = oracle::shellable_by_permutations(raw);
    CHECK(fast.verdict != Verdict::Unknown);
    CHECK(fast.shellable() == expected);
    CHECK(brute.shellable() == expected);
    if (fast.certificate) {
      CHECK(fast.certificate->verified);
      std::vector<oracle::Mask> order;
      for (VertexSet f : fast.certificate->order) order.push_back(f.bits());
      CHECK(oracle::is_shelling_by_faces(order));
    }
    shellable += expected ? 1 : 0;
  }
  MESSAGE("shellable: " << shellable << " of 500");
  // Both outcomes must be represented.
  CHECK(shellable > 50);
  CHECK(shellable < 450);
}

TEST_CASE("search agrees with the oracle on ind_r of all graphs up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int r = 1; r <= 3; ++r) {
        const auto d = ind_r_complex(g, r);
        if (d.facet_count() > 8) continue;
        CHECK(is_shellable(d).shellable() == brute_force_shellable(d).shellable());
      }
    }
  }
}

TEST_CASE("coning preserves the decision") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_complex(rng, 6, 6);
    const auto base = is_shellable(d, kDefaultBudget, Execution::Serial);
    const auto coned = is_shellable(cone(d, 20), kDefaultBudget, Execution::Serial);
    CHECK(base.verdict == coned.verdict);
  }
}

TEST_CASE("serial and parallel search return the same decision and certificate") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(8, 0.3, rng());
    const int r = 1 + static_cast<int>(rng() % 3);
    const auto d = ind_r_complex(g, r);
    const auto s = is_shellable(d, kDefaultBudget, Execution::Serial);
    const auto p = is_shellable(d, kDefaultBudget, Execution::Parallel);
    CHECK(s.verdict == p.verdict);
    CHECK(s.certificate.has_value() == p.certificate.has_value());
    if (s.certificate && p.certificate) CHECK(s.certificate->order == p.certificate->order);
  }
}

TEST_CASE("exhausting the budget gives Unknown, never a refutation") {
  const auto d = ind_r_complex(whiskered(with_index_labels(cycle(5))).graph, 2);
  REQUIRE(d.facet_count() > 2);
  const auto full = is_shellable(d, kDefaultBudget, Execution::Serial);
  CHECK(full.verdict != Verdict::Unknown);
  const auto tiny = is_shellable(d, 1, Execution::Serial);
  CHECK(tiny.verdict == Verdict::Unknown);
  CHECK_FALSE(tiny.certificate.has_value());
}
