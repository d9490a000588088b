#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "indshell/complex.hpp"
#include "indshell/execution.hpp"

namespace indshell {

struct ShellingCertificate {
  std::vector<VertexSet> order;
  bool verified = false;
};

struct ShellingDecision {
  enum class Verdict { Shellable, NotShellable, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<ShellingCertificate> certificate;
  /// Search nodes expanded (summed over workers in parallel runs).
  std::uint64_t nodes = 0;

  bool shellable() const { return verdict == Verdict::Shellable; }
};

std::string_view to_string(ShellingDecision::Verdict v);

/// Pairwise test for one shelling step: for every earlier G there is an
/// earlier G' with F∩G ⊆ F∩G' and |F \ G'| = 1.
bool extends_shelling(VertexSet facet, const std::vector<VertexSet>& earlier);

/// Direct test for one step: the facets of <F> ∩ <earlier> (the maximal sets
/// F∩G) all have |F|-1 elements.
bool extends_shelling_by_definition(VertexSet facet, const std::vector<VertexSet>& earlier);

/// Checks `order` with the pairwise criterion. Throws InvalidOrder unless
/// `order` is a permutation of the facets of `d`.
bool verify_shelling(const SimplicialComplex& d, const std::vector<VertexSet>& order);
bool verify_shelling_by_definition(const SimplicialComplex& d, const std::vector<VertexSet>& order);

/// Backtracking shellability search.
///
/// Facets are placed in weakly decreasing dimension (any shelling can be
/// rearranged that way), ties broken lexicographically, and a placed-facet set
/// that cannot be completed is remembered. NotShellable is only reported
/// after the search space is exhausted; running out of `budget` nodes gives
/// Unknown. Complexes with at most one facet, including void and {∅}, are
/// shellable.
ShellingDecision is_shellable(const SimplicialComplex& d, std::uint64_t budget = kDefaultBudget,
                              Execution exec = Execution::Parallel);

/// Tries every facet permutation against the definition. Throws TooLarge
/// above `max_facets` (8 by default).
ShellingDecision brute_force_shellable(const SimplicialComplex& d, int max_facets = 8);

}  // namespace indshell
