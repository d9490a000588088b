#pragma once

#include <vector>

#include "indshell/graph.hpp"
#include "indshell/hypergraph.hpp"

namespace indshell {

/// All k-subsets of V(g) inducing a connected subgraph, canonically sorted.
///
/// Each set is grown from its minimum vertex (the anchor) by adding
/// neighbours with larger labels, with a forbidden set that grows as
/// candidates are declined so no set is produced twice.
std::vector<VertexSet> connected_subsets(const Graph& g, int k);

/// Same output, built with one OpenMP task per anchor vertex.
std::vector<VertexSet> connected_subsets_parallel(const Graph& g, int k);

/// con_r(G): vertex set V(G), edges the connected (r+1)-subsets.
Hypergraph con_r(const Graph& g, int r);

}  // namespace indshell
