#pragma once

#include <string>
#include <vector>

#include "indshell/graph.hpp"

namespace indshell {

/// Canonical adjacency code: lexicographically least upper-triangle bit
/// string over all relabellings that respect the colour-refinement order.
/// Two graphs are isomorphic iff their codes are equal.
std::string canonical_code(const Graph& g);

/// Relabels g into its canonical form.
Graph canonical_form(const Graph& g);

/// All graphs on n vertices up to isomorphism (n <= 7).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

/// All trees on n vertices up to isomorphism.
std::vector<Graph> all_trees(int n);

/// All forests on n vertices up to isomorphism (isolated vertices allowed).
std::vector<Graph> all_forests(int n);

/// All connected block graphs on n vertices up to isomorphism.
std::vector<Graph> all_connected_block_graphs(int n);

/// All block graphs (any number of components) on n vertices.
std::vector<Graph> all_block_graphs(int n);

/// Disjoint union, second graph's vertices shifted after the first.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace indshell
