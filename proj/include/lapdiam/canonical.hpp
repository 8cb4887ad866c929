#pragma once

#include <string>
#include <vector>

#include "lapdiam/graph.hpp"

namespace lapdiam {

/// Isomorphism-invariant encoding of g: the graph6 string of the relabelling whose
/// adjacency rows are lexicographically largest among the leaves of an
/// individualise-refine search. Equal strings iff the graphs are isomorphic.
/// Supports n <= 64; intended for n <= 12.
std::string canonical_form(const Graph& g);

/// The labelling realising canonical_form: perm[v] is v's canonical position.
std::vector<Vertex> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace lapdiam
