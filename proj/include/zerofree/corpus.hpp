#pragma once

// Graph corpora for the oracle suites: every rooted tree up to a small size,
// and reproducible random graphs with bounded degree.

#include <cstdint>
#include <random>
#include <vector>

#include "zerofree/finite_degree.hpp"

namespace zerofree {

/// All rooted trees on exactly n vertices up to isomorphism, rooted at vertex 0
/// (Beyer-Hedetniemi level sequences).
std::vector<RootedGraph> rooted_trees(size_t n);

/// rooted_trees(1) .. rooted_trees(max_n), concatenated.
std::vector<RootedGraph> rooted_trees_up_to(size_t max_n);

/// Random tree on n vertices with every degree at most max_degree, built by
/// attaching each new vertex to a uniformly chosen unsaturated vertex.
RootedGraph random_tree(size_t n, size_t max_degree, std::mt19937_64& rng);

/// Random connected graph: a random_tree plus extra_edges attempted chords
/// that respect max_degree. Root chosen uniformly.
RootedGraph random_bounded_graph(size_t n, size_t max_degree, size_t extra_edges, std::mt19937_64& rng);

}  // namespace zerofree
