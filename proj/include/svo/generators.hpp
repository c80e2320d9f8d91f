#ifndef SVO_GENERATORS_HPP
#define SVO_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "svo/graph.hpp"

namespace svo {

graph complete_graph(int n);
graph path_graph(int n);
graph cycle_graph(int n);
graph star_graph(int leaves);
/// Sides {0..m-1} and {m..m+k-1}.
graph complete_bipartite_graph(int m, int k);

/// Seeded random connected graph, reproducible bit for bit:
///  1. rng = std::mt19937_64(seed);
///  2. a uniform labelled spanning tree from a Prüfer sequence of n - 2
///     draws `rng() % n`, decoded with the smallest-leaf rule;
///  3. every non-tree pair (u, v), u < v, in lexicographic order takes one
///     draw and becomes an edge iff (rng() >> 11) * 2^-53 < density.
graph random_connected_graph(int n, double density, std::uint64_t seed);

/// One representative of every isomorphism class of graphs on exactly n
/// vertices, 1 <= n <= 8, in canonical-key order.
std::vector<graph> graph_catalog(int n);

}  // namespace svo

#endif  // SVO_GENERATORS_HPP
