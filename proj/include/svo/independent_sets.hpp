#ifndef SVO_INDEPENDENT_SETS_HPP
#define SVO_INDEPENDENT_SETS_HPP

#include <cstddef>
#include <vector>

#include "svo/graph.hpp"
#include "svo/parallel.hpp"
#include "svo/vertex_set.hpp"

namespace svo {

/// All independent sets of one cardinality, strictly increasing by mask.
struct layer {
    int k = 0;
    std::vector<vertex_set> sets;
};

/// The layer {∅}.
layer empty_layer();

/// Independent sets of size prev.k + 1 drawn from `candidates`, built by
/// extending each member I of `prev` with vertices v > max(I) outside N[I].
/// `prev` must be the complete layer of independent subsets of `candidates`.
layer next_layer(const graph& g, const layer& prev, vertex_set candidates, const engine_options& opts = {});

/// Layers 0..alpha of the independent subsets of `candidates`
/// (all of V by default). Every independent set appears exactly once.
std::vector<layer> enumerate_layers(const graph& g, const engine_options& opts = {});
std::vector<layer> enumerate_layers(const graph& g, vertex_set candidates, const engine_options& opts = {});

int independence_number(const graph& g);

std::size_t count_independent_sets(const graph& g);

}  // namespace svo

#endif  // SVO_INDEPENDENT_SETS_HPP
