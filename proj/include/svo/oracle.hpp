#ifndef SVO_ORACLE_HPP
#define SVO_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "svo/exact.hpp"
#include "svo/graph.hpp"
#include "svo/parallel.hpp"
#include "svo/polynomial.hpp"
#include "svo/vertex_set.hpp"

// Brute-force ground truth over all n! orderings. Nothing here touches the
// independent-set machinery; every answer comes from classifying orderings.
namespace svo::oracle {

inline constexpr int max_order = 10;

/// Bad vertices of one ordering: not first, and earlier than every neighbour.
vertex_set bad_set(const graph& g, const std::vector<int>& ordering);

big_int brute_sigma(const graph& g, const engine_options& opts = {});

/// Histogram of |B(pi)|, indices 0..n.
bad_distribution brute_distribution(const graph& g, const engine_options& opts = {});

/// (#orderings with bad_req ⊆ B(pi) and good_req ∩ B(pi) = ∅) / n!.
rational brute_event(const graph& g, vertex_set bad_req, vertex_set good_req, const engine_options& opts = {});

/// census[mask] = number of orderings whose bad set is exactly `mask`.
/// Size 2^n.
std::vector<std::uint64_t> bad_set_census(const graph& g, const engine_options& opts = {});

/// brute_event answered from a census instead of a fresh scan.
rational event_from_census(const std::vector<std::uint64_t>& census, int n, vertex_set bad_req, vertex_set good_req);

/// sum over orderings of C(r(pi), j), j = 0..n.
std::vector<big_int> brute_pair_counts(const graph& g, const engine_options& opts = {});

}  // namespace svo::oracle

#endif  // SVO_ORACLE_HPP
