#ifndef SVO_COUNTING_HPP
#define SVO_COUNTING_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "svo/exact.hpp"
#include "svo/graph.hpp"
#include "svo/parallel.hpp"
#include "svo/vertex_set.hpp"

namespace svo {

struct b_entry {
    vertex_set set;
    rational b;
};

/// b values of every independent subset of some candidate set, one sorted
/// layer per cardinality. Immutable once built.
class b_table {
public:
    explicit b_table(std::vector<std::vector<b_entry>> layers) : layers_(std::move(layers)) {}

    int layer_count() const { return static_cast<int>(layers_.size()); }
    std::span<const b_entry> layer(int k) const { return layers_.at(static_cast<std::size_t>(k)); }
    std::size_t size() const;

    /// nullptr when `s` is not in the table.
    const rational* find(vertex_set s) const;

    /// Throws input_error when `s` is not in the table.
    const rational& at(vertex_set s) const;

private:
    std::vector<std::vector<b_entry>> layers_;
};

/// Called once per cardinality k = 0, 1, ... with that layer's entries in
/// mask-ascending order. The span is only valid during the call.
using layer_visitor = std::function<void(int k, std::span<const b_entry> entries)>;

/// Streams the b recursion over the independent subsets of `candidates`,
/// holding two adjacent layers at a time. a and b values are those of the
/// whole graph g, not of the subgraph induced by `candidates`.
void sweep_b_layers(const graph& g, vertex_set candidates, const engine_options& opts, const layer_visitor& visit);

/// Full retention of every layer.
b_table compute_b_table(const graph& g, const engine_options& opts = {});
b_table compute_b_table(const graph& g, vertex_set candidates, const engine_options& opts = {});

/// Sum over orderings of I of the products of 1 / |N[suffix]|; |I| <= 8.
rational b_permutation_sum(const graph& g, vertex_set independent);

inline constexpr int max_permutation_sum_size = 8;

/// a(I)/n * b(I) = Pr(every vertex of I is bad).
rational weight(const graph& g, vertex_set independent, const rational& b);
rational weight(const graph& g, vertex_set independent, const b_table& table);

/// Sum of a(I) * b(I) over one layer (not yet divided by n).
rational layer_weight_sum(const graph& g, std::span<const b_entry> entries, const engine_options& opts = {});

struct sigma_result {
    big_int sigma;
    rational sigma_prime;
    int n = 0;
};

/// Throws internal_error when n! * sigma' is not an integer or not in [0, n!].
sigma_result make_sigma_result(int n, const rational& sigma_prime);

/// Number of successive orderings and the probability that a uniform
/// ordering is successive.
sigma_result sigma(const graph& g, const engine_options& opts = {});

/// Pr(every vertex of U has an earlier neighbour or is first).
rational pr_good(const graph& g, vertex_set good, const engine_options& opts = {});

/// Pr(B_J) recovered from the good-event probabilities by Möbius
/// inversion over the subsets of J. J must be independent.
rational pr_bad_via_mobius(const graph& g, vertex_set independent, const engine_options& opts = {});

}  // namespace svo

#endif  // SVO_COUNTING_HPP
