#include "svo/counting.hpp"

#include <algorithm>
#include <cstdint>

#include "svo/error.hpp"
#include "svo/independent_sets.hpp"

namespace svo {

namespace {

bool entry_less(const b_entry& e, vertex_set s) { return e.set < s; }

const rational* find_in(std::span<const b_entry> entries, vertex_set s) {
    auto it = std::lower_bound(entries.begin(), entries.end(), s, entry_less);
    if (it == entries.end() || it->set != s) return nullptr;
    return &it->b;
}

}  // namespace

std::size_t b_table::size() const {
    std::size_t total = 0;
    for (const auto& l : layers_) total += l.size();
    return total;
}

const rational* b_table::find(vertex_set s) const {
    const auto k = static_cast<std::size_t>(s.size());
    if (k >= layers_.size()) return nullptr;
    return find_in(layers_[k], s);
}

const rational& b_table::at(vertex_set s) const {
    const rational* b = find(s);
    if (b == nullptr) throw input_error(to_string(s) + " is not an independent set in the table");
    return *b;
}

void sweep_b_layers(const graph& g, vertex_set candidates, const engine_options& opts, const layer_visitor& visit) {
    candidates &= g.vertices();
    const unsigned threads = resolve_threads(opts.threads);

    layer sets = empty_layer();
    std::vector<b_entry> prev{{vertex_set{}, rational(1)}};
    visit(0, prev);

    for (;;) {
        layer next = next_layer(g, sets, candidates, {threads});
        if (next.sets.empty()) return;

        std::vector<b_entry> cur(next.sets.size());
        parallel_chunks(cur.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const vertex_set s = next.sets[i];
                rational sum;
                for (int v : s) {
                    const rational* sub = find_in(prev, s.without(v));
                    check_internal(sub != nullptr, "b recursion: missing subset of " + to_string(s));
                    sum += *sub;
                }
                sum /= closed_neighborhood(g, s).size();
                cur[i] = b_entry{s, std::move(sum)};
            }
        });

        visit(next.k, cur);
        prev = std::move(cur);
        sets = std::move(next);
    }
}

b_table compute_b_table(const graph& g, const engine_options& opts) { return compute_b_table(g, g.vertices(), opts); }

b_table compute_b_table(const graph& g, vertex_set candidates, const engine_options& opts) {
    std::vector<std::vector<b_entry>> layers;
    sweep_b_layers(g, candidates, opts, [&](int, std::span<const b_entry> entries) {
        layers.emplace_back(entries.begin(), entries.end());
    });
    return b_table(std::move(layers));
}

rational b_permutation_sum(const graph& g, vertex_set independent) {
    if (independent.size() > max_permutation_sum_size)
        throw input_error("b_permutation_sum: |I| = " + std::to_string(independent.size()) + " exceeds " +
                          std::to_string(max_permutation_sum_size));
    if (!is_independent(g, independent)) throw input_error(to_string(independent) + " is not independent");

    std::vector<int> order = independent.to_vector();
    rational total;
    do {
        rational product(1);
        vertex_set suffix;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            suffix = suffix.with(*it);
            product /= closed_neighborhood(g, suffix).size();
        }
        total += product;
    } while (std::next_permutation(order.begin(), order.end()));
    return total;
}

rational weight(const graph& g, vertex_set independent, const rational& b) {
    rational w = b * a_value(g, independent);
    w /= g.order();
    return w;
}

rational weight(const graph& g, vertex_set independent, const b_table& table) {
    return weight(g, independent, table.at(independent));
}

rational layer_weight_sum(const graph& g, std::span<const b_entry> entries, const engine_options& opts) {
    const unsigned threads = resolve_threads(opts.threads);
    std::vector<rational> partial(threads);
    const std::size_t used = parallel_chunks(entries.size(), threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
        rational sum;
        for (std::size_t i = begin; i < end; ++i) {
            const int a = a_value(g, entries[i].set);
            if (a != 0) sum += entries[i].b * a;
        }
        partial[c] = std::move(sum);
    });
    rational total;
    for (std::size_t c = 0; c < used; ++c) total += partial[c];
    return total;
}

sigma_result make_sigma_result(int n, const rational& sigma_prime) {
    const rational scaled = sigma_prime * rational(factorial(static_cast<unsigned>(n)));
    check_internal(is_integer(scaled), "n! * sigma' = " + to_string(scaled) + " is not an integer");
    sigma_result out{scaled.get_num(), sigma_prime, n};
    check_internal(out.sigma >= 0 && out.sigma <= factorial(static_cast<unsigned>(n)),
                   "sigma = " + to_string(out.sigma) + " outside [0, n!]");
    return out;
}

namespace {

// Sum over independent I within `candidates` of (-1)^|I| a(I) b(I) / n.
rational alternating_weight_sum(const graph& g, vertex_set candidates, const engine_options& opts) {
    rational total;
    sweep_b_layers(g, candidates, opts, [&](int k, std::span<const b_entry> entries) {
        const rational s = layer_weight_sum(g, entries, opts);
        if (k % 2 == 0)
            total += s;
        else
            total -= s;
    });
    total /= g.order();
    return total;
}

}  // namespace

sigma_result sigma(const graph& g, const engine_options& opts) {
    return make_sigma_result(g.order(), alternating_weight_sum(g, g.vertices(), opts));
}

rational pr_good(const graph& g, vertex_set good, const engine_options& opts) {
    if (!good.subset_of(g.vertices())) throw input_error("good set " + to_string(good) + " is not a vertex subset");
    return alternating_weight_sum(g, good, opts);
}

rational pr_bad_via_mobius(const graph& g, vertex_set independent, const engine_options& opts) {
    if (!independent.subset_of(g.vertices()) || !is_independent(g, independent))
        throw input_error(to_string(independent) + " is not an independent set");
    if (independent.size() > 24) throw input_error("pr_bad_via_mobius: |J| > 24 needs more than 2^24 evaluations");
    // T runs over the subsets of J.
    const std::vector<int> members = independent.to_vector();
    const std::uint64_t count = std::uint64_t{1} << members.size();
    rational total;
    for (std::uint64_t code = 0; code < count; ++code) {
        vertex_set t;
        for (std::size_t i = 0; i < members.size(); ++i)
            if ((code >> i) & 1U) t = t.with(members[i]);
        const rational p = pr_good(g, t, opts);
        if (t.size() % 2 == 0)
            total += p;
        else
            total -= p;
    }
    return total;
}

}  // namespace svo
