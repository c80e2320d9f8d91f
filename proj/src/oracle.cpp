#include "svo/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "svo/error.hpp"

namespace svo::oracle {

namespace {

void guard(const graph& g) {
    if (g.order() > max_order)
        throw input_error("oracle: n = " + std::to_string(g.order()) + " exceeds " + std::to_string(max_order));
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Runs visit(ordering) over all orderings in lexicographic order. Workers
// own disjoint ranges of first vertices; visit receives the worker index.
template <class Visit>
void for_each_ordering(const graph& g, unsigned threads, Visit&& visit) {
    const auto n = static_cast<std::size_t>(g.order());
    parallel_chunks(n, threads, [&](std::size_t worker, std::size_t first_begin, std::size_t first_end) {
        for (std::size_t first = first_begin; first < first_end; ++first) {
            std::vector<int> order(n);
            order[0] = static_cast<int>(first);
            std::size_t pos = 1;
            for (std::size_t v = 0; v < n; ++v)
                if (v != first) order[pos++] = static_cast<int>(v);
            do {
                visit(worker, order);
            } while (std::next_permutation(order.begin() + 1, order.end()));
        }
    }, 1);
}

}  // namespace

vertex_set bad_set(const graph& g, const std::vector<int>& ordering) {
    vertex_set seen;
    vertex_set bad;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        const int v = ordering[i];
        if (i > 0 && !g.neighbors(v).intersects(seen)) bad = bad.with(v);
        seen = seen.with(v);
    }
    return bad;
}

big_int brute_sigma(const graph& g, const engine_options& opts) {
    guard(g);
    const unsigned threads = resolve_threads(opts.threads);
    std::vector<std::uint64_t> counts(threads, 0);
    for_each_ordering(g, threads, [&](std::size_t worker, const std::vector<int>& order) {
        vertex_set seen = vertex_set::singleton(order[0]);
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (!g.neighbors(order[i]).intersects(seen)) return;
            seen = seen.with(order[i]);
        }
        ++counts[worker];
    });
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    return big_int(static_cast<unsigned long>(total));
}

std::vector<std::uint64_t> bad_set_census(const graph& g, const engine_options& opts) {
    guard(g);
    const unsigned threads = resolve_threads(opts.threads);
    const std::size_t size = std::size_t{1} << g.order();
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(size, 0));
    for_each_ordering(g, threads, [&](std::size_t worker, const std::vector<int>& order) {
        ++partial[worker][bad_set(g, order).bits()];
    });
    std::vector<std::uint64_t> census(size, 0);
    for (const auto& p : partial)
        for (std::size_t m = 0; m < size; ++m) census[m] += p[m];
    return census;
}

bad_distribution brute_distribution(const graph& g, const engine_options& opts) {
    const auto census = bad_set_census(g, opts);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::size_t m = 0; m < census.size(); ++m)
        hist[static_cast<std::size_t>(vertex_set{m}.size())] += census[m];
    bad_distribution out;
    for (auto h : hist) out.a_k.emplace_back(static_cast<unsigned long>(h));
    return out;
}

rational brute_event(const graph& g, vertex_set bad_req, vertex_set good_req, const engine_options& opts) {
    guard(g);
    if (bad_req.intersects(good_req))
        throw input_error("brute_event: bad and good requirements overlap in " + to_string(bad_req & good_req));
    const unsigned threads = resolve_threads(opts.threads);
    std::vector<std::uint64_t> counts(threads, 0);
    for_each_ordering(g, threads, [&](std::size_t worker, const std::vector<int>& order) {
        const vertex_set bad = bad_set(g, order);
        if (bad_req.subset_of(bad) && !good_req.intersects(bad)) ++counts[worker];
    });
    const std::uint64_t hits = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    rational p(static_cast<unsigned long>(hits), static_cast<unsigned long>(factorial_u64(g.order())));
    p.canonicalize();
    return p;
}

rational event_from_census(const std::vector<std::uint64_t>& census, int n, vertex_set bad_req, vertex_set good_req) {
    if (bad_req.intersects(good_req))
        throw input_error("event: bad and good requirements overlap in " + to_string(bad_req & good_req));
    std::uint64_t hits = 0;
    for (std::size_t m = 0; m < census.size(); ++m) {
        const vertex_set bad{m};
        if (bad_req.subset_of(bad) && !good_req.intersects(bad)) hits += census[m];
    }
    rational p(static_cast<unsigned long>(hits), static_cast<unsigned long>(factorial_u64(n)));
    p.canonicalize();
    return p;
}

std::vector<big_int> brute_pair_counts(const graph& g, const engine_options& opts) {
    const auto dist = brute_distribution(g, opts);
    const auto n = static_cast<unsigned>(g.order());
    std::vector<big_int> out(n + 1, big_int(0));
    for (unsigned r = 0; r <= n; ++r)
        for (unsigned j = 0; j <= r; ++j) out[j] += binomial(r, j) * dist.a_k[r];
    return out;
}

}  // namespace svo::oracle
