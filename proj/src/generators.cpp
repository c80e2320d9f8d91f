#include "svo/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "svo/error.hpp"

namespace svo {

graph complete_graph(int n) {
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph(n, edges);
}

graph path_graph(int n) {
    std::vector<edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return graph(n, edges);
}

graph cycle_graph(int n) {
    std::vector<edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return graph(n, edges);
}

graph star_graph(int leaves) {
    std::vector<edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return graph(leaves + 1, edges);
}

graph complete_bipartite_graph(int m, int k) {
    std::vector<edge> edges;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + k; ++v) edges.emplace_back(u, v);
    return graph(m + k, edges);
}

graph random_connected_graph(int n, double density, std::uint64_t seed) {
    if (n < 1 || n > max_vertices) throw input_error("random graph: n must lie in [1, 64]");
    if (!(density >= 0.0 && density <= 1.0)) throw input_error("random graph: density must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    std::vector<edge> edges;

    if (n >= 2) {
        std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
        for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
        for (int x : pruefer) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        int u = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] != 1) continue;
            if (u < 0) {
                u = v;
            } else {
                edges.emplace_back(u, v);
                break;
            }
        }
    }

    const graph tree(n, edges);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (tree.has_edge(u, v)) continue;
            const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (coin < density) edges.emplace_back(u, v);
        }
    }
    return graph(n, edges);
}

namespace {

// Upper triangle of the adjacency matrix under `order` (position -> vertex),
// row-major, as one integer.
std::uint64_t encode(const std::vector<vertex_set>& adj, const std::vector<int>& order) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            key = (key << 1) | (adj[static_cast<std::size_t>(order[i])].contains(order[j]) ? 1U : 0U);
    return key;
}

// Minimum encoding over orders that list vertices by nondecreasing degree.
// Isomorphisms preserve degree, so this is an isomorphism invariant.
std::uint64_t canonical_key(const std::vector<vertex_set>& adj) {
    std::vector<int> order(adj.size());
    std::iota(order.begin(), order.end(), 0);
    auto deg = [&](int v) { return adj[static_cast<std::size_t>(v)].size(); };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return deg(x) != deg(y) ? deg(x) < deg(y) : x < y; });

    using iter = std::vector<int>::iterator;
    std::vector<std::pair<iter, iter>> classes;
    for (auto it = order.begin(); it != order.end();) {
        auto stop = std::find_if(it, order.end(), [&](int v) { return deg(v) != deg(*it); });
        classes.emplace_back(it, stop);
        it = stop;
    }

    std::uint64_t best = ~std::uint64_t{0};
    for (;;) {
        best = std::min(best, encode(adj, order));
        // Odometer over the per-class permutations; each class wraps back
        // to sorted order when exhausted.
        auto c = classes.begin();
        while (c != classes.end() && !std::next_permutation(c->first, c->second)) ++c;
        if (c == classes.end()) break;
    }
    return best;
}

graph decode(int n, std::uint64_t key) {
    std::vector<edge> edges;
    int bit = n * (n - 1) / 2 - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, --bit)
            if ((key >> bit) & 1U) edges.emplace_back(i, j);
    return graph(n, edges);
}

}  // namespace

std::vector<graph> graph_catalog(int n) {
    if (n < 1 || n > 8) throw input_error("graph catalog: n must lie in [1, 8]");
    std::set<std::uint64_t> keys{0};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t key : keys) {
            const graph base = decode(m - 1, key);
            std::vector<vertex_set> adj(base.adjacency().begin(), base.adjacency().end());
            adj.emplace_back();
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (m - 1)); ++nb) {
                std::vector<vertex_set> grown = adj;
                grown.back() = vertex_set{nb};
                for (int v : vertex_set{nb}) grown[static_cast<std::size_t>(v)] = grown[static_cast<std::size_t>(v)].with(m - 1);
                next.insert(canonical_key(grown));
            }
        }
        keys = std::move(next);
    }
    std::vector<graph> out;
    out.reserve(keys.size());
    for (std::uint64_t key : keys) out.push_back(decode(n, key));
    return out;
}

}  // namespace svo
