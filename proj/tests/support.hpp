#ifndef SVO_TESTS_SUPPORT_HPP
#define SVO_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "svo/graph.hpp"

namespace svo::test {

inline std::string data_path(const std::string& name) { return std::string(SVO_DATA_DIR) + "/" + name; }

// Vertices v1..v5 are 0..4; the chord joins v2 and v4.
inline graph c5_chord() {
    const std::vector<edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}};
    return graph(5, e);
}

inline graph p3() {
    const std::vector<edge> e{{0, 1}, {1, 2}};
    return graph(3, e);
}

inline graph p2_plus_isolated() {
    const std::vector<edge> e{{0, 1}};
    return graph(3, e);
}

// G(n, p), possibly disconnected.
inline graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return graph(n, e);
}

inline vertex_set random_subset(int n, std::mt19937_64& rng) {
    return vertex_set{rng() & vertex_set::first(n).bits()};
}

}  // namespace svo::test

#endif  // SVO_TESTS_SUPPORT_HPP
