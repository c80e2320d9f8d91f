#include "svo/independent_sets.hpp"

#include <algorithm>

namespace svo {

layer empty_layer() { return layer{0, {vertex_set{}}}; }

layer next_layer(const graph& g, const layer& prev, vertex_set candidates, const engine_options& opts) {
    std::vector<std::vector<vertex_set>> parts(resolve_threads(opts.threads));
    const std::size_t used = parallel_chunks(prev.sets.size(), static_cast<unsigned>(parts.size()),
                                             [&](std::size_t c, std::size_t begin, std::size_t end) {
        auto& out = parts[c];
        for (std::size_t i = begin; i < end; ++i) {
            const vertex_set s = prev.sets[i];
            vertex_set allowed = candidates - closed_neighborhood(g, s);
            if (!s.empty()) allowed = allowed & vertex_set{~vertex_set::first(s.highest() + 1).bits()};
            for (int v : allowed) out.push_back(s.with(v));
        }
    });

    layer out{prev.k + 1, {}};
    std::size_t total = 0;
    for (std::size_t c = 0; c < used; ++c) total += parts[c].size();
    out.sets.reserve(total);
    for (std::size_t c = 0; c < used; ++c) out.sets.insert(out.sets.end(), parts[c].begin(), parts[c].end());
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::vector<layer> enumerate_layers(const graph& g, const engine_options& opts) {
    return enumerate_layers(g, g.vertices(), opts);
}

std::vector<layer> enumerate_layers(const graph& g, vertex_set candidates, const engine_options& opts) {
    std::vector<layer> layers{empty_layer()};
    for (;;) {
        layer next = next_layer(g, layers.back(), candidates & g.vertices(), opts);
        if (next.sets.empty()) break;
        layers.push_back(std::move(next));
    }
    return layers;
}

int independence_number(const graph& g) { return static_cast<int>(enumerate_layers(g).size()) - 1; }

std::size_t count_independent_sets(const graph& g) {
    std::size_t total = 0;
    layer current = empty_layer();
    while (!current.sets.empty()) {
        total += current.sets.size();
        current = next_layer(g, current, g.vertices());
    }
    return total;
}

}  // namespace svo
