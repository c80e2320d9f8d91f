#ifndef SVO_GRAPH_HPP
#define SVO_GRAPH_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "svo/vertex_set.hpp"

namespace svo {

using edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1, 1 <= n <= 64.
/// Immutable once constructed.
class graph {
public:
    /// Edgeless graph on n vertices.
    explicit graph(int n);

    /// Throws input_error on self-loops, out-of-range endpoints or bad n.
    /// Duplicate edges collapse.
    graph(int n, std::span<const edge> edges);

    int order() const { return n_; }
    vertex_set vertices() const { return vertex_set::first(n_); }
    vertex_set neighbors(int v) const { return adj_[v]; }
    std::span<const vertex_set> adjacency() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    std::size_t edge_count() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<edge> edges() const;

    /// Induced subgraph on V \ removed, relabelled so that the surviving
    /// vertices keep their relative order (see compress / expand).
    graph without(vertex_set removed) const;

    bool operator==(const graph&) const = default;

private:
    int n_ = 0;
    std::array<vertex_set, max_vertices> adj_{};
};

/// Edge-list text: first data line "n m", then m lines "u v".
/// Lines whose first non-blank character is '#' and blank lines are skipped.
/// Errors carry the 1-based line number.
graph parse_edge_list(std::istream& in);
graph parse_edge_list(std::string_view text);
graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const graph& g);

/// Union of the neighborhoods of the members of `s`. Members of `s` appear
/// in the result when they are adjacent to another member.
vertex_set open_neighborhood(const graph& g, vertex_set s);

/// s together with its open neighborhood.
vertex_set closed_neighborhood(const graph& g, vertex_set s);

/// Number of vertices outside the closed neighborhood of `s`.
int a_value(const graph& g, vertex_set s);

bool is_independent(const graph& g, vertex_set s);

bool is_connected(const graph& g);

}  // namespace svo

#endif  // SVO_GRAPH_HPP
