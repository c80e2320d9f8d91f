#include "svo/graph.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "svo/error.hpp"

namespace svo {

namespace {

void check_order(int n) {
    if (n < 1 || n > max_vertices)
        throw input_error("vertex count " + std::to_string(n) + " outside [1, 64]");
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Splits a line into whitespace-separated integer fields; false on junk.
bool parse_fields(std::string_view line, std::vector<long long>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos == line.size()) break;
        long long value = 0;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) return false;
        if (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r') return false;
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return true;
}

bool is_skippable(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

}  // namespace

graph::graph(int n) : n_(n) { check_order(n); }

graph::graph(int n, std::span<const edge> edges) : graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        adj_[u] = adj_[u].with(v);
        adj_[v] = adj_[v].with(u);
    }
}

std::size_t graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(adj_[v].size());
    return twice / 2;
}

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

graph graph::without(vertex_set removed) const {
    const vertex_set keep = vertices() - removed;
    if (keep.empty()) throw input_error("cannot delete every vertex");
    graph out(keep.size());
    int i = 0;
    for (int v : keep) out.adj_[i++] = compress(adj_[v], keep);
    return out;
}

graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<long long> fields;

    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_skippable(line)) return true;
        }
        return false;
    };

    if (!next_data_line()) throw input_error("empty input: expected header line \"n m\"");
    if (!parse_fields(line, fields) || fields.size() != 2)
        throw input_error(at_line(line_no) + "expected header \"n m\"");
    if (fields[0] < 1 || fields[0] > max_vertices)
        throw input_error(at_line(line_no) + "vertex count " + std::to_string(fields[0]) +
                          " outside [1, 64]");
    if (fields[1] < 0) throw input_error(at_line(line_no) + "negative edge count");

    const int n = static_cast<int>(fields[0]);
    const long long m = fields[1];
    std::vector<edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line())
            throw input_error("unexpected end of input: expected " + std::to_string(m) +
                              " edges, found " + std::to_string(i));
        if (!parse_fields(line, fields) || fields.size() != 2)
            throw input_error(at_line(line_no) + "expected edge \"u v\"");
        const long long u = fields[0];
        const long long v = fields[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error(at_line(line_no) + "vertex index out of range 0.." + std::to_string(n - 1));
        if (u == v) throw input_error(at_line(line_no) + "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line()) throw input_error(at_line(line_no) + "trailing data after " + std::to_string(m) + " edges");
    return graph(n, edges);
}

graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path.string());
    try {
        return parse_edge_list(in);
    } catch (const input_error& e) {
        throw input_error(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const graph& g) {
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

vertex_set open_neighborhood(const graph& g, vertex_set s) {
    vertex_set out;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

vertex_set closed_neighborhood(const graph& g, vertex_set s) { return s | open_neighborhood(g, s); }

int a_value(const graph& g, vertex_set s) { return g.order() - closed_neighborhood(g, s).size(); }

bool is_independent(const graph& g, vertex_set s) { return !s.intersects(open_neighborhood(g, s)); }

bool is_connected(const graph& g) {
    vertex_set seen = vertex_set::singleton(0);
    vertex_set frontier = seen;
    while (!frontier.empty()) {
        const vertex_set next = open_neighborhood(g, frontier) - seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices();
}

}  // namespace svo
