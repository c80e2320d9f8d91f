#include "svo/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "svo/counting.hpp"
#include "svo/error.hpp"
#include "svo/generators.hpp"
#include "svo/independent_sets.hpp"
#include "svo/oracle.hpp"
#include "svo/polynomial.hpp"
#include "svo/regularity.hpp"

namespace svo::cli {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point since) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - since).count();
}

class mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json set_json(vertex_set s) { return json(s.to_vector()); }

template <class T>
json strings(const std::vector<T>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json input_json(const std::string& source, const graph& g) {
    return json{{"source", source}, {"n", g.order()}, {"edges", g.edge_count()}, {"connected", is_connected(g)}};
}

struct options {
    bool json_output = false;
    bool no_timing = false;
    unsigned threads = 0;
    std::string path;
    std::string good;
    std::string bad;
    std::string removed;
    int max_n = 7;
    int n = 20;
    double density = 0.2;
    std::uint64_t seed = 1;
};

engine_options engine(const options& o) { return {resolve_threads(o.threads)}; }

graph load(const options& o, std::ostream& err) {
    graph g = read_edge_list_file(o.path);
    if (!is_connected(g)) err << "warning: " << o.path << " is not connected; it has no successive orderings\n";
    return g;
}

json poly_json(const ordering_polynomial& p) {
    return json{{"p_coeffs", strings(p.p_coeffs)}, {"f_coeffs", strings(p.f_coeffs)}};
}

json cmd_count(const options& o, const graph& g) {
    const auto r = sigma(g, engine(o));
    return json{{"sigma", to_string(r.sigma)}, {"sigma_prime", to_string(r.sigma_prime)}};
}

json cmd_poly(const options& o, const graph& g) {
    const auto poly = build_polynomial(g, engine(o));
    const auto dist = bad_distribution_of(poly);
    const auto at_minus_one = eval_at_minus_one(poly);
    check_internal(at_minus_one.sigma == dist.a_k.front(), "F(-1) differs from A_0");
    json out = poly_json(poly);
    out["A"] = strings(dist.a_k);
    out["sigma"] = to_string(at_minus_one.sigma);
    return out;
}

json cmd_eval(const options& o, const graph& g) {
    const vertex_set good = parse_vertex_list(o.good, g.order());
    const vertex_set bad = parse_vertex_list(o.bad, g.order());
    json out{{"good", set_json(good)}, {"bad", set_json(bad)}};
    if (bad.empty()) {
        out["event"] = "G_S";
        out["probability"] = to_string(eval_indicator(g, good, engine(o)));
    } else {
        out["event"] = "B_T and G_(S\\T)";
        out["effective_good"] = set_json(good - bad);
        out["probability"] = to_string(eval_partial(g, bad, good, engine(o)));
    }
    return out;
}

json cmd_delete(const options& o, const graph& g, bool& consistent) {
    const vertex_set removed = parse_vertex_list(o.removed, g.order());
    const auto report = delete_decompose(g, removed, engine(o));
    json delta = json::array();
    for (const auto& e : report.delta_b) delta.push_back(json{{"set", set_json(e.set)}, {"value", to_string(e.direct)}});
    consistent = report.consistent();
    return json{{"set", set_json(removed)},
                {"p_g", strings(report.p_g.p_coeffs)},
                {"p_gprime", strings(report.p_gprime.p_coeffs)},
                {"r_s", strings(report.r_s)},
                {"u_s", strings(report.u_s)},
                {"identity", report.identity_holds},
                {"subsets_match", report.subsets_match},
                {"a_relation", report.a_relation_holds},
                {"delta_b_agrees", report.delta_b_agrees},
                {"delta_b", delta}};
}

json cmd_regular(const options& o, const graph& g) {
    const auto verdict = detect_fully_regular(g);
    if (!verdict.fully_regular()) {
        const auto& w = *verdict.witness;
        return json{{"fully_regular", false},
                    {"witness",
                     json{{"first", set_json(w.first)},
                          {"a_first", w.a_first},
                          {"second", set_json(w.second)},
                          {"a_second", w.a_second}}}};
    }
    const auto& p = *verdict.profile;
    const big_int closed = sigma_closed_form(p);
    const auto general = sigma(g, engine(o));
    check_internal(closed == general.sigma, "closed form " + to_string(closed) + " differs from sigma " +
                                                to_string(general.sigma));
    return json{{"fully_regular", true},
                {"alpha", p.alpha},
                {"a", p.a_seq},
                {"count_check", count_check(g, p)},
                {"sigma_closed_form", to_string(closed)},
                {"sigma", to_string(general.sigma)}};
}

struct verify_tally {
    std::size_t graphs = 0;
    std::size_t events = 0;
};

// Compares every engine route against the oracle on one graph; throws
// mismatch on the first disagreement.
void verify_graph(const graph& g, const engine_options& eng, std::size_t samples, std::mt19937_64& rng,
                  verify_tally& tally, const std::string& label) {
    const auto fail = [&](const std::string& what) { throw mismatch(label + ": " + what); };

    const auto engine_sigma = sigma(g, eng);
    const big_int brute = oracle::brute_sigma(g, eng);
    if (engine_sigma.sigma != brute)
        fail("sigma " + to_string(engine_sigma.sigma) + " != oracle " + to_string(brute));

    const auto poly = build_polynomial(g, eng);
    const auto dist = bad_distribution_of(poly);
    const auto brute_dist = oracle::brute_distribution(g, eng);
    if (dist.a_k != brute_dist.a_k) fail("bad-vertex distribution differs from oracle");

    const auto pairs = oracle::brute_pair_counts(g, eng);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const big_int c = j < poly.f_coeffs.size() ? poly.f_coeffs[j] : big_int(0);
        if (c != pairs[j]) fail("f_coeffs[" + std::to_string(j) + "] differs from the (ordering, subset) count");
    }

    const auto census = oracle::bad_set_census(g, eng);
    const std::uint64_t full = g.vertices().bits();
    for (std::size_t i = 0; i < samples; ++i) {
        const vertex_set bad{rng() & full};
        const vertex_set good = vertex_set{rng() & full} - bad;
        const rational expected = oracle::event_from_census(census, g.order(), bad, good);
        const rational got = eval_partial(g, bad, good, eng);
        if (got != expected)
            fail("Pr(B_" + to_string(bad) + " and G_" + to_string(good) + ") = " + to_string(got) + " != oracle " +
                 to_string(expected));
        const rational good_only = eval_indicator(g, good, eng);
        if (good_only != oracle::event_from_census(census, g.order(), vertex_set{}, good))
            fail("Pr(G_" + to_string(good) + ") differs from oracle");
        tally.events += 2;
    }
    ++tally.graphs;
}

json cmd_verify(const options& o, std::ostream& err) {
    const engine_options eng = engine(o);
    std::mt19937_64 rng(o.seed);
    verify_tally tally;
    json out;
    if (!o.path.empty()) {
        const graph g = load(o, err);
        if (g.order() > oracle::max_order)
            throw input_error("verify: n = " + std::to_string(g.order()) + " exceeds the oracle limit of 10");
        verify_graph(g, eng, 64, rng, tally, o.path);
        out["source"] = o.path;
    } else {
        if (o.max_n < 1 || o.max_n > 8) throw input_error("verify: --max-n must lie in [1, 8]");
        for (int n = 1; n <= o.max_n; ++n) {
            std::size_t index = 0;
            for (const graph& g : graph_catalog(n))
                verify_graph(g, eng, 8, rng, tally, "catalog n=" + std::to_string(n) + " #" + std::to_string(index++));
        }
        out["source"] = "catalog";
        out["max_n"] = o.max_n;
    }
    out["graphs_checked"] = tally.graphs;
    out["events_checked"] = tally.events;
    out["ok"] = true;
    return out;
}

json cmd_bench(const options& o, const graph& g, json& timing) {
    const engine_options eng = engine(o);

    auto start = clock_type::now();
    const auto count = sigma(g, eng);
    timing["count"] = elapsed_ms(start);

    start = clock_type::now();
    const auto poly = build_polynomial(g, eng);
    const auto dist = bad_distribution_of(poly);
    const auto at_minus_one = eval_at_minus_one(poly);
    timing["poly"] = elapsed_ms(start);

    const bool consistent = at_minus_one.sigma == dist.a_k.front() && at_minus_one.sigma == count.sigma;
    check_internal(consistent, "bench: F(-1), A_0 and sigma disagree");

    return json{{"sigma", to_string(count.sigma)},
                {"sigma_prime", to_string(count.sigma_prime)},
                {"independent_sets", count_independent_sets(g)},
                {"f_coeffs", strings(poly.f_coeffs)},
                {"A", strings(dist.a_k)},
                {"self_consistent", consistent}};
}

void render_value(std::ostream& out, const json& v) {
    if (v.is_string()) {
        out << v.get<std::string>();
    } else if (v.is_array()) {
        out << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out << (v[i].is_object() ? ",\n    " : ", ");
            render_value(out, v[i]);
        }
        out << ']';
    } else if (v.is_object()) {
        bool first = true;
        for (const auto& [key, item] : v.items()) {
            out << (first ? "" : " ") << key << '=';
            render_value(out, item);
            first = false;
        }
    } else {
        out << v.dump();
    }
}

void render_text(std::ostream& out, const json& doc) {
    out << "command: " << doc["command"].get<std::string>() << '\n';
    out << "input: ";
    render_value(out, doc["input"]);
    out << '\n';
    for (const auto& [key, item] : doc["result"].items()) {
        out << key << ": ";
        render_value(out, item);
        out << '\n';
    }
    if (doc.contains("timing_ms")) {
        out << "timing_ms: ";
        render_value(out, doc["timing_ms"]);
        out << '\n';
    }
}

}  // namespace

vertex_set parse_vertex_list(const std::string& text, int n) {
    std::string trimmed;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(trimmed),
                        [](char c) { return c == ' ' || c == '\t'; });
    if (trimmed == "all") return vertex_set::first(n);
    vertex_set out;
    std::stringstream in(trimmed);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw input_error("vertex list: \"" + item + "\" is not a vertex index");
        }
        if (used != item.size()) throw input_error("vertex list: \"" + item + "\" is not a vertex index");
        if (v < 0 || v >= n)
            throw input_error("vertex list: " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
        out = out.with(v);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    options o;
    CLI::App app{"Exact counting of successive vertex orderings", "svo"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json_output, "Print one JSON document");
    app.add_flag("--no-timing", o.no_timing, "Omit wall-clock timings from the output");
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto add_graph_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("graph", o.path, "Edge-list file")->required();
        return sub;
    };
    auto* count = add_graph_command("count", "Number of successive orderings");
    auto* poly = add_graph_command("poly", "Successive ordering polynomial and bad-vertex distribution");
    auto* distribution = add_graph_command("distribution", "Bad-vertex distribution A_k");
    auto* eval = add_graph_command("eval", "Pr(G_S), or Pr(B_T and G_(S\\T)) with --bad");
    eval->add_option("--good", o.good, "Good set S (comma list or 'all')");
    eval->add_option("--bad", o.bad, "Bad set T (comma list)");
    auto* del = add_graph_command("delete", "Vertex-deletion decomposition of the polynomial");
    del->add_option("--set", o.removed, "Deleted set S (comma list)");
    auto* regular = add_graph_command("regular", "Fully regular profile and closed-form count");
    auto* verify = app.add_subcommand("verify", "Compare every engine route with the brute-force oracle");
    verify->add_option("graph", o.path, "Edge-list file (n <= 10); omit to check the graph catalog");
    verify->add_option("--max-n", o.max_n, "Largest catalog order (1..8)");
    verify->add_option("--seed", o.seed, "Seed for sampled events");
    auto* bench = app.add_subcommand("bench", "Time the engine on a seeded random connected graph");
    bench->add_option("--n", o.n, "Vertex count");
    bench->add_option("--density", o.density, "Probability of each non-tree edge");
    bench->add_option("--seed", o.seed, "Generator seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_failure;
    }

    const auto start = clock_type::now();
    json doc;
    json timing = json::object();
    int status = success;
    try {
        CLI::App* chosen = app.get_subcommands().front();
        doc["command"] = chosen->get_name();
        json result;
        if (chosen == bench) {
            const graph g = random_connected_graph(o.n, o.density, o.seed);
            doc["input"] = input_json("random_connected", g);
            doc["input"]["density"] = o.density;
            doc["input"]["seed"] = o.seed;
            result = cmd_bench(o, g, timing);
        } else if (chosen == verify) {
            doc["input"] = json::object();
            result = cmd_verify(o, err);
        } else {
            const graph g = load(o, err);
            doc["input"] = input_json(o.path, g);
            if (chosen == count) {
                result = cmd_count(o, g);
            } else if (chosen == poly || chosen == distribution) {
                result = cmd_poly(o, g);
            } else if (chosen == eval) {
                result = cmd_eval(o, g);
            } else if (chosen == del) {
                bool consistent = true;
                result = cmd_delete(o, g, consistent);
                if (!consistent) {
                    err << "error: deletion identity check failed\n";
                    status = verification_mismatch;
                }
            } else if (chosen == regular) {
                result = cmd_regular(o, g);
            }
        }
        doc["result"] = std::move(result);
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return input_failure;
    } catch (const mismatch& e) {
        err << "verification mismatch: " << e.what() << '\n';
        return verification_mismatch;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_failure;
    }

    if (!o.no_timing) {
        timing["total"] = elapsed_ms(start);
        doc["timing_ms"] = timing;
    }
    if (o.json_output)
        out << doc.dump(2) << '\n';
    else
        render_text(out, doc);
    return status;
}

}  // namespace svo::cli
