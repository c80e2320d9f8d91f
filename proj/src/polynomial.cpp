#include "svo/polynomial.hpp"

#include <algorithm>

#include "svo/error.hpp"

namespace svo {

namespace {

template <class T>
void trim_trailing_zeros(std::vector<T>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.emplace_back(0);
}

const rational& coeff_or_zero(const std::vector<rational>& c, std::size_t j) {
    static const rational zero;
    return j < c.size() ? c[j] : zero;
}

const b_entry* find_entry(std::span<const b_entry> entries, vertex_set s) {
    auto it = std::lower_bound(entries.begin(), entries.end(), s,
                               [](const b_entry& e, vertex_set key) { return e.set < key; });
    return it != entries.end() && it->set == s ? &*it : nullptr;
}

}  // namespace

ordering_polynomial make_polynomial(int n, std::vector<rational> p_coeffs) {
    trim_trailing_zeros(p_coeffs);
    const big_int n_factorial = factorial(static_cast<unsigned>(n));
    ordering_polynomial poly{n, std::move(p_coeffs), {}};
    poly.f_coeffs.reserve(poly.p_coeffs.size());
    for (std::size_t j = 0; j < poly.p_coeffs.size(); ++j) {
        const rational c = poly.p_coeffs[j] * rational(n_factorial);
        check_internal(is_integer(c) && c >= 0,
                       "n! * p_" + std::to_string(j) + " = " + to_string(c) + " is not a nonnegative integer");
        poly.f_coeffs.push_back(c.get_num());
    }
    return poly;
}

ordering_polynomial build_polynomial(const graph& g, const engine_options& opts) {
    std::vector<rational> p;
    sweep_b_layers(g, g.vertices(), opts, [&](int, std::span<const b_entry> entries) {
        rational coeff = layer_weight_sum(g, entries, opts);
        coeff /= g.order();
        p.push_back(std::move(coeff));
    });
    return make_polynomial(g.order(), std::move(p));
}

sigma_result eval_at_minus_one(const ordering_polynomial& poly) {
    rational value;
    for (std::size_t j = 0; j < poly.p_coeffs.size(); ++j) {
        if (j % 2 == 0)
            value += poly.p_coeffs[j];
        else
            value -= poly.p_coeffs[j];
    }
    return make_sigma_result(poly.n, value);
}

bad_distribution bad_distribution_of(const ordering_polynomial& poly) {
    const auto n = static_cast<std::size_t>(poly.n);
    const std::size_t terms = poly.f_coeffs.size();
    bad_distribution dist;
    dist.a_k.assign(n + 1, big_int(0));
    big_int total;
    for (std::size_t k = 0; k <= n; ++k) {
        big_int a;
        for (std::size_t j = k; j < terms; ++j) {
            const big_int term = binomial(static_cast<unsigned>(j), static_cast<unsigned>(k)) * poly.f_coeffs[j];
            if ((j - k) % 2 == 0)
                a += term;
            else
                a -= term;
        }
        check_internal(a >= 0, "A_" + std::to_string(k) + " = " + to_string(a) + " is negative");
        total += a;
        dist.a_k[k] = std::move(a);
    }
    check_internal(total == factorial(poly.n), "sum of A_k = " + to_string(total) + " differs from n!");
    return dist;
}

std::vector<big_int> expand_shifted(const bad_distribution& dist) {
    std::vector<big_int> out(dist.a_k.size(), big_int(0));
    for (std::size_t k = 0; k < dist.a_k.size(); ++k)
        if (dist.a_k[k] != 0)
            for (std::size_t j = 0; j <= k; ++j)
                out[j] += binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * dist.a_k[k];
    return out;
}

rational eval_indicator(const graph& g, vertex_set good, const engine_options& opts) {
    if (!good.subset_of(g.vertices())) throw input_error("set " + to_string(good) + " is not a vertex subset");
    rational total;
    sweep_b_layers(g, good, opts, [&](int k, std::span<const b_entry> entries) {
        rational sum;
        for (const auto& e : entries) sum += weight(g, e.set, e.b);
        if (k % 2 == 0)
            total += sum;
        else
            total -= sum;
    });
    return total;
}

rational eval_partial(const graph& g, vertex_set bad, vertex_set good, const engine_options& opts) {
    if (!bad.subset_of(g.vertices()) || !good.subset_of(g.vertices()))
        throw input_error("sets " + to_string(bad) + ", " + to_string(good) + " are not vertex subsets");
    if (!is_independent(g, bad)) return rational(0);

    // Any independent superset of T avoids N(T), so only T and the good
    // vertices outside N[T] can occur.
    const vertex_set candidates = bad | (good - closed_neighborhood(g, bad));
    const int base = bad.size();
    rational total;
    sweep_b_layers(g, candidates, opts, [&](int k, std::span<const b_entry> entries) {
        if (k < base) return;
        rational sum;
        for (const auto& e : entries)
            if (bad.subset_of(e.set)) sum += weight(g, e.set, e.b);
        if ((k - base) % 2 == 0)
            total += sum;
        else
            total -= sum;
    });
    return total;
}

deletion_report delete_decompose(const graph& g, vertex_set removed, const engine_options& opts) {
    if (!removed.subset_of(g.vertices())) throw input_error("deletion set " + to_string(removed) + " is not a vertex subset");
    if (removed == g.vertices()) throw input_error("deletion set must leave at least one vertex");

    const vertex_set keep = g.vertices() - removed;
    const graph reduced = g.without(removed);
    const int s_size = removed.size();

    deletion_report report;
    report.removed = removed;
    report.p_g = build_polynomial(g, opts);
    report.p_gprime = build_polynomial(reduced, opts);

    const b_table table_g = compute_b_table(g, opts);
    const b_table table_gp = compute_b_table(reduced, opts);

    std::vector<rational> u(static_cast<std::size_t>(table_g.layer_count()));
    std::vector<rational> r(static_cast<std::size_t>(std::max(table_g.layer_count(), table_gp.layer_count())));

    report.subsets_match = true;
    for (int k = 0; k < table_g.layer_count(); ++k) {
        std::vector<vertex_set> avoiding;
        for (const auto& e : table_g.layer(k)) {
            if (e.set.intersects(removed))
                u[static_cast<std::size_t>(k)] += weight(g, e.set, e.b);
            else
                avoiding.push_back(e.set);
        }
        std::vector<vertex_set> lifted;
        if (k < table_gp.layer_count())
            for (const auto& e : table_gp.layer(k)) lifted.push_back(expand(e.set, keep));
        if (avoiding != lifted) report.subsets_match = false;
    }
    if (table_gp.layer_count() > table_g.layer_count()) report.subsets_match = false;

    report.a_relation_holds = true;
    report.delta_b_agrees = true;
    std::vector<b_entry> prev_delta{{vertex_set{}, rational(0)}};
    for (int k = 0; k < table_gp.layer_count(); ++k) {
        std::vector<b_entry> cur_delta;
        for (const auto& e : table_gp.layer(k)) {
            const vertex_set s = expand(e.set, keep);
            const rational* b_g = table_g.find(s);
            if (b_g == nullptr) {
                report.subsets_match = false;
                report.delta_b_agrees = false;
                continue;
            }
            const int hit = (closed_neighborhood(g, s) & removed).size();
            if (a_value(reduced, e.set) != a_value(g, s) - (s_size - hit)) report.a_relation_holds = false;

            r[static_cast<std::size_t>(k)] += weight(reduced, e.set, e.b) - weight(g, s, *b_g);

            rational direct = e.b - *b_g;
            rational recursive;
            if (k > 0) {
                for (int v : s) {
                    const b_entry* sub = find_entry(prev_delta, s.without(v));
                    if (sub == nullptr) {
                        report.delta_b_agrees = false;
                        continue;
                    }
                    recursive += sub->b;
                }
                recursive += *b_g * hit;
                recursive /= closed_neighborhood(reduced, e.set).size();
            }
            if (direct != recursive) report.delta_b_agrees = false;
            cur_delta.push_back(b_entry{s, recursive});
            report.delta_b.push_back(delta_b_entry{s, std::move(direct), std::move(recursive)});
        }
        std::sort(cur_delta.begin(), cur_delta.end(), [](const b_entry& x, const b_entry& y) { return x.set < y.set; });
        prev_delta = std::move(cur_delta);
    }

    trim_trailing_zeros(u);
    trim_trailing_zeros(r);
    report.u_s = std::move(u);
    report.r_s = std::move(r);

    report.identity_holds = true;
    const std::size_t len = std::max({report.p_g.p_coeffs.size(), report.p_gprime.p_coeffs.size(), report.r_s.size(),
                                      report.u_s.size()});
    for (std::size_t j = 0; j < len; ++j) {
        const rational rhs =
            coeff_or_zero(report.p_gprime.p_coeffs, j) - coeff_or_zero(report.r_s, j) + coeff_or_zero(report.u_s, j);
        if (coeff_or_zero(report.p_g.p_coeffs, j) != rhs) report.identity_holds = false;
    }
    return report;
}

}  // namespace svo
