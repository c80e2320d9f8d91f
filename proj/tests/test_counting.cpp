#include <doctest.h>

#include <random>

#include "support.hpp"
#include "svo/counting.hpp"
#include "svo/error.hpp"
#include "svo/generators.hpp"
#include "svo/independent_sets.hpp"
#include "svo/oracle.hpp"

using namespace svo;

namespace {

vertex_set vs(std::initializer_list<int> v) { return vertex_set::of(std::vector<int>(v)); }

rational q(long p, long d = 1) {
    rational r{big_int(p), big_int(d)};
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("b table reproduces the worked example") {
    const graph g = test::c5_chord();
    const b_table t = compute_b_table(g);
    CHECK(t.size() == 10);
    CHECK(t.at(vertex_set{}) == 1);
    CHECK(t.at(vs({0})) == q(1, 3));
    CHECK(t.at(vs({1})) == q(1, 4));
    CHECK(t.at(vs({2})) == q(1, 3));
    CHECK(t.at(vs({3})) == q(1, 4));
    CHECK(t.at(vs({4})) == q(1, 3));
    CHECK(t.at(vs({0, 2})) == q(2, 15));
    CHECK(t.at(vs({0, 3})) == q(7, 60));
    CHECK(t.at(vs({1, 4})) == q(7, 60));
    CHECK(t.at(vs({2, 4})) == q(2, 15));
    CHECK(t.find(vs({1, 3})) == nullptr);
    CHECK_THROWS_AS(t.at(vs({1, 3})), input_error);
}

TEST_CASE("b by permutation sum") {
    const graph g = test::c5_chord();
    CHECK(b_permutation_sum(g, vs({0, 3})) == q(7, 60));
    CHECK(b_permutation_sum(g, vertex_set{}) == 1);
    CHECK(b_permutation_sum(g, vs({0})) == q(1, 3));
    CHECK_THROWS_AS(b_permutation_sum(g, vs({1, 3})), input_error);
    CHECK_THROWS_AS(b_permutation_sum(graph(9), vertex_set::first(9)), input_error);
    CHECK_NOTHROW(b_permutation_sum(graph(8), vertex_set::first(8)));
}

TEST_CASE("weights") {
    const graph g = test::c5_chord();
    const b_table t = compute_b_table(g);
    CHECK(weight(g, vs({1}), t) == q(1, 20));
    CHECK(weight(g, vs({0, 2}), t) == 0);
    CHECK(weight(g, vertex_set{}, t) == 1);
}

TEST_CASE("sigma on named graphs") {
    const auto c5c = sigma(test::c5_chord());
    CHECK(c5c.sigma == 60);
    CHECK(c5c.sigma_prime == q(1, 2));
    CHECK(c5c.n == 5);

    for (int n = 1; n <= 12; ++n) CHECK(sigma(complete_graph(n)).sigma == factorial(static_cast<unsigned>(n)));
    CHECK(sigma(graph(1)).sigma == 1);
    CHECK(sigma(test::p2_plus_isolated()).sigma == 0);
    CHECK(sigma(star_graph(3)).sigma == 12);
    CHECK(sigma(complete_graph(2)).sigma == 2);
    CHECK(sigma(test::p3()).sigma == 4);
}

TEST_CASE("sigma is exact beyond 64-bit range") {
    // K_25: every ordering is successive, 25! > 2^64.
    CHECK(sigma(complete_graph(25)).sigma == factorial(25));
    // Paths: 2^(n-1) successive orderings (grow an interval left or right).
    for (int n = 1; n <= 24; ++n) CHECK(sigma(path_graph(n)).sigma == big_int(1) << (n - 1));
}

TEST_CASE("make_sigma_result rejects non-integral or out-of-range counts") {
    CHECK_THROWS_AS(make_sigma_result(3, q(1, 7)), internal_error);
    CHECK_THROWS_AS(make_sigma_result(3, q(2)), internal_error);
    CHECK_THROWS_AS(make_sigma_result(3, q(-1, 6)), internal_error);
    CHECK(make_sigma_result(3, q(1, 3)).sigma == 2);
}

TEST_CASE("good-event probabilities") {
    CHECK(pr_good(test::c5_chord(), vertex_set::first(5)) == q(1, 2));
    CHECK(pr_good(test::c5_chord(), vertex_set{}) == 1);
    CHECK(pr_good(test::p3(), vs({2})) == q(5, 6));
    CHECK_THROWS_AS(pr_good(test::p3(), vs({3})), input_error);
}

TEST_CASE("Möbius recovery of bad-event probabilities") {
    CHECK(pr_bad_via_mobius(test::c5_chord(), vs({1})) == q(1, 20));
    CHECK(pr_bad_via_mobius(test::c5_chord(), vertex_set{}) == 1);
    // Both endpoints bad would need both before the middle vertex while
    // neither is first.
    CHECK(pr_bad_via_mobius(test::p3(), vs({0, 2})) == 0);
    CHECK(oracle::brute_event(test::p3(), vs({0, 2}), vertex_set{}) == 0);
    CHECK_THROWS_AS(pr_bad_via_mobius(test::c5_chord(), vs({1, 3})), input_error);
}

TEST_CASE("property: recursion equals the permutation sum (|I| <= 6, n <= 12)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const graph g = test::random_graph(n, 0.3, rng);
        const b_table t = compute_b_table(g);
        for (int k = 0; k < t.layer_count() && k <= 6; ++k)
            for (const auto& e : t.layer(k)) CHECK(e.b == b_permutation_sum(g, e.set));
    }
}

TEST_CASE("property: weights are probabilities and b values are positive") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const graph g = test::random_graph(n, 0.35, rng);
        const b_table t = compute_b_table(g);
        for (int k = 0; k < t.layer_count(); ++k)
            for (const auto& e : t.layer(k)) {
                CHECK(e.b > 0);
                const rational w = weight(g, e.set, e.b);
                CHECK(w >= 0);
                CHECK(w <= 1);
            }
        const auto s = sigma(g);
        CHECK(s.sigma_prime >= 0);
        CHECK(s.sigma_prime <= 1);
    }
}

TEST_CASE("property: Möbius recovery equals the weight for every independent set (n <= 8)") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const graph g = test::random_graph(n, 0.4, rng);
        const b_table t = compute_b_table(g);
        for (int k = 0; k < t.layer_count(); ++k)
            for (const auto& e : t.layer(k)) CHECK(pr_bad_via_mobius(g, e.set) == weight(g, e.set, e.b));
    }
}

TEST_CASE("property: sigma matches the oracle on random graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const graph g = test::random_graph(n, 0.45, rng);
        const auto s = sigma(g);
        CHECK(s.sigma == oracle::brute_sigma(g));
        if (!is_connected(g)) CHECK(s.sigma == 0);
    }
}

TEST_CASE("thread count does not change results") {
    const graph g = random_connected_graph(22, 0.15, 4);
    const auto one = sigma(g, {1});
    const auto four = sigma(g, {4});
    CHECK(one.sigma == four.sigma);
    CHECK(one.sigma_prime == four.sigma_prime);
}
