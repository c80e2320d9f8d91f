#ifndef SVO_POLYNOMIAL_HPP
#define SVO_POLYNOMIAL_HPP

#include <vector>

#include "svo/counting.hpp"
#include "svo/exact.hpp"
#include "svo/graph.hpp"
#include "svo/parallel.hpp"
#include "svo/vertex_set.hpp"

namespace svo {

/// P_G(x) = sum over independent I of w(I) x^|I|, and F(x) = n! P_G(x).
/// Trailing zero coefficients are dropped; at least one coefficient is kept.
struct ordering_polynomial {
    int n = 0;
    std::vector<rational> p_coeffs;
    std::vector<big_int> f_coeffs;
};

/// a_k[k] = number of orderings with exactly k bad vertices, k = 0..n.
struct bad_distribution {
    std::vector<big_int> a_k;
};

/// Throws internal_error if some n! * p_j is not a nonnegative integer.
ordering_polynomial make_polynomial(int n, std::vector<rational> p_coeffs);

ordering_polynomial build_polynomial(const graph& g, const engine_options& opts = {});

/// F(-1) = n! P_G(-1).
sigma_result eval_at_minus_one(const ordering_polynomial& poly);

/// Binomial transform A_k = sum_{j >= k} (-1)^(j-k) C(j, k) c_j of the
/// integer coefficients. Throws internal_error if some A_k < 0 or the
/// total is not n!.
bad_distribution bad_distribution_of(const ordering_polynomial& poly);

/// sum_k A_k (x + 1)^k expanded back into powers of x, padded to length n + 1.
std::vector<big_int> expand_shifted(const bad_distribution& dist);

/// Multivariate polynomial at x = -1_S: sum over independent I ⊆ S of
/// (-1)^|I| w(I), which is Pr(G_S).
rational eval_indicator(const graph& g, vertex_set good, const engine_options& opts = {});

/// Sum over independent I with T ⊆ I ⊆ S ∪ T of (-1)^|I \ T| w(I), which
/// is Pr(B_T ∩ G_{S \ T}). Zero when T is not independent.
rational eval_partial(const graph& g, vertex_set bad, vertex_set good, const engine_options& opts = {});

struct delta_b_entry {
    vertex_set set;  // labelled in G
    rational direct;     // b_{G'}(I) - b_G(I)
    rational recursive;  // triangular recursion over |I|
};

struct deletion_report {
    vertex_set removed;
    ordering_polynomial p_g;
    ordering_polynomial p_gprime;
    std::vector<rational> r_s;
    std::vector<rational> u_s;
    std::vector<delta_b_entry> delta_b;  // layer by layer, mask-ascending

    bool identity_holds = false;       // P_G = P_{G'} - R_S + U_S coefficientwise
    bool subsets_match = false;        // I(G') = {I in I(G) : I ∩ S = ∅}
    bool a_relation_holds = false;     // a_{G'}(I) = a_G(I) - (|S| - |N_G[I] ∩ S|)
    bool delta_b_agrees = false;       // direct == recursive for every I

    bool consistent() const { return identity_holds && subsets_match && a_relation_holds && delta_b_agrees; }
};

/// Requires S ⊊ V. G' = G - S keeps the order of the surviving vertices.
deletion_report delete_decompose(const graph& g, vertex_set removed, const engine_options& opts = {});

}  // namespace svo

#endif  // SVO_POLYNOMIAL_HPP
