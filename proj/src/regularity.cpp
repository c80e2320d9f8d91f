#include "svo/regularity.hpp"

#include "svo/error.hpp"
#include "svo/independent_sets.hpp"

namespace svo {

regularity_verdict detect_fully_regular(const graph& g) {
    const auto layers = enumerate_layers(g);
    regularity_profile profile{static_cast<int>(layers.size()) - 1, {}};
    for (const auto& l : layers) {
        const vertex_set reference = l.sets.front();
        const int a_ref = a_value(g, reference);
        for (vertex_set s : l.sets) {
            const int a = a_value(g, s);
            if (a != a_ref) return {std::nullopt, regularity_witness{reference, a_ref, s, a}};
        }
        profile.a_seq.push_back(a_ref);
    }
    return {std::move(profile), std::nullopt};
}

bool count_check(const graph& g, const regularity_profile& profile) {
    const auto layers = enumerate_layers(g);
    if (static_cast<int>(layers.size()) != profile.alpha + 1) return false;
    rational expected(1);  // a_0 ... a_{i-1} / i!
    for (int i = 0; i <= profile.alpha; ++i) {
        if (i > 0) {
            expected *= profile.a_seq[static_cast<std::size_t>(i - 1)];
            expected /= i;
        }
        if (expected != rational(static_cast<unsigned long>(layers[static_cast<std::size_t>(i)].sets.size())))
            return false;
    }
    // No independent set of size alpha + 1 exists exactly when a_alpha = 0.
    expected *= profile.a_seq.back();
    return expected == 0;
}

big_int sigma_closed_form(const regularity_profile& profile) {
    const int a0 = profile.a_seq.front();
    rational sum;
    rational product(1);
    for (int i = 0; i <= profile.alpha; ++i) {
        if (i > 0) {
            const int aj = profile.a_seq[static_cast<std::size_t>(i)];
            check_internal(a0 - aj > 0, "closed form: a_0 - a_j must be positive");
            product *= -aj;
            product /= a0 - aj;
        }
        sum += product;
    }
    const rational value = sum * rational(factorial(static_cast<unsigned>(a0)));
    check_internal(is_integer(value), "closed-form sigma " + to_string(value) + " is not an integer");
    return value.get_num();
}

}  // namespace svo
