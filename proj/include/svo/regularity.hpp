#ifndef SVO_REGULARITY_HPP
#define SVO_REGULARITY_HPP

#include <optional>
#include <vector>

#include "svo/exact.hpp"
#include "svo/graph.hpp"
#include "svo/vertex_set.hpp"

namespace svo {

/// a(I) = a_seq[|I|] for every independent I; a_seq[0] = n.
struct regularity_profile {
    int alpha = 0;
    std::vector<int> a_seq;
};

/// Two independent sets of equal size with different a values.
struct regularity_witness {
    vertex_set first;
    int a_first = 0;
    vertex_set second;
    int a_second = 0;
};

struct regularity_verdict {
    std::optional<regularity_profile> profile;
    std::optional<regularity_witness> witness;

    bool fully_regular() const { return profile.has_value(); }
};

/// Groups a(I) by |I| over all independent sets. The witness pairs the
/// first set of the first offending layer with the first set disagreeing
/// with it (mask order).
regularity_verdict detect_fully_regular(const graph& g);

/// Number of independent sets of size i equals a_0 a_1 ... a_{i-1} / i!
/// for every i, and there are none of size alpha + 1.
bool count_check(const graph& g, const regularity_profile& profile);

/// a_0! * sum_{i=0}^{alpha} prod_{j=1}^{i} (-a_j) / (a_0 - a_j).
/// Throws internal_error when the value is not an integer.
big_int sigma_closed_form(const regularity_profile& profile);

}  // namespace svo

#endif  // SVO_REGULARITY_HPP
