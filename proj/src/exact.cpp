#include "svo/exact.hpp"
#include "svo/vertex_set.hpp"

namespace svo {

big_int factorial(unsigned n) {
    big_int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

big_int binomial(unsigned n, unsigned k) {
    big_int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_integer(const rational& q) { return q.get_den() == 1; }

std::string to_string(const rational& q) { return q.get_str(); }

std::string to_string(const big_int& z) { return z.get_str(); }

std::string to_string(vertex_set s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace svo
