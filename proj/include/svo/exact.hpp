#ifndef SVO_EXACT_HPP
#define SVO_EXACT_HPP

#include <string>

#include <gmpxx.h>

namespace svo {

// mpq_class is always canonical: lowest terms, positive denominator, 0 == 0/1.
using rational = mpq_class;
using big_int = mpz_class;

big_int factorial(unsigned n);
big_int binomial(unsigned n, unsigned k);

bool is_integer(const rational& q);

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const rational& q);
std::string to_string(const big_int& z);

}  // namespace svo

#endif  // SVO_EXACT_HPP
