#pragma once

#include <gmpxx.h>

#include <string>

namespace mazelab {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator) as long as inputs are canonical,
// so always construct through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, unsigned long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Serializes as "p/q", always with the explicit denominator ("0/1", "1/1").
inline std::string fraction_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_probability(const Rational& q) { return q >= 0 && q <= 1; }

// True when den(q) divides base^k. Used to check the 2^k (and 3*2^k)
// denominator structure of enumeration outputs.
inline bool denominator_divides(const Rational& q, unsigned long base, unsigned k) {
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), base, k);
    return mpz_divisible_p(pow.get_mpz_t(), q.get_den().get_mpz_t()) != 0;
}

}  // namespace mazelab
