#ifndef QSL_RATIONAL_HPP
#define QSL_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qsl {

using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rational& q) { return sgn(q.get_num()) ; }

// "num" or "num/den", den > 0.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "3", "-3", "3/4", "-3/4".
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw Error("zero denominator: '" + s + "'");
    return q;
}

// n = sf * square^2 with sf squarefree (up to square factors with prime
// divisors beyond the trial bound, far outside the magnitudes this library
// produces). Sign of n goes into sf.
Int squarefree_part(const Int& n, Int& square);

inline Int squarefree_part(const Int& n) {
    Int sq;
    return squarefree_part(n, sq);
}

} // namespace qsl

#endif
