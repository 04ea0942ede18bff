#ifndef QSL_LINEFACTOR_HPP
#define QSL_LINEFACTOR_HPP

#include <vector>

#include "qsl/mpoly.hpp"
#include "qsl/quadext.hpp"

namespace qsl {

// A projective line u X + v Y + w Z with coefficients in Q or a single
// quadratic extension, normalized so the first nonzero coordinate is 1.
struct LineFactor {
    QuadExt u, v, w;
    int exponent = 1;

    bool at_infinity() const { return u.is_zero() && v.is_zero(); }
    bool real() const { return u.is_real() && v.is_real() && w.is_real(); }
    LineFactor conjugate() const { return {u.conj(), v.conj(), w.conj(), exponent}; }
    std::string str() const;
};

// canonical scaling (leading nonzero coordinate = 1) and a deterministic order
void normalize_line(QuadExt& u, QuadExt& v, QuadExt& w);
bool line_less(const LineFactor& a, const LineFactor& b);
bool same_line(const LineFactor& a, const LineFactor& b);

struct LineFactorization {
    Rational unit;                              // rational constant
    std::vector<LineFactor> lines;              // conjugates listed separately
    std::vector<std::pair<MPoly, int>> residue; // factors that are not products
                                                // of lines over Q or a single
                                                // quadratic extension
    int residue_degree() const;
};

// Factor a nonzero homogeneous polynomial in [X,Y,Z] into projective lines
// over Q and quadratic extensions; whatever cannot be split that way is
// reported in the residue, never silently dropped. The product of the lines
// (to their exponents), the residue and the unit equals the input.
LineFactorization factor_into_lines(const MPoly& h);

// multiply a factorization back together (conjugate pairs recombined)
MPoly recompose(const LineFactorization& f, const RingPtr& ring);

} // namespace qsl

#endif
