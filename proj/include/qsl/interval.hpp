#ifndef QSL_INTERVAL_HPP
#define QSL_INTERVAL_HPP

#include <string>

#include "qsl/rational.hpp"

namespace qsl {

// Closed interval with exact rational endpoints. All operations are exact,
// so enclosures never drift; "numeric" results in this library are such
// intervals refined below a requested width.
struct QIv {
    Rational lo, hi;

    QIv() : lo(0), hi(0) {}
    explicit QIv(const Rational& x) : lo(x), hi(x) {}
    QIv(const Rational& l, const Rational& h) : lo(l), hi(h) {
        if (lo > hi) throw Error("inverted interval");
    }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    // definite sign: -1, 0 (exact zero point), +1; throws if straddling
    int sign_definite() const;

    QIv operator-() const { return QIv(-hi, -lo); }
    QIv operator+(const QIv& o) const { return QIv(lo + o.lo, hi + o.hi); }
    QIv operator-(const QIv& o) const { return *this + (-o); }
    QIv operator*(const QIv& o) const;
    QIv operator/(const QIv& o) const;  // throws if o contains zero

    std::string str() const;
};

bool overlap(const QIv& a, const QIv& b);

// Rectangular complex enclosure.
struct CBox {
    QIv re, im;

    CBox() = default;
    explicit CBox(const QIv& r) : re(r) {}
    CBox(const QIv& r, const QIv& i) : re(r), im(i) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rational width() const { return re.width() + im.width(); }

    CBox operator-() const { return CBox(-re, -im); }
    CBox operator+(const CBox& o) const { return CBox(re + o.re, im + o.im); }
    CBox operator-(const CBox& o) const { return CBox(re - o.re, im - o.im); }
    CBox operator*(const CBox& o) const {
        return CBox(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    CBox operator/(const CBox& o) const;

    std::string str() const;
};

bool overlap(const CBox& a, const CBox& b);

// Enclosure of sqrt(x) for an interval with lo >= 0, to relative width 2^-prec.
QIv sqrt_enclosure(const QIv& x, int prec);
// Both square roots of a complex box (principal first).
CBox sqrt_enclosure(const CBox& x, int prec);

} // namespace qsl

#endif
