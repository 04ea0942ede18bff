#include "qsl/interval.hpp"

#include <algorithm>

namespace qsl {

int QIv::sign_definite() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    throw Error("interval sign not definite: " + str());
}

QIv QIv::operator*(const QIv& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return QIv(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

QIv QIv::operator/(const QIv& o) const {
    if (o.contains_zero()) throw Error("interval division by zero-straddling interval");
    Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return QIv(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

std::string QIv::str() const {
    if (is_point()) return to_string(lo);
    return "[" + to_string(lo) + "," + to_string(hi) + "]";
}

bool overlap(const QIv& a, const QIv& b) { return a.lo <= b.hi && b.lo <= a.hi; }

CBox CBox::operator/(const CBox& o) const {
    QIv n = o.re * o.re + o.im * o.im;
    if (n.contains_zero()) throw Error("complex interval division by zero");
    CBox conj(o.re, -o.im);
    CBox num = *this * conj;
    return CBox(num.re / n, num.im / n);
}

std::string CBox::str() const {
    if (im.contains_zero() && im.is_point()) return re.str();
    return re.str() + (im.lo >= 0 ? "+" : "") + im.str() + "i";
}

bool overlap(const CBox& a, const CBox& b) {
    return overlap(a.re, b.re) && overlap(a.im, b.im);
}

QIv sqrt_enclosure(const QIv& x, int prec) {
    if (x.lo < 0) throw Error("sqrt of negative interval");
    auto sqrt_lo = [&](const Rational& v) {
        if (v == 0) return Rational(0);
        // bisection from a crude bracket
        Rational lo(0), hi = v < 1 ? Rational(1) : v;
        for (int i = 0; i < prec + 8; ++i) {
            Rational m = (lo + hi) / 2;
            if (m * m <= v) lo = m; else hi = m;
        }
        return lo;
    };
    auto sqrt_hi = [&](const Rational& v) {
        if (v == 0) return Rational(0);
        Rational lo(0), hi = v < 1 ? Rational(1) : v;
        for (int i = 0; i < prec + 8; ++i) {
            Rational m = (lo + hi) / 2;
            if (m * m >= v) hi = m; else lo = m;
        }
        return hi;
    };
    return QIv(sqrt_lo(x.lo), sqrt_hi(x.hi));
}

CBox sqrt_enclosure(const CBox& z, int prec) {
    // sqrt(a+bi) = u + vi with u = sqrt((|z|+a)/2), v = sign(b) sqrt((|z|-a)/2)
    QIv a = z.re, b = z.im;
    QIv n2 = a * a + b * b;
    QIv n = sqrt_enclosure(n2, prec);
    QIv half(Rational(1, 2), Rational(1, 2));
    QIv u2 = (n + a) * half;
    QIv v2 = (n - a) * half;
    if (u2.lo < 0) u2.lo = 0;  // clamp; exact value is >= 0
    if (v2.lo < 0) v2.lo = 0;
    QIv u = sqrt_enclosure(u2, prec);
    QIv v = sqrt_enclosure(v2, prec);
    // sign of v follows sign of b; if b straddles zero keep both signs
    if (b.lo > 0) return CBox(u, v);
    if (b.hi < 0) return CBox(u, -v);
    return CBox(u, QIv(-v.hi, v.hi));
}

} // namespace qsl
