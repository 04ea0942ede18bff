#ifndef QSL_QUADEXT_HPP
#define QSL_QUADEXT_HPP

#include <string>

#include "qsl/rational.hpp"

namespace qsl {

// a + b*sqrt(d) with a,b rational and d a squarefree integer, d != 0,1.
// A pure rational is stored with b = 0, d = 0. Negative d encodes a complex
// value; conjugation flips b.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}  // NOLINT: implicit
    QuadExt(long a) : a_(a), b_(0), d_(0) {}             // NOLINT: implicit
    QuadExt(const Rational& a, const Rational& b, const Int& d);

    static QuadExt sqrt_of(const Rational& r);  // sqrt(r), exact

    const Rational& base() const { return a_; }
    const Rational& coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_real() const { return b_ == 0 || d_ > 0; }
    QuadExt conj() const { return QuadExt(a_, -b_, b_ == 0 ? Int(0) : d_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    // exact sign; requires is_real()
    int sign() const;
    // rational value when is_rational()
    const Rational& rational_value() const;

    std::string str() const;  // "a", "b*sqrt(d)", "a+b*sqrt(d)"

private:
    void reduce();
    Rational a_, b_;
    Int d_;
};

inline int sgn(const QuadExt& x) { return x.sign(); }

} // namespace qsl

#endif
