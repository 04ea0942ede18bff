#include "qsl/quadext.hpp"

namespace qsl {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Int& d)
    : a_(a), b_(b), d_(d) {
    reduce();
}

void QuadExt::reduce() {
    if (b_ == 0) { d_ = 0; return; }
    if (d_ == 0) { b_ = 0; return; }
    if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; return; }
    Int sq;
    Int sf = squarefree_part(d_, sq);
    if (sf != d_) {
        b_ *= Rational(sq);
        d_ = sf;
        if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
    }
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
    if (r == 0) return QuadExt();
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = r.get_num() * r.get_den();
    Int sq;
    Int sf = squarefree_part(pq, sq);
    Rational coeff = rat(sq, r.get_den());
    if (sf == 1) return QuadExt(coeff);
    return QuadExt(Rational(0), coeff, sf);
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    if (b_ == 0) return QuadExt(a_ + o.a_, o.b_, o.d_);
    if (o.b_ == 0) return QuadExt(a_ + o.a_, b_, d_);
    if (d_ != o.d_) throw Error("mixed radicands " + d_.get_str() + ", " + o.d_.get_str());
    return QuadExt(a_ + o.a_, b_ + o.b_, d_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    if (b_ == 0) return QuadExt(a_ * o.a_, a_ * o.b_, o.d_);
    if (o.b_ == 0) return QuadExt(a_ * o.a_, b_ * o.a_, d_);
    if (d_ != o.d_) throw Error("mixed radicands " + d_.get_str() + ", " + o.d_.get_str());
    return QuadExt(a_ * o.a_ + b_ * o.b_ * Rational(d_), a_ * o.b_ + b_ * o.a_, d_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw Error("division by zero");
    if (o.b_ == 0) return QuadExt(a_ / o.a_, b_ / o.a_, d_);
    Rational n = o.norm();  // nonzero since d squarefree != 1
    return *this * QuadExt(o.a_ / n, -o.b_ / n, o.d_);
}

bool QuadExt::operator==(const QuadExt& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

int QuadExt::sign() const {
    if (b_ == 0) return qsl::sgn(a_);
    if (d_ < 0) throw Error("sign of complex value");
    int sa = qsl::sgn(a_), sb = qsl::sgn(b_);
    if (sa == sb) return sa;
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 with b^2 d
    Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
    int s = qsl::sgn(diff);
    return s == 0 ? 0 : s * sa;
}

const Rational& QuadExt::rational_value() const {
    if (b_ != 0) throw Error("not a rational value");
    return a_;
}

std::string QuadExt::str() const {
    if (b_ == 0) return to_string(a_);
    std::string root = "sqrt(" + d_.get_str() + ")";
    std::string bs = (b_ == 1) ? root
                   : (b_ == -1) ? "-" + root
                   : to_string(b_) + "*" + root;
    if (a_ == 0) return bs;
    if (qsl::sgn(b_) > 0) return to_string(a_) + "+" + bs;
    return to_string(a_) + bs;
}

} // namespace qsl
