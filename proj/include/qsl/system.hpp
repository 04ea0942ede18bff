#ifndef QSL_SYSTEM_HPP
#define QSL_SYSTEM_HPP

#include <array>

#include "qsl/mpoly.hpp"

namespace qsl {

// Planar quadratic vector field  x' = p(x,y), y' = q(x,y)  stored as the
// coefficient 12-tuple with the halved mixed coefficients:
//   p = a00 + a10 x + a01 y + a20 x^2 + 2 a11 xy + a02 y^2, q likewise.
struct QuadraticSystem {
    Rational a00, a10, a01, a20, a11, a02;
    Rational b00, b10, b01, b20, b11, b02;

    std::array<Rational, 12> tuple() const {
        return {a00, a10, a01, a20, a11, a02, b00, b10, b01, b20, b11, b02};
    }
    static QuadraticSystem from_tuple(const std::array<Rational, 12>& t) {
        return {t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8], t[9], t[10], t[11]};
    }
    bool operator==(const QuadraticSystem& o) const { return tuple() == o.tuple(); }
};

enum class Validity { Ok, Degenerate, NotQuadratic };

// A system with polynomial coefficients: p,q live in a ring whose first two
// variables are x and y; any further variables act as symbolic parameters.
// This is what the comitant machinery computes on, so that family identities
// can be checked as exact polynomial identities.
struct SysPair {
    MPoly p, q;
    int xv = 0, yv = 1;

    RingPtr ring() const { return p.ring(); }
    // degree-k part of f in (x,y)
    MPoly part(const MPoly& f, int k) const;
    MPoly p_part(int k) const { return part(p, k); }
    MPoly q_part(int k) const { return part(q, k); }
    // coefficient of x^i y^j as a parameter polynomial
    MPoly coeff_xy(const MPoly& f, int i, int j) const;
};

RingPtr xy_ring();                       // the shared ring ["x","y"]
SysPair to_pair(const QuadraticSystem& s);
SysPair make_pair(const MPoly& p, const MPoly& q);
// the 12-tuple (with halved mixed entries) of a polynomial-coefficient system
std::array<MPoly, 12> sys_tuple(const SysPair& sp);
QuadraticSystem from_polys(const MPoly& p, const MPoly& q);  // ring ["x","y"]

Validity validate(const QuadraticSystem& s);
std::string validity_str(Validity v);

// Affine coordinate change plus time rescaling. Stored in the group
// convention: new coordinates (X,Y) = M (x,y) + B… concretely the
// transformed right-hand side is
//   (p~,q~) = (1/timescale) * M * (p,q) evaluated at h(x,y) = M^{-1}(x,y)+B,
// so {M=I, B=(x0,y0)} substitutes x -> x+x0, y -> y+y0.
struct AffineTransform {
    Rational m11, m12, m21, m22;
    Rational b1, b2;
    Rational timescale = 1;

    AffineTransform(Rational m11_, Rational m12_, Rational m21_, Rational m22_,
                    Rational b1_ = 0, Rational b2_ = 0, Rational ts = 1);
    static AffineTransform identity() { return {1, 0, 0, 1}; }
    static AffineTransform translation(const Rational& x0, const Rational& y0) {
        return {1, 0, 0, 1, x0, y0};
    }
    static AffineTransform linear(const Rational& m11, const Rational& m12,
                                  const Rational& m21, const Rational& m22) {
        return {m11, m12, m21, m22};
    }
    Rational det() const { return m11 * m22 - m12 * m21; }
};

QuadraticSystem apply_affine(const QuadraticSystem& s, const AffineTransform& g);
// apply(apply(s,g1),g2) == apply(s, compose(g2,g1))
AffineTransform compose(const AffineTransform& g2, const AffineTransform& g1);

// System translated by symbolic offsets: p(x+x0, y+y0), q(x+x0, y+y0) in the
// ring ["x","y","x0","y0", params...].
SysPair translate_symbolic(const SysPair& sp);

// Darboux projective form A dX + B dY + C dZ = 0 with A X + B Y + C Z = 0.
struct ProjectiveTriple {
    MPoly A, B, C;  // homogeneous of degree 3 in ["X","Y","Z"]
};

RingPtr XYZ_ring();
ProjectiveTriple projectivize(const QuadraticSystem& s);
// homogenize an (x,y) polynomial into ["X","Y","Z"] at total degree d
MPoly homogenize_xy(const MPoly& f, int d);
MPoly dehomogenize_Z(const MPoly& F);    // back to ["x","y"], Z = 1

// Unique divergence-free representative of a Clebsch-form triple.
std::array<MPoly, 3> darboux_normalize(const MPoly& L, const MPoly& M, const MPoly& N);

} // namespace qsl

#endif
