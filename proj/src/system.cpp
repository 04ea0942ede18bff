#include "qsl/system.hpp"

namespace qsl {

MPoly SysPair::part(const MPoly& f, int k) const {
    MPoly r(f.ring());
    for (auto& [e, c] : f.terms())
        if (e[xv] + e[yv] == k) r.add_term(e, c);
    return r;
}

MPoly SysPair::coeff_xy(const MPoly& f, int i, int j) const {
    MPoly r(f.ring());
    for (auto& [e, c] : f.terms()) {
        if (e[xv] == i && e[yv] == j) {
            Exp d = e;
            d[xv] = 0;
            d[yv] = 0;
            r.add_term(d, c);
        }
    }
    return r;
}

RingPtr xy_ring() {
    static RingPtr r = make_ring({"x", "y"});
    return r;
}

RingPtr XYZ_ring() {
    static RingPtr r = make_ring({"X", "Y", "Z"});
    return r;
}

SysPair to_pair(const QuadraticSystem& s) {
    RingPtr R = xy_ring();
    MPoly x = MPoly::var(R, "x"), y = MPoly::var(R, "y");
    MPoly p = MPoly::constant(R, s.a00) + s.a10 * x + s.a01 * y + s.a20 * x * x +
              2 * s.a11 * x * y + s.a02 * y * y;
    MPoly q = MPoly::constant(R, s.b00) + s.b10 * x + s.b01 * y + s.b20 * x * x +
              2 * s.b11 * x * y + s.b02 * y * y;
    return {p, q, 0, 1};
}

SysPair make_pair(const MPoly& p, const MPoly& q) {
    int xv = p.ring()->index("x"), yv = p.ring()->index("y");
    if (xv < 0 || yv < 0) throw Error("system ring must contain x and y");
    return {p, q, xv, yv};
}

std::array<MPoly, 12> sys_tuple(const SysPair& sp) {
    Rational half(1, 2);
    return {sp.coeff_xy(sp.p, 0, 0), sp.coeff_xy(sp.p, 1, 0), sp.coeff_xy(sp.p, 0, 1),
            sp.coeff_xy(sp.p, 2, 0), sp.coeff_xy(sp.p, 1, 1) * half, sp.coeff_xy(sp.p, 0, 2),
            sp.coeff_xy(sp.q, 0, 0), sp.coeff_xy(sp.q, 1, 0), sp.coeff_xy(sp.q, 0, 1),
            sp.coeff_xy(sp.q, 2, 0), sp.coeff_xy(sp.q, 1, 1) * half, sp.coeff_xy(sp.q, 0, 2)};
}

QuadraticSystem from_polys(const MPoly& p, const MPoly& q) {
    SysPair sp = make_pair(p, q);
    if (p.total_degree() > 2 || q.total_degree() > 2) throw Error("degree exceeds 2");
    auto t = sys_tuple(sp);
    std::array<Rational, 12> r;
    for (int i = 0; i < 12; ++i) r[i] = t[i].is_zero() ? Rational(0) : t[i].constant_value();
    return QuadraticSystem::from_tuple(r);
}

Validity validate(const QuadraticSystem& s) {
    SysPair sp = to_pair(s);
    MPoly g = gcd(sp.p, sp.q);
    if (g.total_degree() >= 1) return Validity::Degenerate;
    int d = std::max(sp.p.total_degree(), sp.q.total_degree());
    if (d < 2) return Validity::NotQuadratic;
    return Validity::Ok;
}

std::string validity_str(Validity v) {
    switch (v) {
        case Validity::Ok: return "Ok";
        case Validity::Degenerate: return "Degenerate";
        default: return "NotQuadratic";
    }
}

AffineTransform::AffineTransform(Rational m11_, Rational m12_, Rational m21_, Rational m22_,
                                 Rational b1_, Rational b2_, Rational ts)
    : m11(std::move(m11_)), m12(std::move(m12_)), m21(std::move(m21_)), m22(std::move(m22_)),
      b1(std::move(b1_)), b2(std::move(b2_)), timescale(std::move(ts)) {
    if (det() == 0) throw Error("singular affine transform");
    if (timescale == 0) throw Error("zero time rescaling");
}

QuadraticSystem apply_affine(const QuadraticSystem& s, const AffineTransform& g) {
    RingPtr R = xy_ring();
    MPoly x = MPoly::var(R, "x"), y = MPoly::var(R, "y");
    Rational d = g.det();
    // h = M^{-1} (x,y) + B
    MPoly hx = (g.m22 / d) * x - (g.m12 / d) * y + MPoly::constant(R, g.b1);
    MPoly hy = -(g.m21 / d) * x + (g.m11 / d) * y + MPoly::constant(R, g.b2);
    SysPair sp = to_pair(s);
    MPoly ph = sp.p.map_vars(R, {hx, hy});
    MPoly qh = sp.q.map_vars(R, {hx, hy});
    Rational it = 1 / g.timescale;
    MPoly pn = it * (g.m11 * ph + g.m12 * qh);
    MPoly qn = it * (g.m21 * ph + g.m22 * qh);
    return from_polys(pn, qn);
}

AffineTransform compose(const AffineTransform& g2, const AffineTransform& g1) {
    // combined substitution h = h1 o h2
    Rational m11 = g2.m11 * g1.m11 + g2.m12 * g1.m21;
    Rational m12 = g2.m11 * g1.m12 + g2.m12 * g1.m22;
    Rational m21 = g2.m21 * g1.m11 + g2.m22 * g1.m21;
    Rational m22 = g2.m21 * g1.m12 + g2.m22 * g1.m22;
    Rational d1 = g1.det();
    // M1^{-1} B2 + B1
    Rational c1 = (g1.m22 * g2.b1 - g1.m12 * g2.b2) / d1 + g1.b1;
    Rational c2 = (-g1.m21 * g2.b1 + g1.m11 * g2.b2) / d1 + g1.b2;
    return {m11, m12, m21, m22, c1, c2, g1.timescale * g2.timescale};
}

SysPair translate_symbolic(const SysPair& sp) {
    std::vector<std::string> names = sp.ring()->names();
    names.push_back("x0");
    names.push_back("y0");
    RingPtr R = make_ring(names);
    std::vector<MPoly> images;
    for (int i = 0; i < sp.ring()->nvars(); ++i)
        images.push_back(MPoly::var(R, sp.ring()->name(i)));
    images[sp.xv] = MPoly::var(R, "x") + MPoly::var(R, "x0");
    images[sp.yv] = MPoly::var(R, "y") + MPoly::var(R, "y0");
    return {sp.p.map_vars(R, images), sp.q.map_vars(R, images), sp.xv, sp.yv};
}

MPoly homogenize_xy(const MPoly& f, int d) {
    RingPtr R3 = XYZ_ring();
    int xv = f.ring()->index("x"), yv = f.ring()->index("y");
    if (xv < 0 || yv < 0 || f.ring()->nvars() != 2) throw Error("homogenize: expected ring [x,y]");
    MPoly r(R3);
    for (auto& [e, c] : f.terms()) {
        int k = d - e[xv] - e[yv];
        if (k < 0) throw Error("homogenize: degree exceeds target");
        Exp t(3, 0);
        t[0] = e[xv];
        t[1] = e[yv];
        t[2] = k;
        r.add_term(t, c);
    }
    return r;
}

MPoly dehomogenize_Z(const MPoly& F) {
    RingPtr R = xy_ring();
    MPoly r(R);
    for (auto& [e, c] : F.terms()) {
        Exp t(2, 0);
        t[0] = e[0];
        t[1] = e[1];
        r.add_term(t, c);
    }
    return r;
}

ProjectiveTriple projectivize(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("projectivize requires a valid system");
    SysPair sp = to_pair(s);
    MPoly P = homogenize_xy(sp.p, 2), Q = homogenize_xy(sp.q, 2);
    RingPtr R3 = XYZ_ring();
    MPoly X = MPoly::var(R3, "X"), Y = MPoly::var(R3, "Y"), Z = MPoly::var(R3, "Z");
    ProjectiveTriple t{Z * Q, -(Z * P), Y * P - X * Q};
    if (!(t.A * X + t.B * Y + t.C * Z).is_zero())
        throw Error("projectivize: AX+BY+CZ != 0");
    return t;
}

std::array<MPoly, 3> darboux_normalize(const MPoly& L, const MPoly& M, const MPoly& N) {
    RingPtr R = L.ring();
    int X = R->index("X"), Y = R->index("Y"), Z = R->index("Z");
    if (X < 0 || Y < 0 || Z < 0) throw Error("darboux_normalize: expected ring [X,Y,Z]");
    int m = std::max({L.total_degree(), M.total_degree(), N.total_degree()});
    for (const MPoly* f : {&L, &M, &N})
        if (!f->is_zero() && (!f->is_homogeneous() || f->total_degree() != m))
            throw Error("darboux_normalize: operands must be homogeneous of equal degree");
    MPoly div = L.derivative(X) + M.derivative(Y) + N.derivative(Z);
    MPoly A = div / Rational(-(m + 2));
    std::array<MPoly, 3> out{L + A * MPoly::var(R, "X"), M + A * MPoly::var(R, "Y"),
                             N + A * MPoly::var(R, "Z")};
    MPoly check = out[0].derivative(X) + out[1].derivative(Y) + out[2].derivative(Z);
    if (!check.is_zero()) throw Error("darboux_normalize: divergence not removed");
    return out;
}

} // namespace qsl
