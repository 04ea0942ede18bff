#include "qsl/invlines.hpp"

#include <algorithm>

#include "qsl/comitants.hpp"
#include "qsl/upoly.hpp"

namespace qsl {

int Divisor::degree() const {
    int d = 0;
    for (auto& p : points) d += p.multiplicity;
    return d;
}

std::string dcz_type_str(DczType t) {
    switch (t) {
        case DczType::ThreeReal: return "w1+w2+w3";
        case DczType::OneRealTwoComplex: return "w1c+w2c+w3";
        case DczType::DoubleSimple: return "2w1+w2";
        case DczType::Triple: return "3w";
        default: return "undefined";
    }
}

namespace {

// exact division by y^k (threadbare: every term must carry it)
MPoly divide_y_power(const MPoly& f, int yv, int k, const char* what) {
    MPoly r(f.ring());
    for (auto& [e, c] : f.terms()) {
        if (e[yv] < k) throw Error(std::string(what) + ": division by y^k not exact");
        Exp d = e;
        d[yv] -= k;
        r.add_term(d, c);
    }
    return r;
}

} // namespace

std::pair<MPoly, MPoly> e_polynomials(const SysPair& sp) {
    SysPair t = translate_symbolic(sp);
    MPoly C0 = base_C(t, 0), C1 = base_C(t, 1), C2 = base_C(t, 2);
    // formal degrees in x' are forced by the construction (2,1) and (3,1),
    // independent of coefficient vanishing in the concrete system
    MPoly G1 = resultant_formal(C1, C0, t.xv, 2, 1);
    MPoly G2 = resultant_formal(C2, C0, t.xv, 3, 1);
    G1 = divide_y_power(G1, t.yv, 2, "E1");
    G2 = divide_y_power(G2, t.yv, 3, "E2");
    // results live in (params, x0, y0); send x0 -> x, y0 -> y
    RingPtr Rt = t.ring();
    RingPtr Rs = sp.ring();
    std::vector<MPoly> images;
    for (int i = 0; i < Rt->nvars(); ++i) {
        const std::string& n = Rt->name(i);
        if (i == t.xv || i == t.yv) {
            images.push_back(MPoly::zero(Rs));  // never hit: degree 0 there
        } else if (n == "x0") {
            images.push_back(MPoly::var(Rs, Rs->name(sp.xv)));
        } else if (n == "y0") {
            images.push_back(MPoly::var(Rs, Rs->name(sp.yv)));
        } else {
            images.push_back(MPoly::var(Rs, n));
        }
    }
    for (const MPoly* g : {&G1, &G2})
        if (g->degree(t.xv) > 0 || g->degree(t.yv) > 0)
            throw Error("e_polynomials: resultant kept a primed variable");
    return {G1.map_vars(Rs, images), G2.map_vars(Rs, images)};
}

std::pair<MPoly, MPoly> e_polynomials(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("e_polynomials requires a valid system");
    return e_polynomials(to_pair(s));
}

MPoly homogenize_in(const MPoly& f, int xv, int yv, int d) {
    std::vector<std::string> names{"X", "Y", "Z"};
    for (int i = 0; i < f.ring()->nvars(); ++i)
        if (i != xv && i != yv) names.push_back(f.ring()->name(i));
    RingPtr R = make_ring(names);
    MPoly r(R);
    for (auto& [e, c] : f.terms()) {
        int k = d - e[xv] - e[yv];
        if (k < 0) throw Error("homogenize_in: degree exceeds target");
        Exp t(R->nvars(), 0);
        t[0] = e[xv];
        t[1] = e[yv];
        t[2] = k;
        int j = 3;
        for (int i = 0; i < f.ring()->nvars(); ++i)
            if (i != xv && i != yv) t[j++] = e[i];
        r.add_term(t, c);
    }
    return r;
}

MPoly gcd_H(const SysPair& sp) {
    auto [e1, e2] = e_polynomials(sp);
    if (e1.is_zero() || e2.is_zero()) throw Error("E-polynomial degenerately zero");
    MPoly E1 = homogenize_in(e1, sp.xv, sp.yv, 5);
    MPoly E2 = homogenize_in(e2, sp.xv, sp.yv, 6);
    return gcd(E1, E2);
}

MPoly gcd_H(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("gcd_H requires a valid system");
    return gcd_H(to_pair(s));
}

std::optional<std::array<QuadExt, 3>> line_cofactor(const SysPair& sp, const QuadExt& u,
                                                    const QuadExt& v, const QuadExt& w) {
    if (u.is_zero() && v.is_zero()) return std::nullopt;
    auto cf = [&](const MPoly& f, int i, int j) {
        MPoly c = sp.coeff_xy(f, i, j);
        return QuadExt(c.is_zero() ? Rational(0) : c.constant_value());
    };
    // quadratic part: u p2 + v q2 = (u x + v y)(r x + s y)
    QuadExt cx2 = u * cf(sp.p, 2, 0) + v * cf(sp.q, 2, 0);
    QuadExt cxy = u * cf(sp.p, 1, 1) + v * cf(sp.q, 1, 1);
    QuadExt cy2 = u * cf(sp.p, 0, 2) + v * cf(sp.q, 0, 2);
    QuadExt r, sN;
    if (!u.is_zero()) {
        r = cx2 / u;
        sN = v.is_zero() ? (cxy - v * r) / u : cy2 / v;
    } else {
        if (!cx2.is_zero()) return std::nullopt;
        r = cxy / v;
        sN = cy2 / v;
    }
    if (u * sN + v * r != cxy || u * r != cx2 || v * sN != cy2) return std::nullopt;
    // linear part: u p1 + v q1 = t (u x + v y) + w (r x + s y)
    QuadExt ax = u * cf(sp.p, 1, 0) + v * cf(sp.q, 1, 0);
    QuadExt ay = u * cf(sp.p, 0, 1) + v * cf(sp.q, 0, 1);
    QuadExt t;
    if (!u.is_zero()) {
        t = (ax - w * r) / u;
        if (t * v + w * sN != ay) return std::nullopt;
    } else {
        t = (ay - w * sN) / v;
        if (t * u + w * r != ax) return std::nullopt;
    }
    // constant part
    QuadExt c0 = u * cf(sp.p, 0, 0) + v * cf(sp.q, 0, 0);
    if (c0 != w * t) return std::nullopt;
    return std::array<QuadExt, 3>{r, sN, t};
}

LineConfiguration extract_lines(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("extract_lines requires a valid system");
    SysPair sp = to_pair(s);
    if (base_C(sp, 2).is_zero())
        throw Error("line at infinity degenerate (C2 = 0), out of classification scope");

    MPoly H = gcd_H(s);
    LineFactorization fac = factor_into_lines(H);

    LineConfiguration cfg;
    cfg.gcd_degree = H.total_degree();
    int inf_mult = 1;
    for (auto& L : fac.lines) {
        if (L.at_infinity()) {
            inf_mult = 1 + L.exponent;
            continue;
        }
        auto k = line_cofactor(sp, L.u, L.v, L.w);
        if (!k) {
            cfg.warnings.push_back("gcd factor " + L.str() +
                                   " failed cofactor verification; dropped");
            continue;
        }
        InvariantLine il;
        il.u = L.u;
        il.v = L.v;
        il.w = L.w;
        il.multiplicity = L.exponent;
        il.cofactor = *k;
        il.provenance = L.exponent == 1 ? "verified-simple" : "gcd-exponent";
        il.real = L.real();
        cfg.lines.push_back(il);
    }
    for (auto& [r, e] : fac.residue) {
        cfg.residue.push_back(r);
        cfg.residue_degree += r.total_degree() * e;
    }
    if (cfg.residue_degree > 0)
        cfg.warnings.push_back("gcd(E1,E2) keeps a degree-" +
                               std::to_string(cfg.residue_degree) +
                               " factor that does not split into lines over a "
                               "quadratic extension; counted as unresolved line content");

    InvariantLine inf;
    inf.u = QuadExt(0);
    inf.v = QuadExt(0);
    inf.w = QuadExt(1);
    inf.multiplicity = inf_mult;
    inf.at_infinity = true;
    inf.provenance = "always-invariant";
    cfg.lines.push_back(inf);

    cfg.M_IL = cfg.residue_degree;
    for (auto& L : cfg.lines) cfg.M_IL += L.multiplicity;
    cfg.N_C = (int)cfg.lines.size();
    cfg.N_R = 1;  // infinity
    for (auto& L : cfg.lines)
        if (!L.at_infinity && L.real) ++cfg.N_R;
    cfg.singular_points = singular_points_on_lines(s, cfg);
    return cfg;
}

namespace {

// factor a binary form in (x,y) into projective points [root:1] / [1:0]
std::vector<DivisorPoint> binary_form_points(const MPoly& form, int xv, int yv) {
    std::vector<DivisorPoint> pts;
    int d = form.degree_in(xv, yv);
    std::vector<Rational> cs(d + 1, Rational(0));
    for (auto& [e, c] : form.terms()) cs[e[xv]] += c;
    URat u{cs};
    int ypow = d - u.degree();
    if (ypow > 0) pts.push_back({QuadExt(1), QuadExt(0), QuadExt(0), ypow});
    UFactors f = factor_rational(u);
    for (auto& [r, m] : f.roots) pts.push_back({QuadExt(r), QuadExt(1), QuadExt(0), m});
    for (auto& [q, m] : f.quadratics) {
        auto [r1, r2] = solve_quadratic(Rational(1), q[1], q[0]);
        pts.push_back({r1, QuadExt(1), QuadExt(0), m});
        pts.push_back({r2, QuadExt(1), QuadExt(0), m});
    }
    for (auto& [res, m] : f.residue) {
        for (auto& nr : numeric_roots(res, 128)) {
            DivisorPoint p{QuadExt(0), QuadExt(1), QuadExt(0), m * nr.multiplicity};
            p.numeric = true;
            p.desc = "[" + nr.box.str() + " : 1 : 0]";
            pts.push_back(p);
        }
    }
    return pts;
}

} // namespace

std::pair<Divisor, DczType> divisor_DCZ(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("divisor_DCZ requires a valid system");
    SysPair sp = to_pair(s);
    MPoly C2 = base_C(sp, 2);
    if (C2.is_zero()) return {Divisor{}, DczType::Undefined};

    Divisor div;
    div.points = binary_form_points(C2, sp.xv, sp.yv);

    // type from the comitant conditions, cross-checked against the roots
    MPoly eta = named_comitant_value(sp, "eta");
    MPoly M = named_comitant_value(sp, "M");
    int eta_sign = eta.is_zero() ? 0 : sgn(eta.constant_value());
    DczType type;
    if (eta_sign > 0) type = DczType::ThreeReal;
    else if (eta_sign < 0) type = DczType::OneRealTwoComplex;
    else if (!M.is_zero()) type = DczType::DoubleSimple;
    else type = DczType::Triple;

    int distinct = (int)div.points.size();
    int maxmult = 0;
    bool any_complex = false;
    for (auto& p : div.points) {
        maxmult = std::max(maxmult, p.multiplicity);
        if (!p.numeric && (!p.X.is_real() || !p.Y.is_real())) any_complex = true;
    }
    bool consistent = true;
    switch (type) {
        case DczType::ThreeReal: consistent = distinct == 3 && !any_complex; break;
        case DczType::OneRealTwoComplex: consistent = distinct == 3 && any_complex; break;
        case DczType::DoubleSimple: consistent = distinct == 2 && maxmult == 2; break;
        case DczType::Triple: consistent = distinct == 1 && maxmult == 3; break;
        default: break;
    }
    if (!consistent)
        throw Error("divisor type from comitants disagrees with the factorization of C2");
    return {div, type};
}

Divisor infinite_intersection_numbers(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok)
        throw Error("infinite_intersection_numbers requires a valid system");
    SysPair sp = to_pair(s);
    MPoly p2 = sp.p_part(2), q2 = sp.q_part(2);
    MPoly g = gcd(p2, q2);
    Divisor div;
    if (g.total_degree() < 1) return div;
    div.points = binary_form_points(g, sp.xv, sp.yv);

    // I_w(P,Q) at an infinite point: multiplicity of the matching root of
    // Res_Z(P',Q') after a translation that (a) keeps the projection center
    // off both curves and (b) does not line up any affine intersection with
    // the direction of w. No three of the candidate translations are
    // collinear, so at most 2 candidates per stray affine point can be
    // contaminated; the minimum over valid candidates is exact.
    static const std::pair<long, long> candidates[10] = {
        {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 3}, {3, 5}, {5, 2}, {4, 7}, {7, 3}, {8, 9}};
    RingPtr R3 = XYZ_ring();
    std::vector<std::vector<int>> mults(div.points.size());
    int valid = 0;
    for (auto& [a, b] : candidates) {
        std::vector<Rational> pt{Rational(a), Rational(b)};
        if (sp.p.eval(pt) == 0 || sp.q.eval(pt) == 0) continue;
        QuadraticSystem st = apply_affine(s, AffineTransform::translation(Rational(a), Rational(b)));
        SysPair spt = to_pair(st);
        MPoly P = homogenize_xy(spt.p, 2), Q = homogenize_xy(spt.q, 2);
        MPoly res = resultant(P, Q, 2);  // binary form in X,Y of degree 4
        ++valid;
        for (size_t i = 0; i < div.points.size(); ++i) {
            auto& w = div.points[i];
            // root (X:Y) = (w.X : w.Y); exact for rational/quadratic points
            MPoly lin(R3);
            int mult = 0;
            if (w.numeric) continue;
            if (w.X.is_rational() && w.Y.is_rational()) {
                lin = w.Y.rational_value() * MPoly::var(R3, "X") -
                      w.X.rational_value() * MPoly::var(R3, "Y");
                MPoly rest = res;
                while (auto q = exact_div(rest, lin)) {
                    rest = *q;
                    ++mult;
                }
            } else {
                // conjugate pair: divide by the rational quadratic
                LineFactor L{w.Y, -w.X, QuadExt(0), 1};
                LineFactorization pairf;
                pairf.unit = 1;
                pairf.lines = {L, L.conjugate()};
                MPoly q2f = recompose(pairf, R3);
                MPoly rest = res;
                while (auto q = exact_div(rest, q2f)) {
                    rest = *q;
                    ++mult;
                }
            }
            mults[i].push_back(mult);
        }
    }
    if (valid < 2) throw Error("no separating translation found among the candidates");
    for (size_t i = 0; i < div.points.size(); ++i) {
        if (div.points[i].numeric) continue;
        int m = mults[i].empty() ? 0 : *std::min_element(mults[i].begin(), mults[i].end());
        div.points[i].multiplicity = m;
    }
    return div;
}

std::vector<SingularPoint> singular_points_on_lines(const QuadraticSystem& s,
                                                    const LineConfiguration& cfg) {
    std::vector<SingularPoint> out;
    SysPair sp = to_pair(s);
    for (size_t li = 0; li < cfg.lines.size(); ++li) {
        const InvariantLine& L = cfg.lines[li];
        if (L.at_infinity || !L.real || L.numeric) continue;
        // parametrize: base point + t * direction, direction (-v, u)
        QuadExt dx = -L.v, dy = L.u;
        if (L.u.is_rational() && L.v.is_rational()) {
            // integer coprime direction, first nonzero coordinate positive
            Rational rdx = -L.v.rational_value(), rdy = L.u.rational_value();
            Int num_g;
            Int nx = rdx.get_num() * rdy.get_den(), ny = rdy.get_num() * rdx.get_den();
            mpz_gcd(num_g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
            if (num_g != 0) { nx /= num_g; ny /= num_g; }
            if (nx < 0 || (nx == 0 && ny < 0)) { nx = -nx; ny = -ny; }
            dx = QuadExt(Rational(nx));
            dy = QuadExt(Rational(ny));
        }
        QuadExt x0, y0;
        if (!L.v.is_zero()) { x0 = QuadExt(0); y0 = -L.w / L.v; }
        else { x0 = -L.w / L.u; y0 = QuadExt(0); }

        // restrict p and q along the parametrization
        auto restrict = [&](const MPoly& f) {
            std::vector<QuadExt> c(3, QuadExt(0));
            // f(x0 + dx t, y0 + dy t): expand term by term (degree <= 2)
            for (auto& [e, cf] : f.terms()) {
                // (x0+dx t)^i (y0+dy t)^j
                std::vector<QuadExt> acc{QuadExt(cf)};
                for (int k = 0; k < e[sp.xv]; ++k) {
                    std::vector<QuadExt> nx(acc.size() + 1, QuadExt(0));
                    for (size_t m = 0; m < acc.size(); ++m) {
                        nx[m] += acc[m] * x0;
                        nx[m + 1] += acc[m] * dx;
                    }
                    acc = std::move(nx);
                }
                for (int k = 0; k < e[sp.yv]; ++k) {
                    std::vector<QuadExt> ny(acc.size() + 1, QuadExt(0));
                    for (size_t m = 0; m < acc.size(); ++m) {
                        ny[m] += acc[m] * y0;
                        ny[m + 1] += acc[m] * dy;
                    }
                    acc = std::move(ny);
                }
                for (size_t m = 0; m < acc.size() && m < 3; ++m) c[m] += acc[m];
            }
            return UExt(c);
        };
        UExt pr = restrict(sp.p), qr = restrict(sp.q);
        UExt g = pr.is_zero() ? qr : (qr.is_zero() ? pr : upoly_gcd(pr, qr));
        if (g.is_zero() || g.degree() < 1) continue;

        // exact roots of g in the line's field (or plain rationals)
        std::vector<std::pair<QuadExt, int>> roots;
        bool rational_coeffs = true;
        for (auto& c : g.coeffs()) rational_coeffs &= c.is_rational();
        if (rational_coeffs) {
            std::vector<Rational> rc;
            for (auto& c : g.coeffs()) rc.push_back(c.rational_value());
            URat gr{rc};
            UFactors f = factor_rational(gr);
            for (auto& [r, m] : f.roots) roots.push_back({QuadExt(r), m});
            for (auto& [q, m] : f.quadratics) {
                auto [r1, r2] = solve_quadratic(Rational(1), q[1], q[0]);
                if (r1.is_real()) {
                    roots.push_back({r1, m});
                    roots.push_back({r2, m});
                }
            }
        } else {
            // norm to a rational polynomial, then keep the K-roots of g
            std::vector<QuadExt> cc;
            for (auto& c : g.coeffs()) cc.push_back(c.conj());
            UExt gc{cc};
            UExt ng = g * gc;
            std::vector<Rational> rc;
            for (auto& c : ng.coeffs()) rc.push_back(c.rational_value());
            Int d = 0;
            for (auto& c : g.coeffs())
                if (!c.is_rational()) d = c.radicand();
            for (auto& [r, m] : roots_in_extension(URat{rc}, d)) {
                if (!r.is_real() || !g.eval(r).is_zero()) continue;
                // multiplicity within g itself
                int k = 0;
                UExt rest = g;
                while (!rest.is_zero() && rest.eval(r).is_zero() && rest.degree() >= 1) {
                    rest = rest.divmod(UExt({-r, QuadExt(1)})).first;
                    ++k;
                }
                roots.push_back({r, k});
            }
        }
        for (auto& [t, m] : roots) {
            if (!t.is_real()) continue;
            SingularPoint pt;
            pt.x = x0 + dx * t;
            pt.y = y0 + dy * t;
            pt.multiplicity = m;
            pt.line_index = (int)li;
            out.push_back(pt);
        }
    }
    return out;
}

} // namespace qsl
