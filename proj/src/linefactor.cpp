#include "qsl/linefactor.hpp"

#include <algorithm>
#include <tuple>

#include "qsl/upoly.hpp"

namespace qsl {

namespace {

std::tuple<Rational, Rational, Int> key3(const QuadExt& q) {
    return {q.base(), q.coeff(), q.radicand()};
}

// binary form in two chosen variables -> univariate in the first variable at
// second=1, plus the power of the second variable dividing the form
struct BinarySplit {
    URat u;
    int second_power;
    int degree;
};

BinarySplit split_binary(const MPoly& f, int v1, int v2) {
    int d = f.degree_in(v1, v2);
    std::vector<Rational> cs(d + 1, Rational(0));
    for (auto& [e, c] : f.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if ((int)i != v1 && (int)i != v2 && e[i] != 0)
                throw Error("split_binary: extra variables present");
        cs[e[v1]] += c;
    }
    URat u{cs};
    return {u, d - u.degree(), d};
}

} // namespace

void normalize_line(QuadExt& u, QuadExt& v, QuadExt& w) {
    QuadExt lead = !u.is_zero() ? u : (!v.is_zero() ? v : w);
    if (lead.is_zero()) throw Error("zero line");
    u = u / lead;
    v = v / lead;
    w = w / lead;
}

bool line_less(const LineFactor& a, const LineFactor& b) {
    auto ka = std::make_tuple(key3(a.u), key3(a.v), key3(a.w));
    auto kb = std::make_tuple(key3(b.u), key3(b.v), key3(b.w));
    return ka < kb;
}

bool same_line(const LineFactor& a, const LineFactor& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
}

std::string LineFactor::str() const {
    std::string s;
    auto term = [&](const QuadExt& c, const std::string& var) {
        if (c.is_zero()) return;
        std::string cs = c.str();
        bool composite = cs.find('+') != std::string::npos || cs.find("sqrt") != std::string::npos;
        std::string piece;
        if (var.empty()) piece = composite ? "(" + cs + ")" : cs;
        else if (cs == "1") piece = var;
        else if (cs == "-1") piece = "-" + var;
        else piece = (composite ? "(" + cs + ")" : cs) + "*" + var;
        if (!s.empty() && piece[0] != '-') s += "+";
        s += piece;
    };
    term(u, "X");
    term(v, "Y");
    term(w, "Z");
    return s.empty() ? "0" : s;
}

int LineFactorization::residue_degree() const {
    int d = 0;
    for (auto& [f, e] : residue) d += f.total_degree() * e;
    return d;
}

namespace {

// exact rational quadratic (or linear) from a line or a conjugate pair
MPoly line_poly(const LineFactor& L, const RingPtr& ring) {
    MPoly X = MPoly::var(ring, "X"), Y = MPoly::var(ring, "Y"), Z = MPoly::var(ring, "Z");
    if (L.u.is_rational() && L.v.is_rational() && L.w.is_rational())
        return L.u.rational_value() * X + L.v.rational_value() * Y + L.w.rational_value() * Z;
    LineFactor Lc = L.conjugate();
    QuadExt uu = L.u * Lc.u, vv = L.v * Lc.v, ww = L.w * Lc.w;
    QuadExt uv = L.u * Lc.v + L.v * Lc.u;
    QuadExt uw = L.u * Lc.w + L.w * Lc.u;
    QuadExt vw = L.v * Lc.w + L.w * Lc.v;
    for (const QuadExt* q : {&uu, &vv, &ww, &uv, &uw, &vw})
        if (!q->is_rational()) throw Error("line pair product not rational");
    return uu.rational_value() * X * X + vv.rational_value() * Y * Y +
           ww.rational_value() * Z * Z + uv.rational_value() * X * Y +
           uw.rational_value() * X * Z + vw.rational_value() * Y * Z;
}

} // namespace

MPoly recompose(const LineFactorization& f, const RingPtr& ring) {
    MPoly out = MPoly::constant(ring, f.unit);
    std::vector<bool> used(f.lines.size(), false);
    for (size_t i = 0; i < f.lines.size(); ++i) {
        if (used[i]) continue;
        const LineFactor& L = f.lines[i];
        used[i] = true;
        if (L.u.is_rational() && L.v.is_rational() && L.w.is_rational()) {
            out = out * line_poly(L, ring).pow(L.exponent);
            continue;
        }
        LineFactor Lc = L.conjugate();
        size_t j = i + 1;
        for (; j < f.lines.size(); ++j)
            if (!used[j] && same_line(f.lines[j], Lc) && f.lines[j].exponent == L.exponent)
                break;
        if (j == f.lines.size()) throw Error("recompose: unmatched conjugate line");
        used[j] = true;
        out = out * line_poly(L, ring).pow(L.exponent);
    }
    for (auto& [r, e] : f.residue) out = out * r.pow(e);
    return out;
}

LineFactorization factor_into_lines(const MPoly& h) {
    RingPtr R = h.ring();
    int X = R->index("X"), Y = R->index("Y"), Z = R->index("Z");
    if (X < 0 || Y < 0 || Z < 0) throw Error("factor_into_lines: expected ring [X,Y,Z]");
    if (h.is_zero()) throw Error("factor_into_lines: zero input");
    if (!h.is_homogeneous_in({X, Y, Z})) throw Error("factor_into_lines: not homogeneous");

    LineFactorization out;
    MPoly rest = h;
    MPoly Xp = MPoly::var(R, "X"), Yp = MPoly::var(R, "Y"), Zp = MPoly::var(R, "Z");

    // (0) powers of Z
    int zexp = rest.total_degree();
    for (auto& [e, c] : rest.terms()) zexp = std::min(zexp, e[Z]);
    if (zexp > 0) {
        out.lines.push_back({QuadExt(0), QuadExt(0), QuadExt(1), zexp});
        rest = *exact_div(rest, Zp.pow(zexp));
    }

    if (!rest.is_constant()) {
        // every remaining line factor has a direction (u,v) != (0,0) dividing
        // the restriction to Z = 0
        MPoly B(R);
        for (auto& [e, c] : rest.terms())
            if (e[Z] == 0) B.add_term(e, c);
        if (B.is_zero()) throw Error("factor_into_lines: internal (Z still divides)");
        BinarySplit bs = split_binary(B, X, Y);

        std::vector<std::pair<Int, Int>> rational_dirs;
        if (bs.second_power > 0) rational_dirs.push_back({0, 1});
        UFactors bf = factor_rational(bs.u);
        for (auto& [r, m] : bf.roots) rational_dirs.push_back({r.get_den(), -r.get_num()});

        // rational directions: change coordinates so the direction form is S,
        // then split off the full (S,Z)-only content
        for (auto& [un, vn] : rational_dirs) {
            Int g, a, b;
            mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), un.get_mpz_t(),
                       vn.get_mpz_t());
            // un a + vn b = 1; S = un X + vn Y, T = -b X + a Y,
            // inverse X = a S - vn T, Y = b S + un T (S,T reuse the X,Y slots)
            MPoly G = rest.map_vars(R, {Rational(a) * Xp - Rational(vn) * Yp,
                                        Rational(b) * Xp + Rational(un) * Yp, Zp});
            MPoly gSZ = MPoly::zero(R);
            for (auto& c : G.coeffs_in(Y)) {
                if (c.is_zero()) continue;
                gSZ = gSZ.is_zero() ? c : gcd(gSZ, c);
                if (gSZ.is_constant()) break;
            }
            if (gSZ.is_constant()) continue;

            MPoly Sline = Rational(un) * Xp + Rational(vn) * Yp;
            BinarySplit gs = split_binary(gSZ, X, Z);
            if (gs.second_power > 0)
                throw Error("factor_into_lines: internal (Z in direction content)");
            UFactors gf = factor_rational(gs.u);
            QuadExt qu{Rational(un)}, qv{Rational(vn)};
            for (auto& [root, m] : gf.roots) {
                QuadExt lu = qu, lv = qv, lw = QuadExt(-root);
                normalize_line(lu, lv, lw);
                out.lines.push_back({lu, lv, lw, m});
                rest = *exact_div(rest, (Sline - root * Zp).pow(m));
            }
            for (auto& [qf, m] : gf.quadratics) {
                auto [r1, r2] = solve_quadratic(Rational(1), qf[1], qf[0]);
                for (auto& rr : {r1, r2}) {
                    QuadExt lu = qu, lv = qv, lw = -rr;
                    normalize_line(lu, lv, lw);
                    out.lines.push_back({lu, lv, lw, m});
                }
                MPoly q2 = Sline * Sline + qf[1] * Sline * Zp + qf[0] * Zp * Zp;
                rest = *exact_div(rest, q2.pow(m));
            }
            for (auto& [rf, m] : gf.residue) {
                // a parallel family needing a cubic or higher extension
                MPoly rp = MPoly::zero(R);
                for (int i = 0; i <= rf.degree(); ++i)
                    if (rf[i] != 0) rp += rf[i] * Sline.pow(i) * Zp.pow(rf.degree() - i);
                out.residue.push_back({rp.normalized(), m});
                rest = *exact_div(rest, rp.pow(m));
            }
        }

        // quadratic-irrational direction pairs
        for (auto& [qdir, mdir] : bf.quadratics) {
            // (uX+vY) | qdir with u=1 means v^2 - qdir[1] v + qdir[0] = 0
            Rational disc = qdir[1] * qdir[1] - 4 * qdir[0];
            Int d = squarefree_part(disc.get_num() * disc.get_den());
            auto [v1, v2] = solve_quadratic(Rational(1), -qdir[1], qdir[0]);
            MPoly restX0 = rest.eval_partial({{Y, Rational(0)}, {Z, Rational(1)}});
            std::vector<Rational> cs(std::max(restX0.degree(X), 0) + 1, Rational(0));
            for (auto& [e, c] : restX0.terms()) cs[e[X]] += c;
            URat ux{cs};
            if (ux.is_zero()) continue;
            for (auto& [rho, mrho] : roots_in_extension(ux, d)) {
                for (const QuadExt* vv : {&v1, &v2}) {
                    LineFactor L{QuadExt(1), *vv, -rho, 1};
                    MPoly Q2;
                    try {
                        Q2 = line_poly(L, R);
                    } catch (const Error&) {
                        continue;
                    }
                    int e = 0;
                    while (auto q = exact_div(rest, Q2)) {
                        rest = *q;
                        ++e;
                    }
                    if (e > 0) {
                        LineFactor Lc = L.conjugate();
                        L.exponent = Lc.exponent = e;
                        out.lines.push_back(L);
                        out.lines.push_back(Lc);
                    }
                }
            }
        }
    }

    if (!rest.is_constant()) out.residue.push_back({rest.normalized(), 1});

    std::sort(out.lines.begin(), out.lines.end(), line_less);
    out.unit = 1;
    MPoly prod = recompose(out, R);
    // h == unit * prod with a rational unit
    if (prod.is_zero() || h.leading_exp() != prod.leading_exp())
        throw Error("factor_into_lines: recomposition degree mismatch");
    out.unit = h.leading_coeff() / prod.leading_coeff();
    if (h != prod * out.unit) throw Error("factor_into_lines: recomposition mismatch");
    return out;
}

} // namespace qsl
