#include "qsl/upoly.hpp"

#include <algorithm>

#include "qsl/mpoly.hpp"

namespace qsl {

namespace {

// Cauchy root bound: all real roots lie in [-B, B]
Rational root_bound(const URat& f) {
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f[i] / f.lc())));
    return m + 1;
}

std::vector<URat> sturm_chain(const URat& f) {
    std::vector<URat> s;
    s.push_back(f);
    s.push_back(f.derivative());
    while (!s.back().is_zero() && s.back().degree() > 0) {
        auto [q, r] = s[s.size() - 2].divmod(s.back());
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

int variations_at(const std::vector<URat>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at_inf(const std::vector<URat>& chain, int dir) {
    int v = 0, prev = 0;
    for (auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.lc());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sturm_count(const URat& f, const Rational& lo, const Rational& hi) {
    auto chain = sturm_chain(f);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

int sturm_count_all(const URat& f) {
    auto chain = sturm_chain(f);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

std::vector<std::pair<URat, int>> squarefree_decomposition(const URat& f) {
    std::vector<std::pair<URat, int>> out;
    if (f.degree() < 1) return out;
    // Yun's algorithm
    URat a = f.monic();
    URat g = upoly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    URat w = a.divmod(g).first;
    int i = 1;
    while (w.degree() > 0) {
        URat y = upoly_gcd(w, g);
        URat z = w.divmod(y).first;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        w = y;
        g = g.divmod(y).first;
        ++i;
        if (i > f.degree() + 1) throw Error("squarefree decomposition diverged");
    }
    if (g.degree() > 0) throw Error("squarefree decomposition left a factor");
    return out;
}

std::vector<QIv> isolate_real_roots(const URat& f) {
    if (f.is_zero()) throw Error("root isolation of zero polynomial");
    if (f.degree() == 0) return {};
    // squarefree part
    URat h = f.monic();
    URat g = upoly_gcd(h, h.derivative());
    if (g.degree() > 0) h = h.divmod(g).first;

    auto chain = sturm_chain(h);
    Rational b = root_bound(h);
    // a splitting point that is not a root of h (h has finitely many roots)
    auto split_point = [&](const Rational& lo, const Rational& hi) {
        Rational w = hi - lo;
        for (int k = 2; ; ++k) {
            Rational m = lo + w / k;
            if (h.eval(m) != 0) return m;
        }
    };

    std::vector<QIv> out;
    struct Seg { Rational lo, hi; int count; };
    int total = variations_at(chain, -b) - variations_at(chain, b);
    std::vector<Seg> work{{-b, b, total}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1 && sgn(h.eval(s.lo)) * sgn(h.eval(s.hi)) < 0) {
            out.push_back(QIv(s.lo, s.hi));
            continue;
        }
        Rational m = split_point(s.lo, s.hi);
        int left = variations_at(chain, s.lo) - variations_at(chain, m);
        work.push_back({s.lo, m, left});
        work.push_back({m, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end(), [](const QIv& a, const QIv& b) { return a.lo < b.lo; });
    return out;
}

QIv refine_root(const URat& f, QIv iv, const Rational& width) {
    if (iv.is_point()) return iv;
    URat h = f.monic();
    URat g = upoly_gcd(h, h.derivative());
    if (g.degree() > 0) h = h.divmod(g).first;
    int slo = sgn(h.eval(iv.lo));
    int shi = sgn(h.eval(iv.hi));
    if (slo == 0) return QIv(iv.lo);
    if (shi == 0) return QIv(iv.hi);
    if (slo == shi) throw Error("refine_root: not an isolating interval");
    while (iv.width() > width) {
        Rational m = iv.mid();
        int sm = sgn(h.eval(m));
        if (sm == 0) return QIv(m);
        if (sm == slo) iv.lo = m; else iv.hi = m;
    }
    return iv;
}

namespace {

// Exact rational reconstruction from a fine isolating interval: p/q is a
// convergent of the midpoint's continued fraction once the interval is
// narrower than 1/(2q^2).
std::optional<Rational> rational_in_interval(const URat& f, const QIv& iv) {
    if (iv.is_point()) return f.eval(iv.lo) == 0 ? std::optional<Rational>(iv.lo) : std::nullopt;
    Rational x = iv.mid();
    Int p0(1), q0(0), p1, q1;
    Int a, rnum = x.get_num(), rden = x.get_den();
    bool neg = false;
    if (rnum < 0) { neg = true; rnum = -rnum; }
    mpz_fdiv_q(a.get_mpz_t(), rnum.get_mpz_t(), rden.get_mpz_t());
    p1 = a; q1 = 1;
    for (int it = 0; it < 256; ++it) {
        Rational cand = rat(neg ? -p1 : p1, q1);
        if (iv.contains(cand) && f.eval(cand) == 0) return cand;
        Int rem = rnum - a * rden;
        if (rem == 0) break;
        rnum = rden; rden = rem;
        mpz_fdiv_q(a.get_mpz_t(), rnum.get_mpz_t(), rden.get_mpz_t());
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > Int("1000000000000000")) break;
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const URat& f) {
    std::vector<std::pair<Rational, int>> out;
    if (f.degree() < 1) return out;
    Rational fine = rat(1, 1);
    for (int i = 0; i < 20; ++i) fine /= 1000000;  // 10^-120
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& iv : isolate_real_roots(part)) {
            QIv r = refine_root(part, iv, fine);
            if (auto q = rational_in_interval(part, r)) out.push_back({*q, mult});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<QuadExt, QuadExt> solve_quadratic(const Rational& a, const Rational& b,
                                            const Rational& c) {
    if (a == 0) throw Error("solve_quadratic: leading coefficient zero");
    Rational disc = b * b - 4 * a * c;
    QuadExt s = QuadExt::sqrt_of(disc);
    QuadExt two_a = QuadExt(2 * a);
    QuadExt mb = QuadExt(-b);
    return {(mb + s) / two_a, (mb - s) / two_a};
}

std::optional<std::pair<QuadExt, QuadExt>> solve_quadratic_ext(const QuadExt& a,
                                                               const QuadExt& b,
                                                               const QuadExt& c) {
    if (a.is_zero()) throw Error("solve_quadratic_ext: leading coefficient zero");
    QuadExt disc = b * b - QuadExt(4) * a * c;
    QuadExt s;
    if (disc.is_rational()) {
        s = QuadExt::sqrt_of(disc.rational_value());
        // sqrt of a rational may still live outside the working field
        if (!s.is_rational() && !a.is_rational() && s.radicand() != a.radicand() &&
            !b.is_rational() && s.radicand() != b.radicand())
            return std::nullopt;
    } else {
        // need sqrt(u + v sqrt(d)) in Q(sqrt(d)): (x + y sqrt(d))^2 = disc
        // requires norm(disc) a rational square
        Rational n = disc.norm();
        QuadExt rn = QuadExt::sqrt_of(n);
        if (!rn.is_rational()) return std::nullopt;
        // x^2 = (u + sqrt(n))/2 or (u - sqrt(n))/2 must be a rational square
        Rational u = disc.base();
        for (int pick = 0; pick < 2; ++pick) {
            Rational x2 = (u + (pick == 0 ? rn.rational_value() : -rn.rational_value())) / 2;
            QuadExt x = QuadExt::sqrt_of(x2);
            if (!x.is_rational() || x2 == 0) continue;
            Rational xv = x.rational_value();
            Rational yv = disc.coeff() / (2 * xv);
            QuadExt cand(xv, yv, disc.radicand());
            if (cand * cand == disc) { s = cand; break; }
        }
        if (s.is_zero() && !(disc.is_zero())) return std::nullopt;
        if (s * s != disc) return std::nullopt;
    }
    QuadExt two_a = QuadExt(2) * a;
    return std::make_pair((-b + s) / two_a, (-b - s) / two_a);
}

namespace {

// all monic quadratic rational factors t^2 + pt + q of monic f (degree >= 3),
// found by eliminating the division remainder
std::vector<URat> quadratic_factors(const URat& f) {
    std::vector<URat> out;
    RingPtr ring = make_ring({"p", "q"});
    MPoly P = MPoly::var(ring, "p"), Q = MPoly::var(ring, "q");
    // remainder of f mod (t^2 + pt + q): maintain t-coeffs r1*t + r0 in MPoly
    MPoly r1 = MPoly::zero(ring), r0 = MPoly::zero(ring);
    for (int i = f.degree(); i >= 0; --i) {
        // multiply (r1 t + r0) by t, reduce t^2 -> -(p t + q), add c_i
        MPoly nr1 = r0 - r1 * P;
        MPoly nr0 = MPoly::constant(ring, f[i]) - r1 * Q;
        r1 = nr1;
        r0 = nr0;
    }
    if (r1.is_zero() || r0.is_zero()) {
        // degenerate elimination; fall back to resultant on whichever survives
        return out;
    }
    MPoly res = resultant(r1, r0, "q");
    // rational roots of res in p
    auto pcs = res.coeffs_in(ring->index("p"));
    std::vector<Rational> pc;
    for (auto& c : pcs) pc.push_back(c.is_zero() ? Rational(0) : c.constant_value());
    for (auto& [pv, mult] : rational_roots(URat(pc))) {
        // substitute p = pv, find common rational roots in q
        MPoly r1p = r1.eval_partial({{0, pv}});
        MPoly r0p = r0.eval_partial({{0, pv}});
        auto to_urat = [&](const MPoly& m) {
            auto cs = m.coeffs_in(1);
            std::vector<Rational> v;
            for (auto& c : cs) v.push_back(c.is_zero() ? Rational(0) : c.constant_value());
            return URat(v);
        };
        URat u1 = to_urat(r1p), u0 = to_urat(r0p);
        URat g = u1.is_zero() ? u0 : (u0.is_zero() ? u1 : upoly_gcd(u1, u0));
        if (g.is_zero()) continue;
        if (g.degree() == 0) continue;
        for (auto& [qv, m2] : rational_roots(g)) {
            URat cand({qv, pv, Rational(1)});
            auto [quo, rem] = f.divmod(cand);
            if (rem.is_zero()) out.push_back(cand);
        }
    }
    return out;
}

} // namespace

UFactors factor_rational(const URat& f) {
    UFactors out;
    out.unit = f.is_zero() ? Rational(0) : f.lc();
    if (f.degree() < 1) return out;
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        URat rest = part;
        for (auto& [r, m] : rational_roots(rest)) {
            out.roots.push_back({r, mult});
            rest = rest.divmod(URat({-r, Rational(1)})).first;
        }
        // keep splitting off quadratic factors while possible
        bool changed = true;
        while (rest.degree() >= 3 && changed) {
            changed = false;
            for (auto& qf : quadratic_factors(rest)) {
                auto [quo, rem] = rest.divmod(qf);
                if (rem.is_zero()) {
                    out.quadratics.push_back({qf, mult});
                    rest = quo;
                    changed = true;
                    break;
                }
            }
        }
        if (rest.degree() == 1) {
            out.roots.push_back({-rest[0] / rest[1], mult});
        } else if (rest.degree() == 2) {
            Rational disc = rest[1] * rest[1] - 4 * rest[2] * rest[0];
            QuadExt s = QuadExt::sqrt_of(disc);
            if (s.is_rational()) {
                Rational r1 = (-rest[1] + s.rational_value()) / (2 * rest[2]);
                Rational r2 = (-rest[1] - s.rational_value()) / (2 * rest[2]);
                out.roots.push_back({r1, mult});
                out.roots.push_back({r2, mult});
            } else {
                out.quadratics.push_back({rest.monic(), mult});
            }
        } else if (rest.degree() >= 3) {
            out.residue.push_back({rest.monic(), mult});
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<std::pair<QuadExt, int>> roots_in_extension(const URat& f, const Int& d) {
    std::vector<std::pair<QuadExt, int>> out;
    UFactors fac = factor_rational(f);
    for (auto& [r, m] : fac.roots) out.push_back({QuadExt(r), m});
    if (d != 0) {
        for (auto& [q, m] : fac.quadratics) {
            Rational disc = q[1] * q[1] - 4 * q[0];
            Int sf = squarefree_part(disc.get_num() * disc.get_den());
            if (sf != d) continue;
            auto [r1, r2] = solve_quadratic(Rational(1), q[1], q[0]);
            out.push_back({r1, m});
            out.push_back({r2, m});
        }
    }
    return out;
}

std::vector<std::pair<QIv, int>> real_roots_ext(const UExt& f) {
    std::vector<std::pair<QIv, int>> out;
    if (f.degree() < 1) return out;
    for (auto& c : f.coeffs())
        if (!c.is_real()) throw Error("real_roots_ext: complex coefficients");
    // multiply by the conjugate polynomial: rational coefficients, same real
    // roots as f together with the conjugate's
    std::vector<QuadExt> conj;
    for (auto& c : f.coeffs()) conj.push_back(c.conj());
    UExt fc = f * UExt(std::move(conj));
    std::vector<Rational> rc;
    for (auto& c : fc.coeffs()) rc.push_back(c.rational_value());
    URat g{rc};
    Rational fine = rat(1, 1);
    for (int i = 0; i < 12; ++i) fine /= 1000000;
    for (auto& [part, mult] : squarefree_decomposition(g)) {
        for (auto& iv0 : isolate_real_roots(part)) {
            QIv iv = refine_root(part, iv0, fine);
            // check it is a root of f itself (not only of the conjugate):
            // sign change or exact zero of f on the interval
            auto sign_at = [&](const Rational& x) {
                QuadExt v = f.eval(QuadExt(x));
                return v.is_zero() ? 0 : v.sign();
            };
            int s1 = sign_at(iv.lo), s2 = sign_at(iv.hi);
            bool is_root = (s1 == 0 && iv.is_point()) || (!iv.is_point() && s1 * s2 < 0);
            if (!is_root && !iv.is_point()) continue;
            if (iv.is_point() && s1 != 0) continue;
            // multiplicity within f via repeated derivative sign tests
            int k = 1;
            UExt der = f.derivative();
            while (k < f.degree()) {
                auto sA = der.eval(QuadExt(iv.lo)), sB = der.eval(QuadExt(iv.hi));
                bool vanish = iv.is_point()
                                  ? der.eval(QuadExt(iv.lo)).is_zero()
                                  : (!sA.is_zero() && !sB.is_zero() && sA.sign() * sB.sign() < 0);
                if (!vanish) break;
                ++k;
                der = der.derivative();
            }
            out.push_back({iv, k * mult});
        }
    }
    return out;
}

CBox eval_box(const std::vector<CBox>& coeffs, const CBox& x) {
    CBox r;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) r = r * x + coeffs[i];
    return r;
}

std::vector<NumRoot> numeric_roots(const URat& f, int prec) {
    std::vector<NumRoot> out;
    if (f.degree() < 1) return out;
    Rational width = rat(1, 1);
    for (int i = 0; i < prec; ++i) width /= 2;

    for (auto& [part0, mult] : squarefree_decomposition(f)) {
        URat part = part0;
        // exact rational roots first
        for (auto& [r, m] : rational_roots(part)) {
            out.push_back({CBox(QIv(r)), true, mult});
            part = part.divmod(URat({-r, Rational(1)})).first;
        }
        if (part.degree() == 0) continue;
        // real irrational roots
        int nreal = 0;
        for (auto& iv : isolate_real_roots(part)) {
            QIv r = refine_root(part, iv, width);
            out.push_back({CBox(r), true, mult});
            ++nreal;
        }
        int npairs = (part.degree() - nreal) / 2;
        if (npairs == 0) continue;
        if (part.degree() == 2) {
            // complex conjugate pair of a rational quadratic, exact boxes
            Rational a = part[2], b = part[1], c = part[0];
            Rational re = -b / (2 * a);
            Rational im2 = (4 * a * c - b * b) / (4 * a * a);
            QIv im = sqrt_enclosure(QIv(im2), prec);
            out.push_back({CBox(QIv(re), im), false, mult});
            out.push_back({CBox(QIv(re), -im), false, mult});
            continue;
        }
        // complex pairs via rational elimination on the monic quadratic
        // factor t^2 + pt + q: remainder coefficients vanish
        RingPtr ring = make_ring({"p", "q"});
        MPoly P = MPoly::var(ring, "p"), Q = MPoly::var(ring, "q");
        MPoly r1 = MPoly::zero(ring), r0 = MPoly::zero(ring);
        for (int i = part.degree(); i >= 0; --i) {
            MPoly nr1 = r0 - r1 * P;
            MPoly nr0 = MPoly::constant(ring, part[i]) - r1 * Q;
            r1 = nr1;
            r0 = nr0;
        }
        MPoly Sp = resultant(r1, r0, "q");
        MPoly Sq = resultant(r1, r0, "p");
        auto to_urat = [](const MPoly& m, int var) {
            auto cs = m.coeffs_in(var);
            std::vector<Rational> v;
            for (auto& c : cs) v.push_back(c.is_zero() ? Rational(0) : c.constant_value());
            return URat(v);
        };
        URat SpU = to_urat(Sp, 0), SqU = to_urat(Sq, 1);
        std::vector<QIv> pcands, qcands;
        for (auto& iv : isolate_real_roots(SpU)) pcands.push_back(refine_root(SpU, iv, width));
        for (auto& iv : isolate_real_roots(SqU)) qcands.push_back(refine_root(SqU, iv, width));
        std::vector<CBox> found;
        for (auto& pi : pcands)
            for (auto& qi : qcands) {
                // verify (p,q) jointly: both remainder coefficients must
                // vanish over the box, and the quadratic must be complex
                auto ev = [&](const MPoly& m) {
                    CBox acc;
                    for (auto& [e, c] : m.terms()) {
                        CBox t{QIv(c)};
                        for (int k = 0; k < e[0]; ++k) t = t * CBox(pi);
                        for (int k = 0; k < e[1]; ++k) t = t * CBox(qi);
                        acc = acc + t;
                    }
                    return acc;
                };
                if (!ev(r1).contains_zero() || !ev(r0).contains_zero()) continue;
                QIv disc = pi * pi - QIv(Rational(4)) * qi;
                if (disc.lo >= 0) continue;  // real pair, already counted
                QIv re = -pi / QIv(Rational(2));
                QIv im2 = (QIv(Rational(4)) * qi - pi * pi) / QIv(Rational(4));
                if (im2.lo < 0) im2.lo = 0;
                QIv im = sqrt_enclosure(im2, prec);
                found.push_back(CBox(re, im));
            }
        if ((int)found.size() != npairs)
            throw Error("numeric_roots: complex pair resolution ambiguous");
        for (auto& b : found) {
            out.push_back({b, false, mult});
            out.push_back({CBox(b.re, -b.im), false, mult});
        }
    }
    return out;
}

} // namespace qsl
