#include "qsl/verify.hpp"

#include <algorithm>

namespace qsl {

CBox enclosure(const QuadExt& q, int prec) {
    if (q.is_rational()) return CBox(QIv(q.base()));
    QIv root = sqrt_enclosure(QIv(Rational(abs(q.radicand()))), prec);
    QIv scaled = QIv(q.coeff()) * root;
    if (q.radicand() > 0) return CBox(QIv(q.base()) + scaled);
    return CBox(QIv(q.base()), scaled);
}

namespace {

struct SysCoeffs {
    // polynomial coefficients (the printed ones, xy not halved)
    Rational A20, A11, A02, A10, A01, A00;
    Rational B20, B11, B02, B10, B01, B00;
};

SysCoeffs coeffs_of(const QuadraticSystem& s) {
    return {s.a20, 2 * s.a11, s.a02, s.a10, s.a01, s.a00,
            s.b20, 2 * s.b11, s.b02, s.b10, s.b01, s.b00};
}

// exact per-direction solve over Q or one quadratic extension
void direction_lines_exact(const SysCoeffs& c, const QuadExt& u, const QuadExt& v,
                           std::vector<InvariantLine>& out,
                           std::vector<std::string>& warnings,
                           std::vector<std::pair<QuadExt, QuadExt>>& numeric_dirs) {
    QuadExt cx2 = u * c.A20 + v * c.B20;
    QuadExt cxy = u * c.A11 + v * c.B11;
    QuadExt cy2 = u * c.A02 + v * c.B02;
    QuadExt r, s;
    if (!u.is_zero()) {
        r = cx2 / u;
        s = v.is_zero() ? cxy / u : cy2 / v;
    } else {
        if (!cx2.is_zero()) return;
        r = cxy / v;
        s = cy2 / v;
    }
    if (u * r != cx2 || u * s + v * r != cxy || v * s != cy2) return;

    QuadExt ax = u * c.A10 + v * c.B10;
    QuadExt ay = u * c.A01 + v * c.B01;
    QuadExt c0 = u * c.A00 + v * c.B00;
    QuadExt det = u * s - v * r;

    auto push = [&](const QuadExt& w, const QuadExt& t) {
        InvariantLine L;
        L.u = u;
        L.v = v;
        L.w = w;
        normalize_line(L.u, L.v, L.w);
        L.multiplicity = 1;
        L.cofactor = {r, s, t};
        L.provenance = "oracle";
        L.real = L.u.is_real() && L.v.is_real() && L.w.is_real();
        out.push_back(L);
    };

    if (!det.is_zero()) {
        QuadExt t = (ax * s - r * ay) / det;
        QuadExt w = (u * ay - v * ax) / det;
        if (c0 == w * t) push(w, t);
        return;
    }

    // cofactor direction parallel to the line direction: a pencil of
    // parallel candidates cut down by the constant term
    QuadExt xi = !u.is_zero() ? r / u : s / v;
    if (ay * u != ax * v) return;
    QuadExt sigma = !u.is_zero() ? ax / u : ay / v;
    if (xi.is_zero()) {
        QuadExt t = sigma;
        if (t.is_zero()) return;  // w*0 = c0 with c0 != 0 (validated system)
        push(c0 / t, t);
        return;
    }
    auto roots = solve_quadratic_ext(xi, -sigma, c0);
    if (!roots) {
        numeric_dirs.push_back({u, v});
        warnings.push_back("direction needs a nested extension; numeric path");
        return;
    }
    auto seen_same = [&](const QuadExt& w1, const QuadExt& w2) { return w1 == w2; };
    push(roots->first, sigma - roots->first * xi);
    if (!seen_same(roots->first, roots->second))
        push(roots->second, sigma - roots->second * xi);
}

// interval per-direction solve; accepts only candidates whose cofactor
// residual encloses zero at two precisions
void direction_lines_numeric(const SysCoeffs& c, const CBox& u, const CBox& v, int prec,
                             std::vector<NumericLine>& out,
                             std::vector<std::string>& warnings) {
    auto R = [&](const Rational& q) { return CBox(QIv(q)); };
    CBox cx2 = u * R(c.A20) + v * R(c.B20);
    CBox cxy = u * R(c.A11) + v * R(c.B11);
    CBox cy2 = u * R(c.A02) + v * R(c.B02);
    bool u_nz = !u.contains_zero(), v_nz = !v.contains_zero();
    if (!u_nz && !v_nz) {
        warnings.push_back("numeric direction enclosure straddles zero");
        return;
    }
    CBox r, s;
    try {
        if (u_nz) {
            r = cx2 / u;
            s = v_nz ? cy2 / v : cxy / u;
        } else {
            r = cxy / v;
            s = cy2 / v;
        }
    } catch (const Error&) {
        warnings.push_back("numeric direction division failed");
        return;
    }
    CBox ax = u * R(c.A10) + v * R(c.B10);
    CBox ay = u * R(c.A01) + v * R(c.B01);
    CBox c0 = u * R(c.A00) + v * R(c.B00);
    CBox det = u * s - v * r;
    if (!det.contains_zero()) {
        CBox t = (ax * s - r * ay) / det;
        CBox w = (u * ay - v * ax) / det;
        CBox resid = c0 - w * t;
        if (resid.contains_zero()) out.push_back({u, v, w});
        return;
    }
    // parallel pencil branch
    try {
        CBox xi = u_nz ? r / u : s / v;
        CBox sigma = u_nz ? ax / u : ay / v;
        if (!(ay * u - ax * v).contains_zero()) return;
        if (xi.contains_zero()) {
            if (sigma.contains_zero()) {
                warnings.push_back("numeric parallel branch unresolved");
                return;
            }
            out.push_back({u, v, c0 / sigma});
            return;
        }
        CBox disc = sigma * sigma - CBox(QIv(Rational(4))) * xi * c0;
        CBox sq = sqrt_enclosure(disc, prec);
        CBox two_xi = CBox(QIv(Rational(2))) * xi;
        for (int pick = 0; pick < 2; ++pick) {
            CBox w = (sigma + (pick == 0 ? sq : -sq)) / two_xi;
            CBox resid = (xi * w - sigma) * w + c0;
            if (resid.contains_zero()) out.push_back({u, v, w});
        }
    } catch (const Error&) {
        warnings.push_back("numeric parallel branch division failed");
    }
}

} // namespace

OracleResult oracle_lines_full(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("oracle requires a valid system");
    OracleResult res;
    SysPair sp = to_pair(s);
    MPoly C2 = base_C(sp, 2);
    if (C2.is_zero()) throw Error("line oracle requires C2 != 0");
    SysCoeffs c = coeffs_of(s);

    // direction cubic G(u,v) = C2(-v, u)
    RingPtr Ruv = make_ring({"u", "v"});
    MPoly G = C2.map_vars(Ruv, {-MPoly::var(Ruv, "v"), MPoly::var(Ruv, "u")});
    int d = G.degree_in(0, 1);
    std::vector<Rational> cs(d + 1, Rational(0));
    for (auto& [e, cc] : G.terms()) cs[e[0]] += cc;
    URat g{cs};
    int vpow = d - g.degree();

    std::vector<std::pair<QuadExt, QuadExt>> dirs;
    if (vpow > 0) dirs.push_back({QuadExt(1), QuadExt(0)});
    UFactors f = factor_rational(g);
    for (auto& [root, m] : f.roots) {
        // direction (u,v) with u/v = root
        dirs.push_back({QuadExt(root), QuadExt(1)});
    }
    for (auto& [q, m] : f.quadratics) {
        auto [r1, r2] = solve_quadratic(Rational(1), q[1], q[0]);
        dirs.push_back({r1, QuadExt(1)});
        dirs.push_back({r2, QuadExt(1)});
    }

    std::vector<std::pair<QuadExt, QuadExt>> numeric_dirs;
    for (auto& [u, v] : dirs)
        direction_lines_exact(c, u, v, res.exact, res.warnings, numeric_dirs);

    // interval fallback: cubic-extension directions plus exact directions
    // whose offsets live in a nested extension
    const int prec = 128;
    std::vector<std::pair<CBox, CBox>> nboxes;
    for (auto& [rf, m] : f.residue)
        for (auto& nr : numeric_roots(rf, prec)) nboxes.push_back({nr.box, CBox(QIv(Rational(1)))});
    for (auto& [u, v] : numeric_dirs) nboxes.push_back({enclosure(u, prec), enclosure(v, prec)});
    for (auto& [ub, vb] : nboxes) {
        std::vector<NumericLine> first, second;
        direction_lines_numeric(c, ub, vb, prec, first, res.warnings);
        direction_lines_numeric(c, ub, vb, prec * 2, second, res.warnings);
        // keep candidates that survive the higher-precision rerun
        for (auto& L1 : first) {
            for (auto& L2 : second) {
                if (overlap(L1.w, L2.w) && overlap(L1.u, L2.u)) {
                    res.numeric.push_back(L1);
                    break;
                }
            }
        }
    }

    // distinct lines only
    std::sort(res.exact.begin(), res.exact.end(),
              [](const InvariantLine& a, const InvariantLine& b) {
                  return line_less(LineFactor{a.u, a.v, a.w, 1}, LineFactor{b.u, b.v, b.w, 1});
              });
    res.exact.erase(std::unique(res.exact.begin(), res.exact.end(),
                                [](const InvariantLine& a, const InvariantLine& b) {
                                    return a.u == b.u && a.v == b.v && a.w == b.w;
                                }),
                    res.exact.end());
    return res;
}

std::vector<InvariantLine> oracle_lines(const QuadraticSystem& s) {
    OracleResult r = oracle_lines_full(s);
    for (auto& n : r.numeric) {
        InvariantLine L;
        L.numeric = true;
        L.multiplicity = 1;
        L.provenance = "oracle-numeric";
        L.real = n.u.im.contains_zero() && n.v.im.contains_zero() && n.w.im.contains_zero();
        r.exact.push_back(L);
    }
    return r.exact;
}

namespace {

std::optional<LineFactor> normalized_or_infinity(const std::array<QuadExt, 3>& raw) {
    QuadExt u = raw[0], v = raw[1], w = raw[2];
    if (u.is_zero() && v.is_zero()) {
        if (w.is_zero()) return std::nullopt;      // degenerate triple
        return LineFactor{QuadExt(0), QuadExt(0), QuadExt(1), 1};
    }
    normalize_line(u, v, w);
    return LineFactor{u, v, w, 1};
}

} // namespace

PerturbReport perturbation_check(const ConfigLabel& label,
                                 const std::map<std::string, Rational>& params,
                                 const Rational& eps) {
    PerturbReport rep;
    if (eps == 0 || abs(eps) > Rational(1, 4)) {
        rep.ok = false;
        rep.details.push_back("eps must be nonzero with |eps| <= 1/4");
        return rep;
    }
    const PerturbationRow* row = nullptr;
    for (auto& r : perturbation_rows())
        if (r.label == label) row = &r;
    if (!row) {
        rep.ok = false;
        rep.details.push_back("no perturbation row for " + label.str());
        return rep;
    }

    QuadraticSystem pert = row->build(params, eps);
    auto expected_raw = row->lines(params, eps);
    std::vector<LineFactor> expected;
    for (auto& raw : expected_raw) {
        auto L = normalized_or_infinity(raw);
        if (!L || L->at_infinity()) {
            rep.ok = false;
            rep.details.push_back("published line degenerates at this eps");
            continue;
        }
        expected.push_back(*L);
    }
    std::sort(expected.begin(), expected.end(), line_less);

    OracleResult orc = oracle_lines_full(pert);
    if (!orc.numeric.empty()) {
        rep.ok = false;
        rep.details.push_back("perturbed system unexpectedly needs the numeric path");
    }
    std::vector<LineFactor> got;
    for (auto& L : orc.exact) got.push_back({L.u, L.v, L.w, 1});
    std::sort(got.begin(), got.end(), line_less);

    if (got.size() != expected.size()) {
        rep.ok = false;
        rep.details.push_back("line count: oracle " + std::to_string(got.size()) +
                              ", published " + std::to_string(expected.size()));
    }
    for (auto& e : expected) {
        bool found = false;
        for (auto& gl : got) found |= same_line(e, gl);
        if (!found) {
            rep.ok = false;
            rep.details.push_back("published line " + e.str() + " not found by the oracle");
        }
    }
    for (auto& gl : got) {
        bool found = false;
        for (auto& e : expected) found |= same_line(e, gl);
        if (!found) {
            rep.ok = false;
            rep.details.push_back("oracle line " + gl.str() + " not in the published set");
        }
    }

    // eps -> 0: the limits must reproduce the unperturbed configuration,
    // line of multiplicity m receiving m limits and Z=0 of multiplicity k
    // receiving k-1 collapsing lines
    QuadraticSystem base = row->build(params, Rational(0));
    LineConfiguration cfg = extract_lines(base);
    auto limits = row->limits(params);
    std::map<std::string, int> limit_count;
    int to_infinity = 0;
    for (auto& raw : limits) {
        auto L = normalized_or_infinity(raw);
        if (!L) {
            rep.ok = false;
            rep.details.push_back("limit line degenerates to (0,0,0)");
            continue;
        }
        if (L->at_infinity()) ++to_infinity;
        else ++limit_count[L->str()];
    }
    for (auto& L : cfg.lines) {
        if (L.at_infinity) {
            if (to_infinity != L.multiplicity - 1) {
                rep.ok = false;
                rep.details.push_back("infinity limits: " + std::to_string(to_infinity) +
                                      ", expected " + std::to_string(L.multiplicity - 1));
            }
            continue;
        }
        std::string key = LineFactor{L.u, L.v, L.w, 1}.str();
        if (limit_count[key] != L.multiplicity) {
            rep.ok = false;
            rep.details.push_back("limits onto " + key + ": " +
                                  std::to_string(limit_count[key]) + ", expected " +
                                  std::to_string(L.multiplicity));
        }
        limit_count.erase(key);
    }
    for (auto& [key, n] : limit_count)
        if (n > 0) {
            rep.ok = false;
            rep.details.push_back("limit line " + key + " is not part of the configuration");
        }

    // published lines at the working eps must approach their limits
    if ((int)limits.size() != (int)expected_raw.size()) {
        rep.ok = false;
        rep.details.push_back("limit list length differs from the line list");
    }
    return rep;
}

namespace {

Rational magnitude_upper(const CBox& b) {
    Rational m = 0;
    for (auto v : {abs(b.re.lo), abs(b.re.hi), abs(b.im.lo), abs(b.im.hi)})
        m = std::max(m, Rational(v));
    return m;
}

// does the numeric line lie on the zero set of the (homogeneous) residue?
bool line_in_residue(const MPoly& residue, const NumericLine& L, int prec) {
    (void)prec;
    int deg = residue.total_degree();
    bool use_x_param = !L.v.contains_zero();
    for (int k = 0; k <= deg + 1; ++k) {
        CBox t{QIv(Rational(k))};
        CBox x, y, z{QIv(Rational(1))};
        if (use_x_param) {
            x = t;
            y = -(L.u * t + L.w) / L.v;
        } else {
            y = t;
            x = -(L.v * t + L.w) / L.u;
        }
        CBox acc;
        for (auto& [e, c] : residue.terms()) {
            CBox term{QIv(c)};
            for (int i = 0; i < e[0]; ++i) term = term * x;
            for (int i = 0; i < e[1]; ++i) term = term * y;
            for (int i = 0; i < e[2]; ++i) term = term * z;
            acc = acc + term;
        }
        if (!acc.contains_zero()) return false;
    }
    return true;
}

} // namespace

CrossReport cross_validate(const QuadraticSystem& s) {
    CrossReport rep;
    LineConfiguration cfg = extract_lines(s);
    OracleResult orc = oracle_lines_full(s);

    std::vector<LineFactor> pipeline, oracle;
    for (auto& L : cfg.lines)
        if (!L.at_infinity) pipeline.push_back({L.u, L.v, L.w, 1});
    for (auto& L : orc.exact) oracle.push_back({L.u, L.v, L.w, 1});
    std::sort(pipeline.begin(), pipeline.end(), line_less);
    std::sort(oracle.begin(), oracle.end(), line_less);
    rep.exact_lines = (int)oracle.size();
    rep.numeric_lines = (int)orc.numeric.size();

    if (pipeline.size() != oracle.size()) {
        rep.ok = false;
        rep.details.push_back("distinct affine lines: pipeline " +
                              std::to_string(pipeline.size()) + ", oracle " +
                              std::to_string(oracle.size()));
    } else {
        for (size_t i = 0; i < pipeline.size(); ++i)
            if (!same_line(pipeline[i], oracle[i])) {
                rep.ok = false;
                rep.details.push_back("line mismatch: pipeline " + pipeline[i].str() +
                                      " vs oracle " + oracle[i].str());
            }
    }

    // whatever hides in the residue must be covered by numeric oracle lines
    if (cfg.residue_degree > 0) {
        int covered = 0;
        for (auto& n : orc.numeric) {
            bool inside = false;
            for (auto& r : cfg.residue) inside |= line_in_residue(r, n, 128);
            if (inside) ++covered;
            else {
                rep.ok = false;
                rep.details.push_back("numeric oracle line not contained in the gcd residue");
            }
        }
        if (covered != cfg.residue_degree) {
            rep.ok = false;
            rep.details.push_back("residue of degree " + std::to_string(cfg.residue_degree) +
                                  " covered by " + std::to_string(covered) +
                                  " numeric lines");
        }
    } else if (!orc.numeric.empty()) {
        rep.ok = false;
        rep.details.push_back("oracle found numeric lines the pipeline does not show");
    }

    int m_il = cfg.M_IL;
    if (m_il > 6) {
        rep.ok = false;
        rep.details.push_back("M_IL = " + std::to_string(m_il) + " exceeds the maximum 6");
    }
    (void)magnitude_upper;
    return rep;
}

} // namespace qsl

// ---------------------------------------------------------------------------
// perturbation rows

namespace qsl {

namespace {

using Params = std::map<std::string, Rational>;
using Triples = std::vector<std::array<QuadExt, 3>>;

QuadraticSystem fp(Rational a00, Rational a10, Rational a01, Rational a20, Rational axy,
                   Rational a02, Rational b00, Rational b10, Rational b01, Rational b20,
                   Rational bxy, Rational b02) {
    return {a00, a10, a01, a20, axy / 2, a02, b00, b10, b01, b20, bxy / 2, b02};
}

Rational gp(const Params& m) {
    auto it = m.find("g");
    if (it == m.end()) throw Error("missing parameter g");
    return it->second;
}

const QuadExt I_(Rational(0), Rational(1), Int(-1));
const QuadExt o(Rational(0));
const QuadExt u(Rational(1));

std::vector<PerturbationRow> build_perturbations() {
    std::vector<PerturbationRow> rows;
    auto row = [&](ConfigLabel label, std::vector<std::string> params,
                   std::function<QuadraticSystem(const Params&, const Rational&)> build,
                   std::function<Triples(const Params&, const Rational&)> lines,
                   std::function<Triples(const Params&)> limits) {
        rows.push_back({label, std::move(params), std::move(build), std::move(lines),
                        std::move(limits)});
    };

    row(ConfigLabel::six(5), {},
        [](const Params&, const Rational& e) {
            return fp(-e * e, 0, 0, 1, 0, 0, -e * e, 0, 0, 0, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, QuadExt(-e)}, {u, o, QuadExt(e)}, {o, u, QuadExt(-e)},
                    {o, u, QuadExt(e)}, {u, QuadExt(-1), o}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {u, o, o}, {o, u, o}, {o, u, o}, {u, QuadExt(-1), o}};
        });

    row(ConfigLabel::six(6), {},
        [](const Params&, const Rational& e) {
            return fp(0, 0, 0, 0, 2, 0, e * e, 0, 0, -1, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            // the conic pair (x+iy)^2 = e^2, (x-iy)^2 = e^2
            return {{u, I_, QuadExt(-e)}, {u, I_, QuadExt(e)}, {u, -I_, QuadExt(-e)},
                    {u, -I_, QuadExt(e)}, {u, o, o}};
        },
        [](const Params&) -> Triples {
            return {{u, I_, o}, {u, I_, o}, {u, -I_, o}, {u, -I_, o}, {u, o, o}};
        });

    row(ConfigLabel::six(7), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 2 * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, QuadExt(e), u}, {o, u, o},
                    {u, QuadExt(-2 * e), QuadExt(-1)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, o, u}, {o, u, o}, {u, o, QuadExt(-1)}};
        });

    row(ConfigLabel::six(8), {},
        [](const Params&, const Rational& e) {
            return fp(1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -2, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, QuadExt(-1)}, {u, o, u}, {u, QuadExt(e), QuadExt(-1)},
                    {u, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, QuadExt(-1)}, {u, o, u}, {u, o, QuadExt(-1)}, {u, o, u}};
        });

    row(ConfigLabel::six(9), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -2, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, -I_}, {u, o, I_}, {u, QuadExt(e), -I_}, {u, QuadExt(e), I_}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, -I_}, {u, o, I_}, {u, o, -I_}, {u, o, I_}};
        });

    row(ConfigLabel::six(10), {},
        [](const Params&, const Rational& e) {
            return fp(-e * e, 0, 0, (1 - e) * (1 - e), 0, 0, 1, 0, 2 * e * e + 2 * e, 0, 0,
                      4 * e * e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{QuadExt(1 - e), o, QuadExt(-e)},
                    {QuadExt(1 - e), o, QuadExt(e)},
                    {o, QuadExt(2 * e), u},
                    {o, QuadExt(2 * e * e), u},
                    {QuadExt((e - 1) * (e - 1)), QuadExt(-4 * e * e * e),
                     QuadExt(-e * (e + 1))}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {u, o, o}, {o, o, u}, {o, o, u}, {u, o, o}};
        });

    row(ConfigLabel::six(11), {},
        [](const Params&, const Rational& e) {
            return fp(0, 1, 0, e, 0, 0, 0, 0, 1, -1, -2 * e, -2 * e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, o}, {QuadExt(e), o, u}, {u, QuadExt(e), o}, {u, QuadExt(2 * e), o},
                    {QuadExt(e), QuadExt(2 * e * e), QuadExt(-1)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {o, o, u}, {u, o, o}, {u, o, o}, {o, o, QuadExt(-1)}};
        });

    row(ConfigLabel::five(7), {},
        [](const Params&, const Rational& e) {
            return fp(1, 1 + e, 0, e, 0, 0, 0, 0, 0, 0, e - 1, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, u}, {QuadExt(-1), u, QuadExt(-1)}, {QuadExt(e), o, u}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, u}, {QuadExt(-1), u, QuadExt(-1)}, {o, o, u}};
        });

    row(ConfigLabel::five(8), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(e * e, e * (g + 1), 0, g, 0, 0, 0, 0, 0, 0, g - 1, 1);
        },
        [](const Params& m, const Rational& e) -> Triples {
            Rational g = gp(m);
            return {{o, u, o}, {u, o, QuadExt(e)}, {QuadExt(-1), u, QuadExt(-e)},
                    {QuadExt(g), o, QuadExt(e)}};
        },
        [](const Params& m) -> Triples {
            Rational g = gp(m);
            return {{o, u, o}, {u, o, o}, {QuadExt(-1), u, o}, {QuadExt(g), o, o}};
        });

    row(ConfigLabel::five(9), {},
        [](const Params&, const Rational& e) {
            return fp(0, 2, 0, 2 * e, 0, 0, 1, 2 * e, 0, -1, 2 * e, -1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, o}, {QuadExt(e), o, u}, {I_, u, u}, {-I_, u, u}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {o, o, u}, {I_, u, u}, {-I_, u, u}};
        });

    row(ConfigLabel::five(10), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(4 * g * e * e, e * (g * g + 4), 0, g, 0, 0, e * e * (4 - g * g), 0, 0,
                      -1, g, -1);
        },
        [](const Params& m, const Rational& e) -> Triples {
            Rational g = gp(m);
            QuadExt ge(g * e);
            return {{u, o, ge},
                    {QuadExt(g), o, QuadExt(4 * e)},
                    {u, -I_, QuadExt(g * e, -2 * e, Int(-1))},
                    {u, I_, QuadExt(g * e, 2 * e, Int(-1))}};
        },
        [](const Params& m) -> Triples {
            Rational g = gp(m);
            return {{u, o, o}, {QuadExt(g), o, o}, {u, -I_, o}, {u, I_, o}};
        });

    row(ConfigLabel::five(11), {},
        [](const Params&, const Rational& e) {
            return fp(0, e, 0, 1, 1 + e, 0, 0, 0, 1, 0, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, o}, {o, u, u}, {o, u, o}, {u, QuadExt(e), QuadExt(e)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {o, u, u}, {o, u, o}, {u, o, o}};
        });

    row(ConfigLabel::five(12), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 0, 0, 1, 0, 0, -e * e, 0, 0, 0, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, u, QuadExt(-e)}, {o, u, QuadExt(e)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, u, o}, {o, u, o}};
        });

    row(ConfigLabel::five(13), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(-g, 0, 0, g, 0, 0, 0, 0, 2, 0, 0, 2 * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, QuadExt(-1)}, {u, o, u}, {o, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, QuadExt(-1)}, {u, o, u}, {o, o, u}};
        });

    row(ConfigLabel::five(14), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(1, g + 1, 0, g, 0, 0, 0, 0, 0, 0, g - 1, -e);
        },
        [](const Params& m, const Rational& e) -> Triples {
            Rational g = gp(m);
            return {{u, o, u}, {QuadExt(g), o, u}, {o, u, o}, {u, QuadExt(e), u}};
        },
        [](const Params& m) -> Triples {
            Rational g = gp(m);
            return {{u, o, u}, {QuadExt(g), o, u}, {o, u, o}, {u, o, u}};
        });

    row(ConfigLabel::five(15), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(g, 0, 0, g, 0, 0, 0, 0, 2, 0, 0, 2 * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, -I_}, {u, o, I_}, {o, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, -I_}, {u, o, I_}, {o, o, u}};
        });

    row(ConfigLabel::five(16), {},
        [](const Params&, const Rational& e) {
            return fp(1, 0, 0, 1, 0, 0, -e * e, 0, 0, 0, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, -I_}, {u, o, I_}, {o, u, QuadExt(-e)}, {o, u, QuadExt(e)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, -I_}, {u, o, I_}, {o, u, o}, {o, u, o}};
        });

    row(ConfigLabel::five(17), {},
        [](const Params&, const Rational& e) {
            return fp(-e * e, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 2 * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{o, u, o}, {u, o, QuadExt(-e)}, {u, o, QuadExt(e)}, {o, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{o, u, o}, {u, o, o}, {u, o, o}, {o, o, u}};
        });

    row(ConfigLabel::five(18), {},
        [](const Params&, const Rational& e) {
            return fp(1, 1 + e, 0, e, 0, 0, 0, 0, 0, 0, e - 1, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, u}, {QuadExt(e), o, u}, {o, u, o}, {u, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{u, o, u}, {o, o, u}, {o, u, o}, {u, o, u}};
        });

    row(ConfigLabel::five(19), {},
        [](const Params&, const Rational& e) {
            return fp(0, e * e, 0, 1, 1 + e, 0, 0, 0, e, 0, 0, 1);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, o}, {o, u, o}, {o, u, QuadExt(e)}, {u, QuadExt(e), QuadExt(e * e)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {o, u, o}, {o, u, o}, {u, o, o}};
        });

    row(ConfigLabel::five(20), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, -e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, QuadExt(e), QuadExt(-1)},
                    {o, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {o, o, QuadExt(-1)}, {o, o, u}};
        });

    row(ConfigLabel::five(21), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 4 * e, 0, 1 + 4 * e, 0, 0, 0, 1, 2, 0, 4 * e, 8 * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, u}, {QuadExt(1 + 4 * e), o, QuadExt(-1)}, {o, QuadExt(4 * e), u},
                    {u, QuadExt(-8 * e), QuadExt(-1)}};
        },
        [](const Params&) -> Triples {
            return {{u, o, u}, {u, o, QuadExt(-1)}, {o, o, u}, {u, o, QuadExt(-1)}};
        });

    row(ConfigLabel::five(22), {},
        [](const Params&, const Rational& e) {
            return fp(1, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            QuadExt s = QuadExt::sqrt_of(1 + e);
            return {{u, o, QuadExt(-1)}, {u, o, u}, {u, QuadExt(e), -s}, {u, QuadExt(e), s}};
        },
        [](const Params&) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {u, o, QuadExt(-1)}, {u, o, u}};
        });

    row(ConfigLabel::five(23), {},
        [](const Params&, const Rational& e) {
            Rational c = (1 - 2 * e) * (1 - 2 * e);
            return fp(-(1 + e) * c, 0, 0, 1 + e, 0, 0, 4 * e * e - 3, 0, 1 + 2 * e, -1,
                      1 - 2 * e, -2 * e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, QuadExt(-(1 - 2 * e))},
                    {u, o, QuadExt(1 - 2 * e)},
                    {u, QuadExt(e), QuadExt(-1)},
                    {u, QuadExt(2 * e), QuadExt(-(1 + 2 * e))}};
        },
        [](const Params&) -> Triples {
            return {{u, o, QuadExt(-1)}, {u, o, u}, {u, o, QuadExt(-1)}, {u, o, QuadExt(-1)}};
        });

    row(ConfigLabel::five(24), {},
        [](const Params&, const Rational& e) {
            return fp(1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, -e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{u, o, -I_}, {u, o, I_}, {o, QuadExt(e), QuadExt(-1)}, {o, QuadExt(e), u}};
        },
        [](const Params&) -> Triples {
            return {{u, o, -I_}, {u, o, I_}, {o, o, QuadExt(-1)}, {o, o, u}};
        });

    row(ConfigLabel::five(25), {},
        [](const Params&, const Rational& e) {
            return fp(-1, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            QuadExt t = QuadExt::sqrt_of(e - 1);  // i*sqrt(1-e)
            return {{u, o, -I_}, {u, o, I_}, {u, QuadExt(e), -t}, {u, QuadExt(e), t}};
        },
        [](const Params&) -> Triples {
            return {{u, o, -I_}, {u, o, I_}, {u, o, -I_}, {u, o, I_}};
        });

    row(ConfigLabel::five(26), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            return fp(g, 2 * g * e - 1, 0, -2 * e, 0, 0, 0, 0, 2 * g * e + 1, -1,
                      -6 * g * e * e, 3 * e * e * (1 + 2 * g * e - 3 * g * g * e * e));
        },
        [](const Params& m, const Rational& e) -> Triples {
            Rational g = gp(m);
            return {{u, o, QuadExt(-g)},
                    {QuadExt(3 * e), QuadExt(3 * e * e * (3 * g * e + 1)), u},
                    {QuadExt(2 * e), o, u},
                    {QuadExt(e), QuadExt(3 * e * e * (g * e - 1)), QuadExt(-1)}};
        },
        [](const Params& m) -> Triples {
            Rational g = gp(m);
            return {{u, o, QuadExt(-g)}, {o, o, u}, {o, o, u}, {o, o, QuadExt(-1)}};
        });

    row(ConfigLabel::five(27), {},
        [](const Params&, const Rational& e) {
            return fp(1, 1, 0, e, 0, 0, 0, 0, 1, -1, -2 * e, -2 * e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            auto [r1, r2] = solve_quadratic(e, Rational(1), Rational(1));
            auto [s1, s2] = solve_quadratic(e, Rational(-1), Rational(-1));
            return {{u, o, -r1}, {u, o, -r2}, {u, QuadExt(2 * e), -s1}, {u, QuadExt(2 * e), -s2}};
        },
        [](const Params&) -> Triples {
            return {{u, o, u}, {o, o, u}, {u, o, u}, {o, o, u}};
        });

    row(ConfigLabel::five(28), {},
        [](const Params&, const Rational& e) {
            Rational c = 1 - e;
            return fp((e - 1) * e * e, 2 * e * e * e, 0, c * (1 - 2 * e + 3 * e * e), 0, 0,
                      c, c, c * (2 * e * e + 2 * e), 0, c * 2 * e * e, c * 4 * e * e * e);
        },
        [](const Params&, const Rational& e) -> Triples {
            return {{QuadExt(e - 1), o, QuadExt(-e)},
                    {o, QuadExt(2 * e * e), u},
                    {QuadExt(1 - 2 * e + 3 * e * e), o, QuadExt(-e * (1 - e))},
                    {QuadExt((e - 1) * (e - 1)), QuadExt(-4 * e * e * e),
                     QuadExt(-e * (e + 1))}};
        },
        [](const Params&) -> Triples {
            return {{QuadExt(-1), o, o}, {o, o, u}, {u, o, o}, {u, o, o}};
        });

    row(ConfigLabel::five(29), {},
        [](const Params&, const Rational& e) {
            return fp(e * e, 0, 0, -1, 0, 0, 1, 0, 0, 0, -2, -e);
        },
        [](const Params&, const Rational& e) -> Triples {
            QuadExt m = QuadExt::sqrt_of(e * e + e);
            return {{u, o, QuadExt(-e)}, {u, o, QuadExt(e)}, {u, QuadExt(e), -m},
                    {u, QuadExt(e), m}};
        },
        [](const Params&) -> Triples {
            return {{u, o, o}, {u, o, o}, {u, o, o}, {u, o, o}};
        });

    row(ConfigLabel::five(30), {"g"},
        [](const Params& m, const Rational& e) {
            Rational g = gp(m);
            Rational e3 = e * e * e;
            return fp(1, e, 0, e3, 0, 0, g, 0, e, -1, -2 * e3, -2 * e3 * e3);
        },
        [](const Params& m, const Rational& e) -> Triples {
            Rational g = gp(m);
            Rational e3 = e * e * e;
            auto [r1, r2] = solve_quadratic(e3, e, Rational(1));
            auto [s1, s2] = solve_quadratic(e3, -e, -(1 + 2 * g * e3));
            return {{u, o, -r1}, {u, o, -r2}, {u, QuadExt(2 * e3), -s1},
                    {u, QuadExt(2 * e3), -s2}};
        },
        [](const Params&) -> Triples {
            return {{o, o, u}, {o, o, u}, {o, o, u}, {o, o, u}};
        });

    return rows;
}

} // namespace

const std::vector<PerturbationRow>& perturbation_rows() {
    static const std::vector<PerturbationRow> rows = build_perturbations();
    return rows;
}

} // namespace qsl
