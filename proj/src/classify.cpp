#include "qsl/classify.hpp"

#include <algorithm>

#include "qsl/upoly.hpp"

namespace qsl {

ConfigLabel ConfigLabel::six(int k) {
    if (k < 1 || k > 11) throw Error("bad six-line configuration index");
    return ConfigLabel(600 + k);
}

ConfigLabel ConfigLabel::five(int k) {
    if (k < 1 || k > 30) throw Error("bad five-line configuration index");
    return ConfigLabel(500 + k);
}

std::string ConfigLabel::str() const {
    if (code_ == 0) return "NotInClass";
    if (code_ == -1) return "Degenerate";
    return (is_six() ? "Config6." : "Config5.") + std::to_string(index());
}

std::optional<ConfigLabel> ConfigLabel::parse(const std::string& s) {
    if (s == "NotInClass") return not_in_class();
    if (s == "Degenerate") return degenerate();
    for (int k = 1; k <= 11; ++k)
        if (s == "Config6." + std::to_string(k)) return six(k);
    for (int k = 1; k <= 30; ++k)
        if (s == "Config5." + std::to_string(k)) return five(k);
    return std::nullopt;
}

std::string Condition::text() const {
    switch (pred) {
        case Pred::EQ0: return comitant + "=0";
        case Pred::NE0: return comitant + "!=0";
        case Pred::GT0: return comitant + ">0";
        default: return comitant + "<0";
    }
}

namespace {

std::string short_value(const MPoly& v) {
    std::string s = v.str();
    if (s.size() > 48) s = s.substr(0, 45) + "...";
    return s;
}

bool eval_condition(ComitantCache& cache, const Condition& c, EvidenceItem& item) {
    const MPoly& v = cache.get(c.comitant);
    item.condition = c.text();
    switch (c.pred) {
        case Pred::EQ0:
            item.value = short_value(v);
            return v.is_zero();
        case Pred::NE0:
            item.value = short_value(v);
            return !v.is_zero();
        case Pred::GT0:
        case Pred::LT0: {
            SignVerdict sv = form_sign(v, cache.sys().xv, cache.sys().yv);
            item.value = sign_str(sv);
            if (sv == SignVerdict::Indefinite)
                throw Error("comitant " + c.comitant +
                            " has no well-determined sign where the tables consume one");
            if (c.pred == Pred::GT0) return sv == SignVerdict::Positive;
            return sv == SignVerdict::Negative;
        }
    }
    return false;
}

} // namespace

std::pair<ConfigLabel, EvidenceTrace> classify(const QuadraticSystem& s) {
    Validity v = validate(s);
    if (v == Validity::Degenerate) return {ConfigLabel::degenerate(), {}};
    if (v == Validity::NotQuadratic) throw Error("not a quadratic system");
    ComitantCache cache(s);
    if (cache.get("C2").is_zero())
        throw Error("line at infinity degenerate (C2 = 0), out of classification scope");

    std::vector<ConfigLabel> matches;
    EvidenceTrace matched_trace;
    for (auto& row : table_rows()) {
        EvidenceTrace trace;
        bool all = true;
        for (auto& cond : row.conditions) {
            EvidenceItem item;
            bool verdict = eval_condition(cache, cond, item);
            item.verdict = verdict;
            trace.items.push_back(item);
            if (!verdict) {
                all = false;
                break;  // sign conditions are only evaluated on their variety
            }
        }
        if (all) {
            matches.push_back(row.label);
            matched_trace = trace;
        }
    }
    if (matches.size() > 1) {
        std::string list;
        for (auto& m : matches) list += " " + m.str();
        throw Error("tables not mutually exclusive:" + list);
    }
    if (matches.empty()) {
        EvidenceTrace trace;
        for (const char* n : {"eta", "M", "B2", "B3", "N", "theta"}) {
            EvidenceItem item{std::string(n), short_value(cache.get(n)),
                              cache.get(n).is_zero()};
            trace.items.push_back(item);
        }
        return {ConfigLabel::not_in_class(), trace};
    }
    return {matches[0], matched_trace};
}

std::string family_str(CanonicalFamily f) {
    switch (f) {
        case CanonicalFamily::S_I: return "S_I";
        case CanonicalFamily::S_II: return "S_II";
        case CanonicalFamily::S_III: return "S_III";
        case CanonicalFamily::S_IV: return "S_IV";
        default: return "S_V";
    }
}

namespace {

// C2 as a univariate in x at y=1 plus its y-power
std::pair<URat, int> c2_split(const MPoly& C2) {
    int d = C2.degree_in(0, 1);
    std::vector<Rational> cs(d + 1, Rational(0));
    for (auto& [e, c] : C2.terms()) cs[e[0]] += c;
    URat u{cs};
    return {u, d - u.degree()};
}

} // namespace

CanonicalForm canonical_form(const QuadraticSystem& s) {
    if (validate(s) != Validity::Ok) throw Error("canonical_form requires a valid system");
    ComitantCache cache(s);
    const MPoly& C2 = cache.get("C2");
    if (C2.is_zero()) return {CanonicalFamily::S_V, AffineTransform::identity(), "C2 = 0"};

    const MPoly& eta = cache.get("eta");
    const MPoly& M = cache.get("M");
    int eta_sign = eta.is_zero() ? 0 : sgn(eta.constant_value());
    CanonicalFamily fam = eta_sign > 0   ? CanonicalFamily::S_I
                          : eta_sign < 0 ? CanonicalFamily::S_II
                          : !M.is_zero() ? CanonicalFamily::S_III
                                         : CanonicalFamily::S_IV;

    // linear forms dividing C2, as rational root data
    auto [u, ypow] = c2_split(C2);
    UFactors f = factor_rational(u);
    if (!f.residue.empty())
        throw Error("canonicalization needs irrational transform; classification proceeds without it");

    // linear factors of C2 as rational (u,v) rows: root r of u(t) gives the
    // factor (x - r y); a y-power gives the factor y
    std::vector<std::pair<Rational, Rational>> lin;  // coefficients (on x, on y)
    std::vector<int> mult;
    for (auto& [r, m] : f.roots) {
        lin.push_back({Rational(1), -r});
        mult.push_back(m);
    }
    if (ypow > 0) {
        lin.push_back({Rational(0), Rational(1)});
        mult.push_back(ypow);
    }

    auto make_linear = [&](Rational t11, Rational t12, Rational t21,
                            Rational t22) -> AffineTransform {
        // new coordinates are (t11 x + t12 y, t21 x + t22 y); the stored
        // transform substitutes via the inverse matrix
        Rational det = t11 * t22 - t12 * t21;
        return AffineTransform(t22 / det, -t12 / det, -t21 / det, t11 / det);
    };

    switch (fam) {
        case CanonicalFamily::S_I: {
            if (lin.size() != 3)
                throw Error("canonicalization needs irrational transform; classification proceeds without it");
            // write l3 = a l1 + b l2, send (a l1, -b l2) -> (x~, y~)
            auto [u1, v1_] = lin[0];
            auto [u2, v2_] = lin[1];
            auto [u3, v3_] = lin[2];
            Rational det = u1 * v2_ - v1_ * u2;
            Rational a = (u3 * v2_ - v3_ * u2) / det;
            Rational b = (u1 * v3_ - v1_ * u3) / det;
            return {fam, make_linear(a * u1, a * v1_, -b * u2, -b * v2_), ""};
        }
        case CanonicalFamily::S_II: {
            if (f.quadratics.size() != 1 || lin.size() != 1)
                throw Error("canonical_form: unexpected S_II factor pattern");
            // real factor -> combination of the definite pair coordinates
            const URat& q = f.quadratics[0].first;  // t^2 + q1 t + q0 in t=x/y
            // q(x,y) = x^2 + q1 x y + q0 y^2 = U^2 + c V^2, U = x + q1/2 y,
            // V = y, c = q0 - q1^2/4; need c a rational square
            Rational c = q[0] - q[1] * q[1] / 4;
            QuadExt sc = QuadExt::sqrt_of(c);
            if (!sc.is_rational())
                throw Error("canonicalization needs irrational transform; classification proceeds without it");
            Rational t = sc.rational_value();  // q = U^2 + (tV)^2
            // real factor in (U, W=tV) coordinates: alpha U + beta W
            auto [ru, rv] = lin[0];
            // x = U - (q1/2) V, y = V; real factor ru x + rv y =
            // ru U + (rv - ru q1/2) V = ru U + ((rv - ru q1/2)/t) W
            Rational alpha = ru, beta = (rv - ru * q[1] / 2) / t;
            // rotate (U,W) so the real factor becomes x~ and U^2+W^2 is kept
            // x~ = alpha U + beta W, y~ = beta U - alpha W; compose with the
            // (x,y) -> (U,W) change U = x + q1/2 y, W = t y
            Rational t11 = alpha, t12 = alpha * q[1] / 2 + beta * t;
            Rational t21 = beta, t22 = beta * q[1] / 2 - alpha * t;
            return {fam, make_linear(t11, t12, t21, t22), ""};
        }
        case CanonicalFamily::S_III: {
            if (lin.size() != 2)
                throw Error("canonical_form: unexpected S_III factor pattern");
            int dbl = mult[0] == 2 ? 0 : 1;
            int smp = 1 - dbl;
            // C2 = c l_dbl^2 l_smp; send (l_dbl, c l_smp) -> (x~, y~)
            Rational c = u.is_zero() ? Rational(1) : u.lc();
            if (ypow == 3 || (ypow > 0 && mult[lin.size() - 1] == 3))
                throw Error("canonical_form: triple root in S_III branch");
            return {fam, make_linear(lin[dbl].first, lin[dbl].second,
                                     c * lin[smp].first, c * lin[smp].second),
                    ""};
        }
        case CanonicalFamily::S_IV: {
            if (lin.size() != 1 || mult[0] != 3)
                throw Error("canonical_form: unexpected S_IV factor pattern");
            // C2 = c l^3, send l -> x~ with any complement
            auto [ru, rv] = lin[0];
            Rational t21 = rv == 0 ? Rational(0) : Rational(1);
            Rational t22 = rv == 0 ? Rational(1) : Rational(0);
            return {fam, make_linear(ru, rv, t21, t22),
                    "canonical cubic reached up to the leading constant"};
        }
        default: break;
    }
    return {fam, std::nullopt, ""};
}

ConsistencyReport consistency_check(const QuadraticSystem& s, const ConfigLabel& label,
                                    const LineConfiguration& cfg) {
    ConsistencyReport rep;
    if (!label.is_config()) {
        rep.detail = "no consistency contract for " + label.str();
        return rep;
    }
    rep.expected_gcd = label.is_six() ? 5 : 4;
    rep.expected_m_il = label.is_six() ? 6 : 5;
    rep.actual_gcd = cfg.gcd_degree;
    rep.actual_m_il = cfg.M_IL;
    rep.gcd_degree_ok = rep.actual_gcd == rep.expected_gcd;
    rep.m_il_ok = rep.actual_m_il == rep.expected_m_il;
    if (!rep.gcd_degree_ok)
        rep.detail += "deg gcd(E1,E2) = " + std::to_string(rep.actual_gcd) + ", expected " +
                      std::to_string(rep.expected_gcd) + "; ";
    if (!rep.m_il_ok)
        rep.detail += "M_IL = " + std::to_string(rep.actual_m_il) + ", expected " +
                      std::to_string(rep.expected_m_il) + "; ";
    (void)s;
    return rep;
}

} // namespace qsl
