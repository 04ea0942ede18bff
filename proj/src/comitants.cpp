#include "qsl/comitants.hpp"

#include <random>

#include "qsl/upoly.hpp"

namespace qsl {

std::string sign_str(SignVerdict v) {
    switch (v) {
        case SignVerdict::Positive: return "positive";
        case SignVerdict::Negative: return "negative";
        case SignVerdict::Zero: return "zero";
        default: return "indefinite";
    }
}

namespace {

const std::map<std::string, ComitantMeta>& registry() {
    static const std::map<std::string, ComitantMeta> table = {
        {"C0", {1, 1, -1, "always", false}},
        {"C1", {1, 2, -1, "always", false}},
        {"C2", {1, 3, -1, "always", true}},
        {"D1", {1, 0, 0, "V(M,N)", true}},
        {"D2", {1, 1, 0, "always", false}},
        {"eta", {4, 0, 2, "always", true}},
        {"mu", {4, 0, 2, "always", true}},
        {"theta", {4, 0, 2, "always", true}},
        {"H", {2, 2, 0, "always", true}},
        {"K", {2, 2, 0, "always", true}},
        {"M", {2, 2, 0, "always", true}},
        {"N", {2, 2, 0, "always", true}},
        {"D", {3, 3, -1, "always", true}},
        {"B1", {12, 0, 3, "always", true}},
        {"B2", {8, 4, 0, "always", true}},
        {"B3", {4, 4, -1, "always", true}},
        {"H1", {6, 0, 2, "always", true}},
        {"H2", {3, 2, 0, "always", true}},
        {"H3", {4, 2, 0, "always", true}},
        {"H4", {6, 0, 2, "always", true}},
        {"H5", {8, 0, 2, "always", true}},
        {"H6", {8, 6, 0, "always", true}},
        {"N1", {3, 4, -1, "V(eta,H)", true}},
        {"N2", {3, 1, 0, "V(eta,H,B3)", true}},
        {"N3", {2, 3, -1, "V(M,N)", true}},
        {"N4", {2, 2, -1, "V(M,N,N3)", true}},
        {"N5", {4, 2, 0, "V(eta,H,B3)", true}},
        {"N6", {3, 3, -1, "V(M,theta,B3)", true}},
    };
    return table;
}

// per-name rational factor fixed once so the classical families reproduce
// the published values; vanishing and sign conditions do not depend on it
Rational calibration(const std::string& name) {
    if (name == "mu") return Rational(2);
    return Rational(1);
}

MPoly binary_disc_or_zero(const SysPair& sp, const MPoly& f) {
    if (f.is_zero()) return MPoly::zero(f.ring());
    return discriminant_binary(f, sp.xv, sp.yv);
}

} // namespace

const std::vector<std::string>& comitant_names() {
    static const std::vector<std::string> names = {
        "C0", "C1", "C2", "D1", "D2", "eta", "M",  "K",  "mu", "N",
        "theta", "H", "D",  "B1", "B2", "B3", "H1", "H2", "H3", "H4",
        "H5", "H6", "N1", "N2", "N3", "N4", "N5", "N6"};
    return names;
}

const ComitantMeta& comitant_meta(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown comitant '" + name + "'");
    return it->second;
}

MPoly base_C(const SysPair& sp, int i) {
    MPoly x = MPoly::var(sp.ring(), sp.ring()->name(sp.xv));
    MPoly y = MPoly::var(sp.ring(), sp.ring()->name(sp.yv));
    return y * sp.p_part(i) - x * sp.q_part(i);
}

MPoly base_D(const SysPair& sp, int i) {
    return sp.p_part(i).derivative(sp.xv) + sp.q_part(i).derivative(sp.yv);
}

void dh_comitants(const SysPair& sp, MPoly& D, MPoly& H) {
    RingPtr R = sp.ring();
    MPoly x = MPoly::var(R, R->name(sp.xv));
    MPoly y = MPoly::var(R, R->name(sp.yv));
    Rational half(1, 2);

    // symmetric matrix of the quadratic form alpha*P + beta*Q in X,Y,Z
    auto cmat = [&](const MPoly& alpha, const MPoly& beta) {
        std::array<std::array<MPoly, 3>, 3> c;
        auto entry = [&](int i, int j) {
            return alpha * sp.coeff_xy(sp.p, i, j) + beta * sp.coeff_xy(sp.q, i, j);
        };
        c[0][0] = entry(2, 0);
        c[1][1] = entry(0, 2);
        c[2][2] = entry(0, 0);
        c[0][1] = entry(1, 1) * half;
        c[0][2] = entry(1, 0) * half;
        c[1][2] = entry(0, 1) * half;
        c[1][0] = c[0][1];
        c[2][0] = c[0][2];
        c[2][1] = c[1][2];
        return c;
    };

    // D from the full 3x3 determinant at (alpha,beta) = (y,-x); this is the
    // sign the geometric identities downstream actually satisfy
    {
        auto c = cmat(y, -x);
        MPoly det = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[1][2]) -
                    c[0][1] * (c[0][1] * c[2][2] - c[1][2] * c[0][2]) +
                    c[0][2] * (c[0][1] * c[1][2] - c[1][1] * c[0][2]);
        D = 4 * Rational(1) * det;
    }
    // H from the upper-left 2x2 minor at (alpha,beta) = (-y,x)
    {
        auto c = cmat(-y, x);
        H = 4 * Rational(1) * (c[0][0] * c[1][1] - c[0][1] * c[0][1]);
    }
}

MPoly named_comitant_value(const SysPair& sp, const std::string& name) {
    int xv = sp.xv, yv = sp.yv;
    auto tr = [&](const MPoly& f, const MPoly& g, int k) {
        return transvectant(f, g, k, xv, yv);
    };

    if (name == "C0") return base_C(sp, 0);
    if (name == "C1") return base_C(sp, 1);
    if (name == "C2") return base_C(sp, 2);
    if (name == "D1") return base_D(sp, 1);
    if (name == "D2") return base_D(sp, 2);

    MPoly C2 = base_C(sp, 2);
    if (name == "eta") return binary_disc_or_zero(sp, C2);
    if (name == "M") return tr(C2, C2, 2);
    if (name == "K") return tr(sp.p_part(2), sp.q_part(2), 1);
    if (name == "mu") return calibration("mu") * binary_disc_or_zero(sp, tr(sp.p_part(2), sp.q_part(2), 1));

    MPoly D, H;
    dh_comitants(sp, D, H);
    if (name == "D") return D;
    if (name == "H") return H;

    MPoly K = tr(sp.p_part(2), sp.q_part(2), 1);
    MPoly N = K + H;
    if (name == "N") return N;
    if (name == "theta") return binary_disc_or_zero(sp, N);

    if (name == "B3") return tr(C2, D, 1);
    if (name == "B2") {
        MPoly B3 = tr(C2, D, 1);
        return tr(B3, B3, 2) - 6 * Rational(1) * B3 * tr(C2, D, 3);
    }
    if (name == "B1") {
        MPoly B3 = tr(C2, D, 1);
        MPoly B2 = tr(B3, B3, 2) - 6 * Rational(1) * B3 * tr(C2, D, 3);
        return rat(-1, 1) * rat(1, 512 * 6561) * tr(B2, B3, 4);
    }

    if (name == "H1") return -tr(tr(tr(C2, C2, 2), C2, 1), D, 3);

    MPoly C0 = base_C(sp, 0), C1 = base_C(sp, 1);
    MPoly D1 = base_D(sp, 1), D2 = base_D(sp, 2);
    if (name == "H2") return tr(C1, 2 * Rational(1) * H - N, 1) - 2 * Rational(1) * D1 * N;
    if (name == "H3") return tr(C2, D, 2);
    if (name == "H4") return tr(tr(C2, D, 2), tr(C2, D2, 1), 2);
    if (name == "H5")
        return tr(tr(C2, C2, 2), tr(D, D, 2), 2) +
               8 * Rational(1) * tr(tr(C2, D, 2), tr(D, D2, 1), 2);
    if (name == "H6") {
        MPoly H2 = tr(C1, 2 * Rational(1) * H - N, 1) - 2 * Rational(1) * D1 * N;
        return 16 * Rational(1) * N * N * tr(C2, D, 2) + H2 * H2 * tr(C2, C2, 2);
    }
    if (name == "N1") return C1 * tr(C2, C2, 2) - 2 * Rational(1) * C2 * tr(C1, C2, 2);
    if (name == "N2") return D1 * tr(C1, C2, 2) - tr(tr(C2, C2, 2), C0, 1);
    if (name == "N3") return tr(C2, C1, 1);
    if (name == "N4") return 4 * Rational(1) * tr(C2, C0, 1) - 3 * Rational(1) * C1 * D1;
    if (name == "N5") {
        MPoly t = tr(D2, C1, 1) + D1 * D2;
        return t * t - 4 * Rational(1) * tr(C2, C2, 2) * tr(C0, D2, 1);
    }
    if (name == "N6")
        return 8 * Rational(1) * D +
               C2 * (8 * Rational(1) * tr(C0, D2, 1) - 3 * Rational(1) * tr(C1, C1, 2) +
                     2 * Rational(1) * D1 * D1);

    throw Error("unknown comitant '" + name + "'");
}

ComitantValue named_comitant(const QuadraticSystem& s, const std::string& name) {
    if (validate(s) != Validity::Ok) throw Error("named_comitant requires a valid system");
    const ComitantMeta& m = comitant_meta(name);
    return {name, named_comitant_value(to_pair(s), name), m.deg_a, m.deg_xy, m.weight,
            m.validity};
}

SignVerdict form_sign(const MPoly& value, int xv, int yv) {
    if (value.is_zero()) return SignVerdict::Zero;
    int d = value.degree_in(xv, yv);
    if (d == 0) {
        // constant in (x,y); may still carry parameters
        if (!value.is_constant()) throw Error("form_sign: value has free parameters");
        return sgn(value.constant_value()) > 0 ? SignVerdict::Positive : SignVerdict::Negative;
    }
    if (!value.is_homogeneous_in({xv, yv})) throw Error("form_sign: not a binary form");
    if (d % 2 == 1) throw Error("sign undefined for odd form");

    // a sign change happens exactly at a real linear factor of odd
    // multiplicity; u[i] is the coefficient of x^i y^(d-i)
    std::vector<Rational> u(d + 1, Rational(0));
    for (auto& [e, c] : value.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if ((int)i != xv && (int)i != yv && e[i] != 0)
                throw Error("form_sign: value has free parameters");
        u[e[xv]] += c;
    }
    // strip monomial factors x^a y^b: u[i] is the coefficient of x^i y^(d-i)
    int lo = 0;
    while (lo < (int)u.size() && u[lo] == 0) ++lo;
    int hi = (int)u.size() - 1;
    while (hi >= 0 && u[hi] == 0) --hi;
    int xmult = lo, ymult = d - hi;
    if (xmult % 2 == 1 || ymult % 2 == 1) return SignVerdict::Indefinite;
    std::vector<Rational> w(u.begin() + lo, u.begin() + hi + 1);
    URat f{w};
    if (f.degree() > 0) {
        for (auto& [part, mult] : squarefree_decomposition(f)) {
            if (mult % 2 == 0) continue;
            if (sturm_count_all(part) > 0) return SignVerdict::Indefinite;
        }
    }
    // semidefinite: sign from any nonzero sample of the stripped part
    for (long k = 0;; ++k) {
        Rational v = f.eval(Rational(k));
        if (v != 0) return sgn(v) > 0 ? SignVerdict::Positive : SignVerdict::Negative;
    }
}

SignVerdict form_sign(const ComitantValue& c) {
    int xv = c.value.ring()->index("x"), yv = c.value.ring()->index("y");
    return form_sign(c.value, xv < 0 ? 0 : xv, yv < 0 ? 1 : yv);
}

MetadataReport metadata_check(const QuadraticSystem& s, const std::string& name,
                              unsigned seed) {
    MetadataReport rep;
    const ComitantMeta& meta = comitant_meta(name);
    MPoly val = named_comitant_value(to_pair(s), name);

    // degree in the coefficients: a -> t*a must scale by t^deg_a
    rep.deg_a_ok = true;
    for (long t : {2L, 3L}) {
        auto tup = s.tuple();
        for (auto& c : tup) c *= t;
        QuadraticSystem st = QuadraticSystem::from_tuple(tup);
        MPoly scaled = named_comitant_value(to_pair(st), name);
        Rational factor = 1;
        for (int i = 0; i < meta.deg_a; ++i) factor *= t;
        if (scaled != val * factor) {
            rep.deg_a_ok = false;
            rep.detail += "coefficient-degree scaling failed at t=" + std::to_string(t) + "; ";
        }
    }

    // degree in x,y (of the nonzero value)
    SysPair sp = to_pair(s);
    rep.deg_xy_ok = val.is_zero() || val.degree_in(sp.xv, sp.yv) == meta.deg_xy;
    if (!rep.deg_xy_ok) rep.detail += "xy-degree mismatch; ";

    // weight law under random linear maps
    std::mt19937 rng(seed);
    auto rnd = [&]() { return Rational((long)(rng() % 7) - 3); };
    rep.weight_ok = true;
    for (int trial = 0; trial < 3; ++trial) {
        Rational m11, m12, m21, m22;
        do {
            m11 = rnd(); m12 = rnd(); m21 = rnd(); m22 = rnd();
        } while (m11 * m22 - m12 * m21 == 0);
        AffineTransform g = AffineTransform::linear(m11, m12, m21, m22);
        QuadraticSystem st = apply_affine(s, g);
        MPoly transformed = named_comitant_value(to_pair(st), name);
        // substitute (x,y) -> M(x,y)
        RingPtr R = xy_ring();
        MPoly x = MPoly::var(R, "x"), y = MPoly::var(R, "y");
        MPoly lhs = transformed.map_vars(R, {m11 * x + m12 * y, m21 * x + m22 * y});
        Rational det = g.det();
        Rational factor = 1;
        int w = meta.weight;
        for (int i = 0; i < std::abs(w); ++i) factor *= det;
        MPoly rhs = w <= 0 ? val * factor : val / factor;
        if (lhs != rhs) {
            rep.weight_ok = false;
            rep.detail += "weight law failed; ";
            break;
        }
    }
    return rep;
}

const MPoly& ComitantCache::get(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(name, named_comitant_value(sp_, name)).first->second;
}

} // namespace qsl
