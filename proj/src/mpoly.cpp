#include "qsl/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsl {

Int squarefree_part(const Int& n, Int& square) {
    square = 1;
    if (n == 0) return 0;
    Int m = abs(n);
    Int sf = 1;
    // strip small prime squares
    for (Int p = 2; p * p * p * p <= m || p <= 100000; ++p) {
        if (p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            for (int i = 0; i + 1 < e; i += 2) square *= p;
            if (e % 2 == 1) sf *= p;
        }
    }
    // leftover cofactor: either 1, prime, prime^2, or a semiprime with
    // large factors; a perfect-square check covers the p^2 case
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        square *= r;
    } else {
        sf *= m;
    }
    if (n < 0) sf = -sf;
    return sf;
}

bool GrlexLess::operator()(const Exp& a, const Exp& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

int Ring::index(const std::string& v) const {
    for (int i = 0; i < (int)vars_.size(); ++i)
        if (vars_[i] == v) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<Ring>(std::move(names));
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
    MPoly f(std::move(ring));
    if (c != 0) f.terms_.emplace(Exp(f.ring_->nvars(), 0), c);
    return f;
}

MPoly MPoly::var(RingPtr ring, const std::string& name, int exp) {
    int i = ring->index(name);
    if (i < 0) throw Error("unknown variable '" + name + "'");
    MPoly f(std::move(ring));
    Exp e(f.ring_->nvars(), 0);
    e[i] = exp;
    f.terms_.emplace(std::move(e), Rational(1));
    return f;
}

MPoly MPoly::monomial(RingPtr ring, Exp e, const Rational& c) {
    MPoly f(std::move(ring));
    if ((int)e.size() != f.ring_->nvars()) throw Error("bad exponent vector");
    if (c != 0) f.terms_.emplace(std::move(e), c);
    return f;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("not a constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exp& e = terms_.rbegin()->first;  // grlex max has max total degree
    return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree(int var) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MPoly::degree(const std::string& var) const {
    int i = ring_->index(var);
    if (i < 0) throw Error("unknown variable '" + var + "'");
    return degree(i);
}

const Exp& MPoly::leading_exp() const {
    if (terms_.empty()) throw Error("leading term of zero");
    return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero");
    return terms_.rbegin()->second;
}

Rational MPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_ring(const MPoly& o) const {
    if (ring_ == o.ring_) return;
    if (ring_ && o.ring_ && ring_->names() == o.ring_->names()) return;
    throw Error("ring mismatch");
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_ring(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_ring(o);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_ring(b);
    MPoly r(a.ring_);
    Exp e(a.ring_ ? a.ring_->nvars() : 0, 0);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r(ring_);
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MPoly operator*(const Rational& c, const MPoly& f) { return f * c; }

MPoly MPoly::operator/(const Rational& c) const {
    if (c == 0) throw Error("division by zero");
    Rational inv = 1 / c;
    return *this * inv;
}

bool MPoly::operator==(const MPoly& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) throw Error("negative power");
    MPoly r = constant(ring_, 1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

MPoly MPoly::derivative(const std::string& var) const {
    int i = ring_->index(var);
    if (i < 0) throw Error("unknown variable '" + var + "'");
    return derivative(i);
}

MPoly MPoly::eval_partial(const std::vector<std::pair<int, Rational>>& vals) const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) {
        Rational v = c;
        Exp d = e;
        for (auto& [i, x] : vals) {
            for (int k = 0; k < e[i]; ++k) v *= x;
            d[i] = 0;
        }
        r.add_term(d, v);
    }
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if ((int)point.size() != ring_->nvars()) throw Error("bad evaluation point");
    Rational r(0);
    for (auto& [e, c] : terms_) {
        Rational v = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        r += v;
    }
    return r;
}

MPoly MPoly::map_vars(const RingPtr& target, const std::vector<MPoly>& images) const {
    if ((int)images.size() != ring_->nvars()) throw Error("bad variable map");
    MPoly r = MPoly::zero(target);
    for (auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(target, c);
        for (size_t i = 0; i < images.size(); ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        r += t;
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = std::max(degree(var), 0);
    std::vector<MPoly> cs(d + 1, MPoly::zero(ring_));
    for (auto& [e, c] : terms_) {
        Exp r = e;
        int k = r[var];
        r[var] = 0;
        cs[k].add_term(r, c);
    }
    return cs;
}

MPoly MPoly::from_coeffs_in(RingPtr ring, int var, const std::vector<MPoly>& cs) {
    MPoly r = MPoly::zero(ring);
    for (int k = 0; k < (int)cs.size(); ++k) {
        for (auto& [e, c] : cs[k].terms()) {
            Exp d = e;
            d[var] += k;
            r.add_term(d, c);
        }
    }
    return r;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0L);
    for (auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0L) != d) return false;
    return true;
}

int MPoly::degree_in(int v1, int v2) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[v1] + e[v2]);
    return d;
}

bool MPoly::is_homogeneous_in(const std::vector<int>& vars) const {
    if (terms_.empty()) return true;
    long d = -1;
    for (auto& [e, c] : terms_) {
        long s = 0;
        for (int v : vars) s += e[v];
        if (d == -1) d = s;
        else if (s != d) return false;
    }
    return true;
}

Rational MPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c = rat(num_gcd, den_lcm);
    if (sgn(leading_coeff()) < 0) c = -c;
    return c;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return *this / content();
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        Rational a = abs(Rational(c));
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(it->first.begin(), it->first.end(), [](int e) { return e > 0; });
        bool coeff_shown = (a != 1) || !any_var;
        if (coeff_shown) os << to_string(a);
        bool need_star = coeff_shown;
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << ring_->name(i);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// division, gcd, resultants

std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw Error("division by zero polynomial");
    MPoly r = f;
    MPoly q(f.ring());
    int nv = f.ring()->nvars();
    while (!r.is_zero()) {
        const Exp& le = r.leading_exp();
        const Exp& ge = g.leading_exp();
        Exp d(nv);
        for (int i = 0; i < nv; ++i) {
            d[i] = le[i] - ge[i];
            if (d[i] < 0) return std::nullopt;
        }
        Rational c = r.leading_coeff() / g.leading_coeff();
        MPoly t = MPoly::monomial(f.ring(), d, c);
        q += t;
        r -= t * g;
    }
    return q;
}

namespace {

// pseudo-remainder of f by g with respect to var: lc(g)^(df-dg+1) f = q g + r
MPoly prem(const MPoly& f, const MPoly& g, int var) {
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    int df = (int)fc.size() - 1, dg = (int)gc.size() - 1;
    while (df >= 0 && fc[df].is_zero()) --df;
    while (dg >= 0 && gc[dg].is_zero()) --dg;
    if (dg < 0) throw Error("pseudo-division by zero");
    if (df < dg) return f;
    const MPoly& lg = gc[dg];
    std::vector<MPoly> r(fc.begin(), fc.begin() + df + 1);
    for (int k = df; k >= dg; --k) {
        MPoly lead = r[k];
        for (int i = 0; i <= k; ++i) r[i] = r[i] * lg;
        if (!lead.is_zero())
            for (int i = 0; i < dg; ++i) r[k - dg + i] -= lead * gc[i];
        r[k] = MPoly::zero(f.ring());
    }
    r.resize(std::max(dg, 1));
    return MPoly::from_coeffs_in(f.ring(), var, r);
}

int last_var_present(const MPoly& f, const MPoly& g) {
    int nv = f.ring()->nvars();
    for (int v = nv - 1; v >= 0; --v)
        if (f.degree(v) > 0 || g.degree(v) > 0) return v;
    return -1;
}

// content of f viewed as a univariate in var, i.e. gcd of its coefficients
MPoly content_in(const MPoly& f, int var) {
    auto cs = f.coeffs_in(var);
    MPoly c = MPoly::zero(f.ring());
    for (auto& ci : cs) {
        if (ci.is_zero()) continue;
        c = c.is_zero() ? ci : gcd(c, ci);
        if (c.is_constant()) break;
    }
    return c;
}

} // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    int v = last_var_present(f, g);
    if (v < 0) return MPoly::constant(f.ring(), 1);

    if (f.degree(v) == 0 || g.degree(v) == 0) {
        // one side is free of v: gcd divides the other's coefficients
        const MPoly& free_side = f.degree(v) == 0 ? f : g;
        const MPoly& other = f.degree(v) == 0 ? g : f;
        return gcd(free_side, content_in(other, v)).normalized();
    }

    MPoly cf = content_in(f, v), cg = content_in(g, v);
    MPoly c = gcd(cf, cg);
    MPoly a = *exact_div(f, cf);
    MPoly b = *exact_div(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);

    // primitive PRS
    while (true) {
        MPoly r = prem(a, b, v);
        if (r.is_zero()) break;
        MPoly rc = content_in(r, v);
        r = *exact_div(r, rc);
        a = b;
        b = r.normalized();
        if (b.degree(v) == 0) break;
    }
    MPoly result = b.degree(v) == 0 ? c : (c * b).normalized();
    return result.normalized();
}

MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const RingPtr& ring) {
    int n = (int)m.size();
    if (n == 0) return MPoly::constant(ring, 1);
    int sign = 1;
    MPoly prev = MPoly::constant(ring, 1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return MPoly::zero(ring);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_div(num, prev);
                if (!q) throw Error("bareiss: non-exact division");
                m[i][j] = *q;
            }
        for (int i = k + 1; i < n; ++i) m[i][k] = MPoly::zero(ring);
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly resultant_formal(const MPoly& f, const MPoly& g, int var, int degf, int degg) {
    if (degf <= 0 || degg <= 0)
        throw Error("resultant undefined for constant operand");
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    fc.resize(degf + 1, MPoly::zero(f.ring()));
    gc.resize(degg + 1, MPoly::zero(f.ring()));
    int n = degf + degg;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly::zero(f.ring())));
    // f-rows first, top-left = leading coefficient of f
    for (int i = 0; i < degg; ++i)
        for (int j = 0; j <= degf; ++j) m[i][i + j] = fc[degf - j];
    for (int i = 0; i < degf; ++i)
        for (int j = 0; j <= degg; ++j) m[degg + i][i + j] = gc[degg - j];
    return bareiss_det(std::move(m), f.ring());
}

MPoly resultant(const MPoly& f, const MPoly& g, int var) {
    int df = f.degree(var), dg = g.degree(var);
    if (df <= 0 || dg <= 0)
        throw Error("resultant undefined for constant operand");
    return resultant_formal(f, g, var, df, dg);
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
    int i = f.ring()->index(var);
    if (i < 0) throw Error("unknown variable '" + var + "'");
    return resultant(f, g, i);
}

MPoly transvectant(const MPoly& f, const MPoly& g, int k, int xvar, int yvar) {
    if (k < 0) throw Error("negative transvectant index");
    // d^k f / dx^(k-h) dy^h for h = 0..k
    std::vector<MPoly> df(k + 1), dg(k + 1);
    {
        MPoly cur = f;
        for (int i = 0; i < k; ++i) cur = cur.derivative(xvar);
        df[0] = cur;
        for (int h = 1; h <= k; ++h) {
            cur = f;
            for (int i = 0; i < k - h; ++i) cur = cur.derivative(xvar);
            for (int i = 0; i < h; ++i) cur = cur.derivative(yvar);
            df[h] = cur;
        }
        for (int h = 0; h <= k; ++h) {
            cur = g;
            for (int i = 0; i < h; ++i) cur = cur.derivative(xvar);
            for (int i = 0; i < k - h; ++i) cur = cur.derivative(yvar);
            dg[h] = cur;
        }
    }
    MPoly r = MPoly::zero(f.ring());
    Rational binom(1);
    for (int h = 0; h <= k; ++h) {
        MPoly term = df[h] * dg[h] * binom;
        if (h % 2 == 1) term = -term;
        r += term;
        binom = binom * (k - h) / (h + 1);
    }
    return r;
}

MPoly discriminant_binary(const MPoly& f, int xvar, int yvar) {
    if (!f.is_homogeneous_in({xvar, yvar}) && !f.is_zero())
        throw Error("discriminant: not a binary form");
    int d = f.degree_in(xvar, yvar);
    auto coeff_of = [&](int i) {
        // coefficient of x^i y^(d-i), a polynomial in the other variables
        MPoly c = MPoly::zero(f.ring());
        for (auto& [e, v] : f.terms()) {
            if (e[xvar] == i && e[yvar] == d - i) {
                Exp r = e;
                r[xvar] = 0;
                r[yvar] = 0;
                c.add_term(r, v);
            }
        }
        return c;
    };
    if (d == 2) {
        MPoly A = coeff_of(2), B = coeff_of(1), C = coeff_of(0);
        return B * B - 4 * Rational(1) * A * C;
    }
    if (d == 3) {
        MPoly a = coeff_of(3), b = coeff_of(2), c = coeff_of(1), e = coeff_of(0);
        return 18 * Rational(1) * a * b * c * e - 4 * Rational(1) * b.pow(3) * e +
               b * b * c * c - 4 * Rational(1) * a * c.pow(3) -
               27 * Rational(1) * a * a * e * e;
    }
    throw Error("discriminant: binary form must have degree 2 or 3");
}

} // namespace qsl
