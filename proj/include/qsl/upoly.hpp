#ifndef QSL_UPOLY_HPP
#define QSL_UPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qsl/interval.hpp"
#include "qsl/quadext.hpp"
#include "qsl/rational.hpp"

namespace qsl {

// Dense univariate polynomial over a field K (Rational or QuadExt).
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }
    const K& operator[](int i) const { return c_[i]; }
    const K& lc() const { return c_.back(); }

    K eval(const K& x) const {
        K r{};
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    UPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& k : c_) r.push_back(-k);
        return UPoly(std::move(r));
    }
    UPoly operator+(const UPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K{});
        for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UPoly(std::move(r));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K{});
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return UPoly(std::move(r));
    }
    UPoly operator*(const K& k) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& ci : c_) r.push_back(ci * k);
        return UPoly(std::move(r));
    }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const {
        if (degree() < 1) return UPoly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(Rational((long)i));
        return UPoly(std::move(r));
    }

    // Euclidean division; returns {quotient, remainder}.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw Error("univariate division by zero");
        UPoly r = *this;
        std::vector<K> q(std::max(0, degree() - d.degree() + 1), K{});
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.lc() / d.lc();
            int k = r.degree() - d.degree();
            q[k] = q[k] + f;
            std::vector<K> sub(k + d.c_.size(), K{});
            for (size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = d.c_[i] * f;
            r = r - UPoly(std::move(sub));
        }
        return {UPoly(std::move(q)), r};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (K(Rational(1)) / lc());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K{}) c_.pop_back();
    }
    std::vector<K> c_;
};

using URat = UPoly<Rational>;
using UExt = UPoly<QuadExt>;

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

// --- real-root machinery over Q (and over real quadratic extensions) ------

// number of distinct real roots in (lo, hi]
int sturm_count(const URat& f, const Rational& lo, const Rational& hi);
int sturm_count_all(const URat& f);  // on all of R

// Isolating intervals for the distinct real roots of f (any f != 0),
// in increasing order. Intervals have rational endpoints that are not roots,
// except that an exact root may be returned as a point interval.
std::vector<QIv> isolate_real_roots(const URat& f);

// Refine an isolating interval of f below `width`.
QIv refine_root(const URat& f, QIv iv, const Rational& width);

// (root, multiplicity) for every rational root, exact.
std::vector<std::pair<Rational, int>> rational_roots(const URat& f);

// Squarefree decomposition f = prod parts[i].first ^ parts[i].second (Yun).
std::vector<std::pair<URat, int>> squarefree_decomposition(const URat& f);

// Roots of a*t^2 + b*t + c over Q or a quadratic extension.
std::pair<QuadExt, QuadExt> solve_quadratic(const Rational& a, const Rational& b,
                                            const Rational& c);
// Roots over K(sqrt(disc)): nullopt when the discriminant is not a square in
// the coefficients' field (would need a nested extension).
std::optional<std::pair<QuadExt, QuadExt>> solve_quadratic_ext(const QuadExt& a,
                                                               const QuadExt& b,
                                                               const QuadExt& c);

// Factorization over Q into irreducibles of degree <= 2 plus a residue
// collecting irreducible factors of degree >= 3. Handles degree <= 5 fully
// (rational roots, quartic resolvent, quintic quadratic-factor search);
// beyond that only rational roots are split off.
struct UFactors {
    Rational unit;                                  // leading constant
    std::vector<std::pair<Rational, int>> roots;    // linear factors (t - r)^m
    std::vector<std::pair<URat, int>> quadratics;   // monic irreducible
    std::vector<std::pair<URat, int>> residue;      // monic, degree >= 3
};
UFactors factor_rational(const URat& f);

// Roots of f that lie in Q(sqrt(d)) (d squarefree; d=0 means Q itself),
// with multiplicities.
std::vector<std::pair<QuadExt, int>> roots_in_extension(const URat& f, const Int& d);

// real roots of a polynomial with real quadratic-extension coefficients,
// as (isolating interval, multiplicity); exact sign arithmetic throughout
std::vector<std::pair<QIv, int>> real_roots_ext(const UExt& f);

// Evaluate with interval coefficient enclosures.
CBox eval_box(const std::vector<CBox>& coeffs, const CBox& x);

// All complex roots of f (rational coefficients, any degree >= 1) as boxes of
// width below 2^-prec, real roots flagged. Used only on the numeric fallback
// path for cubic and higher extensions.
struct NumRoot {
    CBox box;
    bool real;
    int multiplicity;
};
std::vector<NumRoot> numeric_roots(const URat& f, int prec);

} // namespace qsl

#endif
