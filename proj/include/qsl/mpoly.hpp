#ifndef QSL_MPOLY_HPP
#define QSL_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsl/rational.hpp"

namespace qsl {

// Exponent vector; length always equals the number of ring variables.
using Exp = std::vector<int>;

// Graded lexicographic order: total degree first, then lex with earlier
// variables more significant. All normalization in this library (leading
// coefficients, printing) is defined against this order.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const;
};

class Ring {
public:
    explicit Ring(std::vector<std::string> names) : vars_(std::move(names)) {}
    int nvars() const { return (int)vars_.size(); }
    const std::string& name(int i) const { return vars_[i]; }
    const std::vector<std::string>& names() const { return vars_; }
    // -1 if absent
    int index(const std::string& v) const;

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

// Exact multivariate polynomial over Q. Invariants: no stored zero
// coefficients; every exponent vector has the ring's length.
class MPoly {
public:
    using Terms = std::map<Exp, Rational, GrlexLess>;

    MPoly() = default;  // invalid until given a ring
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, const Rational& c);
    static MPoly var(RingPtr ring, const std::string& name, int exp = 1);
    static MPoly monomial(RingPtr ring, Exp e, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    size_t nterms() const { return terms_.size(); }

    int total_degree() const;          // -1 for zero
    int degree(int var) const;         // -1 for zero
    int degree(const std::string& var) const;

    // grlex leading data (requires nonzero)
    const Exp& leading_exp() const;
    const Rational& leading_coeff() const;

    Rational coeff(const Exp& e) const;
    void add_term(const Exp& e, const Rational& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly operator*(const Rational& c) const;
    MPoly operator/(const Rational& c) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int k) const;
    MPoly derivative(int var) const;
    MPoly derivative(const std::string& var) const;

    // Substitute rational values for a subset of variables (by index);
    // result stays in the same ring.
    MPoly eval_partial(const std::vector<std::pair<int, Rational>>& vals) const;
    // Full evaluation; point indexed by ring variable.
    Rational eval(const std::vector<Rational>& point) const;

    // Map this polynomial into `target`, sending variable i to images[i].
    MPoly map_vars(const RingPtr& target, const std::vector<MPoly>& images) const;

    // Coefficients as polynomials in the remaining variables: result[k] is
    // the coefficient of var^k (var-exponent zeroed out, same ring).
    std::vector<MPoly> coeffs_in(int var) const;
    static MPoly from_coeffs_in(RingPtr ring, int var, const std::vector<MPoly>& cs);

    bool depends_on(int var) const { return degree(var) > 0; }
    bool is_homogeneous() const;
    // degree in the two distinguished variables jointly
    int degree_in(int v1, int v2) const;
    bool is_homogeneous_in(const std::vector<int>& vars) const;

    // f = content * primitive, content rational with the sign of the grlex
    // leading coefficient, primitive integer-primitive with positive leading
    // coefficient.
    Rational content() const;
    MPoly primitive_part() const;
    MPoly normalized() const { return primitive_part(); }

    std::string str() const;

private:
    void check_ring(const MPoly& o) const;
    RingPtr ring_;
    Terms terms_;
};

MPoly operator*(const Rational& c, const MPoly& f);

// Exact division; nullopt when g does not divide f.
std::optional<MPoly> exact_div(const MPoly& f, const MPoly& g);

// gcd, normalized (integer-primitive, positive grlex leading coefficient).
// gcd(f,0) = normalized f. Primitive subresultant PRS recursing on the last
// variable present.
MPoly gcd(const MPoly& f, const MPoly& g);

// Sylvester resultant with respect to `var`, f-rows first. Degree-zero
// operands are rejected.
MPoly resultant(const MPoly& f, const MPoly& g, int var);
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);
// Same but with prescribed formal degrees (entries may have vanishing
// leading coefficients). Used where a universal coefficient formula is
// specialized to a concrete system.
MPoly resultant_formal(const MPoly& f, const MPoly& g, int var, int degf, int degg);

// Transvectant of index k with respect to the two distinguished variables:
//   (f,g)^(k) = sum_{h=0..k} (-1)^h C(k,h) d^k f/dx^{k-h}dy^h d^k g/dx^h dy^{k-h}
MPoly transvectant(const MPoly& f, const MPoly& g, int k, int xvar, int yvar);

// Discriminant of a binary form of degree 2 (B^2-4AC) or 3 (the classical
// degree-3 formula, positive iff three distinct real linear factors).
MPoly discriminant_binary(const MPoly& f, int xvar, int yvar);

// det of a square MPoly matrix via fraction-free Bareiss elimination.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const RingPtr& ring);

} // namespace qsl

#endif
