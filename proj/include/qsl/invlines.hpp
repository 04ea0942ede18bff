#ifndef QSL_INVLINES_HPP
#define QSL_INVLINES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qsl/linefactor.hpp"
#include "qsl/system.hpp"

namespace qsl {

struct InvariantLine {
    QuadExt u, v, w;                 // normalized, first nonzero coordinate = 1
    int multiplicity = 1;
    bool at_infinity = false;
    std::array<QuadExt, 3> cofactor{};  // k = r x + s y + t (affine lines)
    std::string provenance;             // verified-simple | gcd-exponent |
                                        // perturbation-confirmed | oracle
    bool real = true;
    bool numeric = false;

    std::string str() const { return LineFactor{u, v, w, multiplicity}.str(); }
};

struct SingularPoint {
    QuadExt x, y;
    int multiplicity;   // root multiplicity of the restricted system
    int line_index;     // into LineConfiguration::lines
};

struct LineConfiguration {
    std::vector<InvariantLine> lines;   // affine lines then the line at infinity
    int M_IL = 0;                       // total multiplicity incl. infinity
    int N_C = 0;                        // distinct lines incl. infinity
    int N_R = 0;                        // distinct real lines incl. infinity
    int gcd_degree = 0;                 // deg gcd(E1,E2)
    int residue_degree = 0;             // degree hidden in non-line residue
    std::vector<MPoly> residue;
    std::vector<SingularPoint> singular_points;
    std::vector<std::string> warnings;
};

struct DivisorPoint {
    QuadExt X, Y, Z;
    int multiplicity = 1;
    bool numeric = false;
    std::string desc;  // for numeric points
};

struct Divisor {
    std::vector<DivisorPoint> points;
    int degree() const;
};

// Divisor type at infinity, decided by the comitant conditions.
enum class DczType { ThreeReal, OneRealTwoComplex, DoubleSimple, Triple, Undefined };
std::string dcz_type_str(DczType t);

// the two affine polynomials whose common factors carry every invariant line
std::pair<MPoly, MPoly> e_polynomials(const QuadraticSystem& s);
std::pair<MPoly, MPoly> e_polynomials(const SysPair& sp);  // symbolic families

// homogenized gcd of the pair, normalized
MPoly gcd_H(const QuadraticSystem& s);
MPoly gcd_H(const SysPair& sp);
MPoly homogenize_in(const MPoly& f, int xv, int yv, int d);  // -> [X,Y,Z,params]

// cofactor of an exact affine candidate line, if it is invariant
std::optional<std::array<QuadExt, 3>> line_cofactor(const SysPair& sp, const QuadExt& u,
                                                    const QuadExt& v, const QuadExt& w);

LineConfiguration extract_lines(const QuadraticSystem& s);

std::pair<Divisor, DczType> divisor_DCZ(const QuadraticSystem& s);

// D_S(P,Q;Z): intersection multiplicities of the projectivized pair along Z=0
Divisor infinite_intersection_numbers(const QuadraticSystem& s);

// real singular points on the real affine invariant lines of cfg
std::vector<SingularPoint> singular_points_on_lines(const QuadraticSystem& s,
                                                    const LineConfiguration& cfg);

} // namespace qsl

#endif
