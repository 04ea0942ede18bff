#ifndef QSL_VERIFY_HPP
#define QSL_VERIFY_HPP

#include <array>
#include <functional>
#include <map>

#include "qsl/classify.hpp"
#include "qsl/invlines.hpp"
#include "qsl/upoly.hpp"

namespace qsl {

// interval enclosure of a quadratic-extension scalar
CBox enclosure(const QuadExt& q, int prec);

// Brute-force invariant-line search straight from the cofactor identity:
// candidate directions are the roots of C2(-v,u); for each direction the
// cofactor coefficients are matched degree by degree. Lines whose data lives
// in a cubic or mixed extension are found on a certified interval path and
// flagged numeric. Every returned line has multiplicity 1.
std::vector<InvariantLine> oracle_lines(const QuadraticSystem& s);

struct NumericLine {
    CBox u, v, w;
};
// numeric candidates produced alongside the exact ones (empty unless the
// system needs a cubic or mixed extension)
struct OracleResult {
    std::vector<InvariantLine> exact;
    std::vector<NumericLine> numeric;
    std::vector<std::string> warnings;
};
OracleResult oracle_lines_full(const QuadraticSystem& s);

struct PerturbationRow {
    ConfigLabel label;
    std::vector<std::string> params;
    std::function<QuadraticSystem(const std::map<std::string, Rational>&, const Rational&)>
        build;
    // the published perturbed invariant lines, as raw coefficient triples
    std::function<std::vector<std::array<QuadExt, 3>>(
        const std::map<std::string, Rational>&, const Rational&)>
        lines;
    // their specialization at eps = 0; (0,0,*) marks collapse onto Z=0
    std::function<std::vector<std::array<QuadExt, 3>>(
        const std::map<std::string, Rational>&)>
        limits;
};

const std::vector<PerturbationRow>& perturbation_rows();

struct PerturbReport {
    bool ok = true;
    std::vector<std::string> details;
};

// Instantiate the row at (params, eps), demand that the oracle returns
// exactly the published line set, and that the eps->0 specialization
// reproduces the unperturbed configuration with its multiplicities.
PerturbReport perturbation_check(const ConfigLabel& label,
                                 const std::map<std::string, Rational>& params,
                                 const Rational& eps);

struct CrossReport {
    bool ok = true;
    std::vector<std::string> details;
    int exact_lines = 0;
    int numeric_lines = 0;
};

// gcd-pipeline lines vs oracle lines: exact set equality, interval
// containment for whatever only exists numerically
CrossReport cross_validate(const QuadraticSystem& s);

} // namespace qsl

#endif
