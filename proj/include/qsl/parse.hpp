#ifndef QSL_PARSE_HPP
#define QSL_PARSE_HPP

#include <string>
#include <vector>

#include "qsl/system.hpp"

namespace qsl {

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : Error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// expression := ['-'] term (('+'|'-') term)*
// term       := factor ('*' factor)*
// factor     := rational | 'x' | 'y' | factor '^' posint | '(' expression ')'
// rational   := integer | integer '/' integer
// Whitespace is insignificant; juxtaposition is not multiplication.
MPoly parse_poly_xy(const std::string& text);

// canonical printer (grlex descending); parse(print(f)) == f
std::string print_poly(const MPoly& f);

QuadraticSystem parse_system(const std::string& p_text, const std::string& q_text);
QuadraticSystem parse_system(const std::vector<Rational>& coeffs);  // 12 entries
std::vector<Rational> parse_coeff_list(const std::string& csv);

std::string print_p(const QuadraticSystem& s);
std::string print_q(const QuadraticSystem& s);

} // namespace qsl

#endif
