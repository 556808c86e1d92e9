#ifndef FOLIATION_PARSE_HPP
#define FOLIATION_PARSE_HPP

#include "foliation/forms.hpp"

#include <stdexcept>
#include <string>

namespace foliation {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int token, int column);
    int token() const { return token_; }
    int column() const { return column_; }

private:
    int token_;
    int column_;
};

// Grammar: sums of terms coeff * monomial * (dx | dy); coefficients are integers or p/q,
// monomials use x, y and ^ with nonnegative integer powers; parentheses group polynomials;
// juxtaposition multiplies; whitespace is ignored.
DiffForm parse_form(const std::string& text);
Poly2 parse_poly(const std::string& text);

// Inverse of parse_form for forms with rational coefficients.
std::string render(const DiffForm& w);
std::string render(const Poly2& p);

} // namespace foliation

#endif
