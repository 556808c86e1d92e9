#ifndef FOLIATION_LAURENT_HPP
#define FOLIATION_LAURENT_HPP

#include "foliation/kpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace foliation {

class InsufficientPrecision : public std::domain_error {
public:
    explicit InsufficientPrecision(const std::string& what) : std::domain_error(what) {}
};

// Truncated Laurent series: coefficients at exponents >= trunc() are unknown.
class LaurentSeries {
public:
    LaurentSeries(FieldPtr field, std::map<int, FieldElem> coeffs, int trunc);
    // Exact polynomial shifted by x^shift, known up to (excluding) exponent trunc.
    static LaurentSeries from_poly(const KPoly& p, int trunc, int shift = 0);

    const FieldPtr& field() const { return field_; }
    int trunc() const { return trunc_; }
    FieldElem coeff(int e) const;
    const std::map<int, FieldElem>& coeffs() const { return c_; }
    // Lowest exponent with a coefficient that is nonzero on this branch; trunc() if none is known.
    int valuation() const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(LaurentSeries a, const FieldElem& c);
    LaurentSeries inverse() const;
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

    std::string str() const;

private:
    FieldPtr field_;
    std::map<int, FieldElem> c_;
    int trunc_;
};

// Coefficient of x^-1.
FieldElem residue(const LaurentSeries& s);

} // namespace foliation

#endif
