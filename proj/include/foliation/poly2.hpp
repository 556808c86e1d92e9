#ifndef FOLIATION_POLY2_HPP
#define FOLIATION_POLY2_HPP

#include "foliation/kpoly.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace foliation {

// Sparse polynomial in x, y; no stored coefficient is identically zero.
class Poly2 {
public:
    using Exp = std::pair<int, int>;
    using Terms = std::map<Exp, FieldElem>;

    explicit Poly2(FieldPtr field = NumberField::rationals());
    Poly2(FieldPtr field, Terms terms);

    static Poly2 x(const FieldPtr& f = NumberField::rationals());
    static Poly2 y(const FieldPtr& f = NumberField::rationals());
    static Poly2 constant(const FieldElem& c);
    static Poly2 constant(const FieldPtr& f, const Rational& c) { return constant(FieldElem(f, c)); }
    static Poly2 monomial(const FieldElem& c, int i, int j);

    const FieldPtr& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FieldElem coeff(int i, int j) const;
    size_t size() const { return terms_.size(); }

    // Lowest total degree of a term (order at the origin); -1 for the zero polynomial.
    int order() const;
    int total_degree() const;
    int degree_x() const;
    int degree_y() const;
    Poly2 homogeneous_part(int d) const;

    Poly2 dx() const;
    Poly2 dy() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o);
    Poly2& operator*=(const FieldElem& c);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
    friend Poly2 operator*(Poly2 a, const FieldElem& c) { return a *= c; }
    friend Poly2 operator*(const FieldElem& c, Poly2 a) { return a *= c; }
    friend bool operator==(const Poly2& a, const Poly2& b);
    Poly2 pow(unsigned n) const;

    Poly2 subst(const Poly2& u, const Poly2& v) const;
    Poly2 translate(const FieldElem& a, const FieldElem& b) const;
    Poly2 swap_xy() const;
    // Restriction y = 0 as a polynomial in x, and x = 0 as a polynomial in y.
    KPoly restrict_y0() const;
    KPoly restrict_x0() const;
    Poly2 divide_monomial(int i, int j) const;
    // Largest k with x^k dividing the polynomial (likewise for y).
    int x_valuation() const;
    int y_valuation() const;
    std::optional<Poly2> exact_div(const Poly2& d) const;
    Poly2 map_field(const FieldPtr& target) const;
    // Keeps the terms of total degree <= d.
    Poly2 truncate(int d) const;

    FieldElem eval(const FieldElem& x, const FieldElem& y) const;
    // Numeric value under the embedding that sends the field generator to `root`.
    std::complex<double> evaluate(std::complex<double> x, std::complex<double> y,
                                  std::complex<double> root = 0.0) const;

    std::string str() const;

private:
    void add_term(const Exp& e, const FieldElem& c);
    FieldPtr field_;
    Terms terms_;
};

Poly2 poly_subst(const Poly2& p, const Poly2& u, const Poly2& v);
// Monic (lex-leading coefficient 1) gcd of bivariate polynomials.
Poly2 gcd(const Poly2& a, const Poly2& b);

inline std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

} // namespace foliation

#endif
