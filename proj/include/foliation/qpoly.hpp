#ifndef FOLIATION_QPOLY_HPP
#define FOLIATION_QPOLY_HPP

#include "foliation/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace foliation {

// Dense univariate polynomial over Q; coeffs_[i] multiplies t^i, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<long> small);

    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, int degree);
    static QPoly variable() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& lead() const { return coeffs_.back(); }

    QPoly monic() const;
    QPoly derivative() const;
    Rational eval(const Rational& t) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    // a = q*b + r with deg r < deg b; b must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& b) const;
    QPoly rem(const QPoly& b) const { return divmod(b).second; }
    QPoly quot(const QPoly& b) const { return divmod(b).first; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& p);
bool is_squarefree(const QPoly& p);

// (a*b) mod m and inverse mod m via extended Euclid; inverse requires gcd(a, m) = 1.
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
QPoly invmod(const QPoly& a, const QPoly& m);
// Bezout: returns (g, s) with s*a = g mod m and g = gcd(a, m) monic.
std::pair<QPoly, QPoly> half_gcdex(const QPoly& a, const QPoly& m);

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots; // sorted ascending, with multiplicity
    QPoly residual;                              // monic squarefree factor without rational roots
};

RationalRoots rational_roots(const QPoly& p);

} // namespace foliation

#endif
