#ifndef FOLIATION_KPOLY_HPP
#define FOLIATION_KPOLY_HPP

#include "foliation/number_field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace foliation {

// Dense univariate polynomial over a number field; trailing coefficients that are
// identically zero are trimmed, zero divisors are kept.
class KPoly {
public:
    explicit KPoly(FieldPtr field = NumberField::rationals());
    KPoly(FieldPtr field, std::vector<FieldElem> coeffs);
    static KPoly from_rational(const FieldPtr& field, const QPoly& p);
    static KPoly constant(const FieldElem& c);
    static KPoly linear_root(const FieldElem& r); // v - r

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(int i) const;
    const FieldElem& lead() const { return c_.back(); }

    // Drops leading coefficients that vanish on the current branch (may split).
    KPoly normalized() const;
    KPoly monic() const;
    KPoly derivative() const;
    FieldElem eval(const FieldElem& v) const;
    bool all_rational() const;
    QPoly to_rational() const;

    KPoly operator-() const;
    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    KPoly& operator*=(const KPoly& o);
    KPoly& operator*=(const FieldElem& c);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(KPoly a, const KPoly& b) { return a *= b; }
    friend KPoly operator*(KPoly a, const FieldElem& c) { return a *= c; }
    friend bool operator==(const KPoly& a, const KPoly& b);

    std::pair<KPoly, KPoly> divmod(const KPoly& b) const;
    KPoly rem(const KPoly& b) const { return divmod(b).second; }
    KPoly quot(const KPoly& b) const { return divmod(b).first; }

    KPoly map_field(const FieldPtr& target) const;
    std::string str(const std::string& var = "v") const;

private:
    void trim();
    FieldPtr field_;
    std::vector<FieldElem> c_;
};

KPoly gcd(const KPoly& a, const KPoly& b);
KPoly squarefree_part(const KPoly& p);

inline std::ostream& operator<<(std::ostream& os, const KPoly& p) { return os << p.str(); }

} // namespace foliation

#endif
