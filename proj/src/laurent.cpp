#include "foliation/laurent.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace foliation {

LaurentSeries::LaurentSeries(FieldPtr field, std::map<int, FieldElem> coeffs, int trunc)
    : field_(std::move(field)), trunc_(trunc)
{
    for (auto& [e, c] : coeffs)
        if (e < trunc_ && !c.is_identically_zero())
            c_.emplace(e, coerce(c, field_));
}

LaurentSeries LaurentSeries::from_poly(const KPoly& p, int trunc, int shift)
{
    std::map<int, FieldElem> c;
    for (int i = 0; i <= p.degree(); ++i)
        c.emplace(i + shift, p.coeffs()[i]);
    return LaurentSeries(p.field(), std::move(c), trunc);
}

FieldElem LaurentSeries::coeff(int e) const
{
    if (e >= trunc_)
        throw InsufficientPrecision("insufficient precision: coefficient " + std::to_string(e) +
                                " beyond truncation order " + std::to_string(trunc_));
    auto it = c_.find(e);
    return it == c_.end() ? FieldElem(field_, 0) : it->second;
}

int LaurentSeries::valuation() const
{
    for (const auto& [e, c] : c_)
        if (!c.is_zero())
            return e;
    return trunc_;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto& [e, c] : r.c_)
        c = -c;
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o)
{
    trunc_ = std::min(trunc_, o.trunc_);
    std::map<int, FieldElem> r;
    for (const std::map<int, FieldElem>* s : std::array<const std::map<int, FieldElem>*, 2>{&c_, &o.c_})
        for (const auto& [e, c] : *s) {
            if (e >= trunc_)
                continue;
            auto it = r.find(e);
            if (it == r.end())
                r.emplace(e, coerce(c, field_));
            else
                it->second += c;
        }
    *this = LaurentSeries(field_, std::move(r), trunc_);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    int va = a.valuation(), vb = b.valuation();
    int trunc = std::min(va + b.trunc_, vb + a.trunc_);
    std::map<int, FieldElem> r;
    for (const auto& [e1, c1] : a.c_)
        for (const auto& [e2, c2] : b.c_) {
            int e = e1 + e2;
            if (e >= trunc)
                continue;
            auto it = r.find(e);
            if (it == r.end())
                r.emplace(e, c1 * c2);
            else
                it->second += c1 * c2;
        }
    return LaurentSeries(a.field_, std::move(r), trunc);
}

LaurentSeries operator*(LaurentSeries a, const FieldElem& c)
{
    for (auto& [e, x] : a.c_)
        x *= c;
    return LaurentSeries(a.field_, std::move(a.c_), a.trunc_);
}

LaurentSeries LaurentSeries::inverse() const
{
    int v = valuation();
    if (v >= trunc_)
        throw InsufficientPrecision("insufficient precision: no known nonzero coefficient to invert");
    int prec = trunc_ - v;
    std::vector<FieldElem> u(prec, FieldElem(field_, 0));
    for (const auto& [e, c] : c_)
        if (e >= v)
            u[e - v] = c;
    std::vector<FieldElem> w(prec, FieldElem(field_, 0));
    FieldElem i0 = u[0].inv();
    w[0] = i0;
    for (int n = 1; n < prec; ++n) {
        FieldElem acc(field_, 0);
        for (int k = 1; k <= n; ++k)
            if (!u[k].is_identically_zero())
                acc += u[k] * w[n - k];
        w[n] = -acc * i0;
    }
    std::map<int, FieldElem> r;
    for (int n = 0; n < prec; ++n)
        r.emplace(n - v, w[n]);
    return LaurentSeries(field_, std::move(r), prec - v);
}

std::string LaurentSeries::str() const
{
    std::string out;
    for (const auto& [e, c] : c_) {
        if (!out.empty())
            out += " + ";
        out += c.str() + "*x^" + std::to_string(e);
    }
    if (!out.empty())
        out += " + ";
    return out + "O(x^" + std::to_string(trunc_) + ")";
}

FieldElem residue(const LaurentSeries& s)
{
    if (s.trunc() <= -1)
        throw InsufficientPrecision("insufficient precision");
    return s.coeff(-1);
}

} // namespace foliation
