#include "foliation/kpoly.hpp"

#include <stdexcept>

namespace foliation {

KPoly::KPoly(FieldPtr field) : field_(std::move(field)) {}

KPoly::KPoly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field))
{
    c_.reserve(coeffs.size());
    for (auto& c : coeffs)
        c_.push_back(coerce(c, field_));
    trim();
}

KPoly KPoly::from_rational(const FieldPtr& field, const QPoly& p)
{
    std::vector<FieldElem> c;
    for (const auto& q : p.coeffs())
        c.emplace_back(field, q);
    return KPoly(field, std::move(c));
}

KPoly KPoly::constant(const FieldElem& c) { return KPoly(c.field(), {c}); }

KPoly KPoly::linear_root(const FieldElem& r) { return KPoly(r.field(), {-r, FieldElem(r.field(), 1)}); }

void KPoly::trim()
{
    while (!c_.empty() && c_.back().is_identically_zero())
        c_.pop_back();
}

FieldElem KPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return FieldElem(field_, 0);
    return c_[i];
}

KPoly KPoly::normalized() const
{
    KPoly r = *this;
    while (!r.c_.empty() && r.c_.back().is_zero())
        r.c_.pop_back();
    return r;
}

KPoly KPoly::monic() const
{
    KPoly r = normalized();
    if (r.is_zero())
        return r;
    FieldElem il = r.lead().inv();
    return r * il;
}

KPoly KPoly::derivative() const
{
    std::vector<FieldElem> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(c_[i] * FieldElem(field_, i));
    return KPoly(field_, std::move(d));
}

FieldElem KPoly::eval(const FieldElem& v) const
{
    FieldElem acc(field_, 0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * v + c_[i];
    return acc;
}

bool KPoly::all_rational() const
{
    for (const auto& c : c_)
        if (!c.is_rational())
            return false;
    return true;
}

QPoly KPoly::to_rational() const
{
    std::vector<Rational> q;
    for (const auto& c : c_)
        q.push_back(c.to_rational());
    return QPoly(std::move(q));
}

KPoly KPoly::operator-() const
{
    KPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

KPoly& KPoly::operator+=(const KPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), FieldElem(field_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), FieldElem(field_, 0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

KPoly& KPoly::operator*=(const KPoly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem(field_, 0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_identically_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

KPoly& KPoly::operator*=(const FieldElem& c)
{
    for (auto& x : c_)
        x *= c;
    trim();
    return *this;
}

bool operator==(const KPoly& a, const KPoly& b)
{
    if (a.degree() != b.degree())
        return false;
    for (int i = 0; i <= a.degree(); ++i)
        if (!(a.c_[i] == b.c_[i]))
            return false;
    return true;
}

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& b) const
{
    KPoly d = b.normalized();
    if (d.is_zero())
        throw std::domain_error("polynomial division by zero");
    FieldElem il = d.lead().inv();
    KPoly r = *this;
    int db = d.degree();
    if (r.degree() < db)
        return {KPoly(field_), r};
    std::vector<FieldElem> q(r.degree() - db + 1, FieldElem(field_, 0));
    for (int i = r.degree(); i >= db; --i) {
        if (i >= static_cast<int>(r.c_.size()) || r.c_[i].is_identically_zero())
            continue;
        FieldElem f = r.c_[i] * il;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r.c_[i - db + j] -= f * d.c_[j];
    }
    r.c_.resize(db, FieldElem(field_, 0));
    r.trim();
    return {KPoly(field_, std::move(q)), r};
}

KPoly KPoly::map_field(const FieldPtr& target) const
{
    std::vector<FieldElem> c;
    for (const auto& x : c_)
        c.push_back(coerce(x, target));
    return KPoly(target, std::move(c));
}

std::string KPoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_identically_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += c_[i].str();
        if (i > 0)
            out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

KPoly gcd(const KPoly& a, const KPoly& b)
{
    KPoly x = a.normalized(), y = b.normalized();
    while (!y.is_zero()) {
        KPoly r = x.rem(y).normalized();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

KPoly squarefree_part(const KPoly& p)
{
    KPoly n = p.normalized();
    if (n.degree() <= 0)
        return n.monic();
    return n.quot(gcd(n, n.derivative())).monic();
}

} // namespace foliation
