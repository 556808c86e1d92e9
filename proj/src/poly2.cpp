#include "foliation/poly2.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

namespace foliation {

Poly2::Poly2(FieldPtr field) : field_(std::move(field)) {}

Poly2::Poly2(FieldPtr field, Terms terms) : field_(std::move(field))
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

Poly2 Poly2::x(const FieldPtr& f) { return monomial(FieldElem(f, 1), 1, 0); }
Poly2 Poly2::y(const FieldPtr& f) { return monomial(FieldElem(f, 1), 0, 1); }
Poly2 Poly2::constant(const FieldElem& c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(const FieldElem& c, int i, int j)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("negative exponent");
    Poly2 p(c.field());
    p.add_term({i, j}, c);
    return p;
}

void Poly2::add_term(const Exp& e, const FieldElem& c)
{
    if (c.is_identically_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coerce(c, field_));
        return;
    }
    it->second += c;
    if (it->second.is_identically_zero())
        terms_.erase(it);
}

FieldElem Poly2::coeff(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? FieldElem(field_, 0) : it->second;
}

int Poly2::order() const
{
    if (terms_.empty())
        return -1;
    int o = INT_MAX;
    for (const auto& [e, c] : terms_)
        o = std::min(o, e.first + e.second);
    return o;
}

int Poly2::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

int Poly2::degree_x() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first);
    return d;
}

int Poly2::degree_y() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.second);
    return d;
}

Poly2 Poly2::homogeneous_part(int d) const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_)
        if (e.first + e.second == d)
            r.terms_.emplace(e, c);
    return r;
}

Poly2 Poly2::dx() const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_)
        if (e.first > 0)
            r.add_term({e.first - 1, e.second}, c * FieldElem(field_, e.first));
    return r;
}

Poly2 Poly2::dy() const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_)
        if (e.second > 0)
            r.add_term({e.first, e.second - 1}, c * FieldElem(field_, e.second));
    return r;
}

Poly2 Poly2::operator-() const
{
    Poly2 r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

namespace {

FieldPtr wider(const FieldPtr& a, const FieldPtr& b)
{
    if (a == b || b->degree() == 1)
        return a;
    if (a->degree() == 1)
        return b;
    if (a->extends(b.get()))
        return a;
    return b;
}

} // namespace

Poly2& Poly2::operator+=(const Poly2& o)
{
    FieldPtr f = wider(field_, o.field_);
    if (f != field_)
        *this = map_field(f);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o)
{
    FieldPtr f = wider(field_, o.field_);
    if (f != field_)
        *this = map_field(f);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly2& Poly2::operator*=(const Poly2& o)
{
    FieldPtr f = wider(field_, o.field_);
    Poly2 r(f);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    *this = std::move(r);
    return *this;
}

Poly2& Poly2::operator*=(const FieldElem& c)
{
    FieldPtr f = wider(field_, c.field());
    Poly2 r(f);
    for (const auto& [e, x] : terms_)
        r.add_term(e, x * c);
    *this = std::move(r);
    return *this;
}

bool operator==(const Poly2& a, const Poly2& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (e != it->first || !(c == it->second))
            return false;
        ++it;
    }
    return true;
}

Poly2 Poly2::pow(unsigned n) const
{
    Poly2 r = constant(FieldElem(field_, 1));
    Poly2 b = *this;
    while (n) {
        if (n & 1)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

Poly2 Poly2::subst(const Poly2& u, const Poly2& v) const
{
    FieldPtr f = wider(wider(field_, u.field()), v.field());
    std::vector<Poly2> up{constant(FieldElem(f, 1))}, vp{constant(FieldElem(f, 1))};
    int dx = degree_x(), dy = degree_y();
    for (int i = 1; i <= dx; ++i)
        up.push_back(up.back() * u);
    for (int j = 1; j <= dy; ++j)
        vp.push_back(vp.back() * v);
    Poly2 r(f);
    for (const auto& [e, c] : terms_)
        r += up[e.first] * vp[e.second] * c;
    return r;
}

Poly2 poly_subst(const Poly2& p, const Poly2& u, const Poly2& v) { return p.subst(u, v); }

Poly2 Poly2::translate(const FieldElem& a, const FieldElem& b) const
{
    FieldPtr f = wider(wider(field_, a.field()), b.field());
    return subst(x(f) + constant(a), y(f) + constant(b));
}

Poly2 Poly2::swap_xy() const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(Exp{e.second, e.first}, c);
    return r;
}

KPoly Poly2::restrict_y0() const
{
    std::vector<FieldElem> c;
    for (const auto& [e, x] : terms_) {
        if (e.second != 0)
            continue;
        if (static_cast<int>(c.size()) <= e.first)
            c.resize(e.first + 1, FieldElem(field_, 0));
        c[e.first] = x;
    }
    return KPoly(field_, std::move(c));
}

KPoly Poly2::restrict_x0() const { return swap_xy().restrict_y0(); }

Poly2 Poly2::divide_monomial(int i, int j) const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_) {
        if (e.first < i || e.second < j)
            throw std::domain_error("monomial does not divide " + str());
        r.terms_.emplace(Exp{e.first - i, e.second - j}, c);
    }
    return r;
}

int Poly2::x_valuation() const
{
    int v = INT_MAX;
    for (const auto& [e, c] : terms_)
        v = std::min(v, e.first);
    return terms_.empty() ? 0 : v;
}

int Poly2::y_valuation() const
{
    int v = INT_MAX;
    for (const auto& [e, c] : terms_)
        v = std::min(v, e.second);
    return terms_.empty() ? 0 : v;
}

std::optional<Poly2> Poly2::exact_div(const Poly2& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    FieldPtr f = wider(field_, d.field_);
    Poly2 r = map_field(f);
    Poly2 q(f);
    auto [ld, lc] = *d.terms_.rbegin();
    FieldElem ilc = lc.inv();
    while (!r.is_zero()) {
        auto [lr, rc] = *r.terms_.rbegin();
        if (lr.first < ld.first || lr.second < ld.second)
            return std::nullopt;
        Poly2 t = monomial(rc * ilc, lr.first - ld.first, lr.second - ld.second);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly2 Poly2::map_field(const FieldPtr& target) const
{
    if (target == field_)
        return *this;
    Poly2 r(target);
    for (const auto& [e, c] : terms_)
        r.add_term(e, coerce(c, target));
    return r;
}

Poly2 Poly2::truncate(int d) const
{
    Poly2 r(field_);
    for (const auto& [e, c] : terms_)
        if (e.first + e.second <= d)
            r.terms_.emplace(e, c);
    return r;
}

FieldElem Poly2::eval(const FieldElem& x, const FieldElem& y) const
{
    FieldElem acc(field_, 0);
    for (const auto& [e, c] : terms_) {
        FieldElem m = c;
        for (int i = 0; i < e.first; ++i)
            m *= x;
        for (int j = 0; j < e.second; ++j)
            m *= y;
        acc += m;
    }
    return acc;
}

std::complex<double> Poly2::evaluate(std::complex<double> x, std::complex<double> y,
                                     std::complex<double> root) const
{
    std::complex<double> acc = 0;
    for (const auto& [e, c] : terms_) {
        auto [re, im] = c.evaluate(root.real(), root.imag());
        acc += std::complex<double>(re, im) * std::pow(x, e.first) * std::pow(y, e.second);
    }
    return acc;
}

std::string Poly2::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        if (e.first > 0)
            mono += "x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0)
            mono += std::string(mono.empty() ? "" : "*") + "y" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
        std::string cs = c.str();
        bool neg = c.is_rational() && c.to_rational() < 0;
        if (neg)
            cs = (-c).str();
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

namespace {

// Polynomial in y with coefficients in K[x].
using YPoly = std::vector<KPoly>;

YPoly to_ypoly(const Poly2& p)
{
    YPoly r(std::max(p.degree_y() + 1, 0), KPoly(p.field()));
    std::vector<std::vector<FieldElem>> c(r.size());
    for (const auto& [e, v] : p.terms()) {
        auto& row = c[e.second];
        if (static_cast<int>(row.size()) <= e.first)
            row.resize(e.first + 1, FieldElem(p.field(), 0));
        row[e.first] = v;
    }
    for (size_t j = 0; j < r.size(); ++j)
        r[j] = KPoly(p.field(), c[j]);
    return r;
}

Poly2 from_ypoly(const YPoly& q, const FieldPtr& f)
{
    Poly2 r(f);
    for (size_t j = 0; j < q.size(); ++j)
        for (int i = 0; i <= q[j].degree(); ++i)
            r += Poly2::monomial(q[j].coeffs()[i], i, static_cast<int>(j));
    return r;
}

void trim(YPoly& q)
{
    while (!q.empty() && q.back().normalized().is_zero())
        q.pop_back();
    for (auto& c : q)
        c = c.normalized();
}

KPoly content(const YPoly& q, const FieldPtr& f)
{
    KPoly g(f);
    for (const auto& c : q)
        g = gcd(g, c);
    return g;
}

YPoly divide_content(const YPoly& q, const KPoly& c)
{
    YPoly r;
    for (const auto& x : q) {
        auto [qq, rr] = x.divmod(c);
        r.push_back(qq);
    }
    return r;
}

YPoly pseudo_rem(YPoly a, const YPoly& b)
{
    int db = static_cast<int>(b.size()) - 1;
    const KPoly& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        KPoly la = a.back();
        for (auto& c : a)
            c = c * lb;
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = a[da - db + j] - la * b[j];
        trim(a);
        if (static_cast<int>(a.size()) - 1 >= da)
            throw std::logic_error("pseudo-remainder failed to reduce degree");
    }
    return a;
}

} // namespace

Poly2 gcd(const Poly2& a0, const Poly2& b0)
{
    FieldPtr f = wider(a0.field(), b0.field());
    Poly2 a = a0.map_field(f), b = b0.map_field(f);
    if (a.is_zero() && b.is_zero())
        return Poly2(f);
    if (a.is_zero())
        std::swap(a, b);
    YPoly pa = to_ypoly(a), pb = to_ypoly(b);
    trim(pa);
    trim(pb);
    KPoly ca = content(pa, f);
    KPoly cb = pb.empty() ? KPoly(f) : content(pb, f);
    KPoly c = gcd(ca, cb);
    pa = divide_content(pa, ca);
    if (!pb.empty())
        pb = divide_content(pb, cb);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (!pb.empty() && pb.size() > 1) {
        YPoly r = pseudo_rem(pa, pb);
        pa = std::move(pb);
        if (r.empty()) {
            pb.clear();
            break;
        }
        pb = divide_content(r, content(r, f));
    }
    YPoly g;
    if (pb.empty())
        g = pa;
    else
        g = YPoly{KPoly::constant(FieldElem(f, 1))}; // pb is a nonzero constant in y
    for (auto& x : g)
        x = x * c;
    Poly2 r = from_ypoly(g, f);
    if (r.is_zero())
        return r;
    FieldElem lead = r.terms().rbegin()->second;
    return r * lead.inv();
}

} // namespace foliation
