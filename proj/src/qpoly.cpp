#include "foliation/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace foliation {

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> small)
{
    for (long c : small)
        coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[i];
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return *this;
    QPoly r = *this;
    Rational l = lead();
    for (auto& c : r.coeffs_)
        c /= l;
    return r;
}

QPoly QPoly::derivative() const
{
    std::vector<Rational> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(coeffs_[i] * i);
    return QPoly(std::move(d));
}

Rational QPoly::eval(const Rational& t) const
{
    Rational acc = 0;
    for (int i = degree(); i >= 0; --i)
        acc = acc * t + coeffs_[i];
    return acc;
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& b) const
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = coeffs_;
    int db = b.degree();
    if (degree() < db)
        return {QPoly(), *this};
    std::vector<Rational> q(degree() - db + 1);
    const Rational& lb = b.lead();
    for (int i = degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rational f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * b.coeffs_[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

std::string QPoly::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit)
            out += a.get_str();
        if (i > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x.rem(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

QPoly squarefree_part(const QPoly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    return p.quot(gcd(p, p.derivative())).monic();
}

bool is_squarefree(const QPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return (a * b).rem(m); }

std::pair<QPoly, QPoly> half_gcdex(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = a.rem(m);
    QPoly s0, s1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero())
        return {QPoly(), QPoly()};
    Rational l = r0.lead();
    Rational il = 1 / l;
    return {r0 * il, (s0 * il).rem(m)};
}

QPoly invmod(const QPoly& a, const QPoly& m)
{
    auto [g, s] = half_gcdex(a, m);
    if (g.degree() != 0)
        throw std::domain_error("element is not invertible modulo " + m.str());
    return s;
}

namespace {

std::vector<Integer> prime_factors(Integer n)
{
    std::vector<Integer> ps;
    n = abs(n);
    for (Integer d = 2; d * d <= n; ++d) {
        if (d > 10000000)
            throw std::runtime_error("coefficient too large for rational root search");
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

std::vector<Integer> divisors(const Integer& n)
{
    std::vector<Integer> ds{1};
    Integer m = abs(n);
    for (const Integer& p : prime_factors(m)) {
        std::vector<Integer> more;
        Integer pk = 1;
        Integer rest = m;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            for (const Integer& d : ds)
                more.push_back(d * pk);
        }
        ds.insert(ds.end(), more.begin(), more.end());
    }
    return ds;
}

} // namespace

RationalRoots rational_roots(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("rational_roots of the zero polynomial");
    RationalRoots out;
    QPoly rest = p;
    std::vector<Rational> candidates;

    if (rest.coeff(0) == 0)
        candidates.push_back(0);
    QPoly core = squarefree_part(p);
    while (core.degree() > 0 && core.coeff(0) == 0)
        core = core.quot(QPoly::variable());
    if (core.degree() > 0) {
        Integer den = 1;
        for (const auto& c : core.coeffs())
            den = lcm(den, c.get_den());
        std::vector<Integer> ic;
        for (const auto& c : core.coeffs())
            ic.push_back(Rational(c * den).get_num());
        for (const Integer& a : divisors(ic.front()))
            for (const Integer& b : divisors(ic.back()))
                for (int s : {1, -1}) {
                    Rational r(a * s, b);
                    r.canonicalize();
                    if (core.eval(r) == 0)
                        candidates.push_back(r);
                }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& r : candidates) {
        QPoly lin({-r, Rational(1)});
        int mult = 0;
        while (true) {
            auto [q, rem] = rest.divmod(lin);
            if (!rem.is_zero())
                break;
            rest = q;
            ++mult;
        }
        out.roots.emplace_back(r, mult);
    }
    out.residual = squarefree_part(rest);
    return out;
}

} // namespace foliation
