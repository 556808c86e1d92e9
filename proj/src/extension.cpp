#include "foliation/extension.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace foliation {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves P x = b for each right-hand side; P given by columns. Returns nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> solve_columns(const Matrix& cols,
                                                                const std::vector<std::vector<Rational>>& rhs)
{
    size_t n = cols.size();
    size_t m = rhs.size();
    Matrix a(n, std::vector<Rational>(n + m));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i)
            a[i][j] = cols[j][i];
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < n; ++i)
            a[i][n + k] = rhs[k][i];
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (size_t j = c; j < n + m; ++j)
                a[r][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(m, std::vector<Rational>(n));
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < n; ++i)
            out[k][i] = a[i][n + k];
    return out;
}

std::vector<Rational> coordinates(const KPoly& e, int dg, int dm)
{
    std::vector<Rational> v(dg * dm);
    for (int i = 0; i <= e.degree() && i < dg; ++i) {
        const QPoly& r = e.coeffs()[i].rep();
        for (int j = 0; j <= r.degree(); ++j)
            v[i * dm + j] = r.coeffs()[j];
    }
    return v;
}

KPoly from_coordinates(const FieldPtr& base, const std::vector<Rational>& v, int dg, int dm)
{
    std::vector<FieldElem> c;
    for (int i = 0; i < dg; ++i) {
        std::vector<Rational> r(v.begin() + i * dm, v.begin() + (i + 1) * dm);
        c.emplace_back(base, QPoly(std::move(r)));
    }
    return KPoly(base, std::move(c));
}

struct Built {
    QPoly modulus;
    Tower tower;
};

std::optional<Built> build(const KPoly& g, const Rational& shift)
{
    const FieldPtr& base = g.field();
    int dm = base->degree();
    int dg = g.degree();
    int n = dm * dg;
    FieldElem t = FieldElem::generator(base);
    KPoly s(base, {t * FieldElem(base, shift), FieldElem(base, 1)});

    Matrix cols;
    KPoly p = KPoly::constant(FieldElem(base, 1));
    for (int k = 0; k < n; ++k) {
        cols.push_back(coordinates(p, dg, dm));
        p = (p * s).rem(g);
    }
    std::vector<std::vector<Rational>> rhs{coordinates(p, dg, dm),
                                           coordinates(KPoly::constant(t).rem(g), dg, dm),
                                           coordinates(KPoly(base, {FieldElem(base, 0), FieldElem(base, 1)}).rem(g), dg, dm)};
    auto sol = solve_columns(cols, rhs);
    if (!sol)
        return std::nullopt;
    std::vector<Rational> mc(n + 1);
    for (int k = 0; k < n; ++k)
        mc[k] = -(*sol)[0][k];
    mc[n] = 1;
    Built b;
    b.modulus = QPoly(std::move(mc));
    if (!is_squarefree(b.modulus))
        return std::nullopt;
    b.tower.base = base;
    for (const auto& c : g.coeffs())
        b.tower.g.push_back(c.rep());
    b.tower.shift = shift;
    b.tower.base_gen = QPoly((*sol)[1]);
    b.tower.point = QPoly((*sol)[2]);
    b.tower.basis = std::move(cols);
    return b;
}

Rational shift_candidate(int i)
{
    // 0, 1, -1, 2, -2, ...
    return i == 0 ? Rational(0) : Rational((i % 2 ? 1 : -1) * ((i + 1) / 2));
}

KPoly compose_shifted(const QPoly& m, const FieldPtr& base, const Rational& shift)
{
    // m(v + shift*t) over the base field.
    FieldElem t = FieldElem::generator(base);
    KPoly s(base, {t * FieldElem(base, shift), FieldElem(base, 1)});
    KPoly acc(base);
    for (int i = m.degree(); i >= 0; --i)
        acc = acc * s + KPoly::constant(FieldElem(base, m.coeffs()[i]));
    return acc;
}

} // namespace

Extension extend(const KPoly& g)
{
    KPoly gm = g.monic();
    if (gm.degree() < 1)
        throw std::invalid_argument("extension polynomial must have positive degree");
    const FieldPtr& base = gm.field();
    if (gm.degree() == 1)
        return {base, -gm.coeff(0)};
    if (base->is_rationals() && base == NumberField::rationals() && gm.all_rational()) {
        FieldPtr f = NumberField::over_rationals(gm.to_rational());
        return {f, FieldElem::generator(f)};
    }
    for (int i = 0; i < 64; ++i) {
        auto b = build(gm, shift_candidate(i));
        if (!b)
            continue;
        FieldPtr f = NumberField::with_tower(b->modulus, b->tower);
        return {f, FieldElem(f, b->tower.point)};
    }
    throw std::runtime_error("no primitive element found for extension by " + gm.str());
}

std::pair<FieldPtr, FieldPtr> split_field(const SplitEvent& event)
{
    const FieldPtr& f = event.field;
    const auto& tw = f->tower();
    if (!tw)
        throw std::logic_error("cannot split the rational field");
    auto make = [&](const QPoly& m) -> FieldPtr {
        std::vector<NumberField::Split> hist = f->history();
        hist.push_back({f->modulus(), m.monic()});
        const FieldPtr& base = tw->base;
        std::vector<FieldElem> gc;
        for (const auto& c : tw->g)
            gc.emplace_back(base, c);
        KPoly g(base, gc);
        KPoly gi = gcd(g, compose_shifted(m.monic(), base, tw->shift));
        if (gi.degree() < 1)
            throw std::logic_error("empty branch in field split");
        auto b = build(gi, tw->shift);
        if (!b || !(b->modulus == m.monic()))
            throw std::logic_error("inconsistent tower after field split");
        return NumberField::with_tower(b->modulus, b->tower, std::move(hist), f);
    };
    return {make(event.m1), make(event.m2)};
}

FieldElem relative_trace(const FieldElem& a, const FieldPtr& ancestor)
{
    const FieldPtr& f = a.field();
    if (f == ancestor || (f->degree() == 1 && ancestor->degree() == 1))
        return coerce(a, ancestor);
    const auto& tw = f->tower();
    if (!tw)
        throw std::logic_error("trace target is not an ancestor field");
    const FieldPtr& base = tw->base;
    int dm = base->degree();
    int dg = static_cast<int>(tw->g.size()) - 1;
    std::vector<Rational> coords(dm * dg);
    const auto& r = a.rep().coeffs();
    for (size_t k = 0; k < r.size(); ++k)
        for (size_t i = 0; i < coords.size(); ++i)
            coords[i] += r[k] * tw->basis[k][i];
    KPoly ap = from_coordinates(base, coords, dg, dm);
    std::vector<FieldElem> gc;
    for (const auto& c : tw->g)
        gc.emplace_back(base, c);
    KPoly g(base, gc);
    FieldElem tr(base, 0);
    KPoly vi = KPoly::constant(FieldElem(base, 1));
    KPoly v(base, {FieldElem(base, 0), FieldElem(base, 1)});
    for (int i = 0; i < dg; ++i) {
        tr += (ap * vi).rem(g).coeff(i);
        vi = (vi * v).rem(g);
    }
    return relative_trace(tr, ancestor);
}

QPoly characteristic_polynomial(const FieldElem& a)
{
    const FieldPtr& f = a.field();
    int n = f->degree();
    Matrix m(n, std::vector<Rational>(n));
    QPoly tj = QPoly::constant(1);
    for (int j = 0; j < n; ++j) {
        QPoly col = mulmod(a.rep(), tj, f->modulus());
        for (int i = 0; i < n; ++i)
            m[i][j] = col.coeff(i);
        tj = mulmod(tj, QPoly::variable(), f->modulus());
    }
    // Faddeev-LeVerrier
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk(n, std::vector<Rational>(n));
    for (int k = 1; k <= n; ++k) {
        Matrix prod(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l)
                    s += m[i][l] * mk[l][j];
                prod[i][j] = s;
            }
        for (int i = 0; i < n; ++i)
            prod[i][i] += c[n - k + 1];
        mk = prod;
        Rational tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                tr += m[i][l] * mk[l][i];
        c[n - k] = -tr / k;
    }
    return QPoly(std::move(c));
}

std::vector<std::complex<double>> numeric_roots(const QPoly& p)
{
    using C = std::complex<double>;
    int n = p.degree();
    if (n < 1)
        return {};
    std::vector<C> c(n + 1);
    for (int i = 0; i <= n; ++i)
        c[i] = p.coeffs()[i].get_d() / p.lead().get_d();
    auto eval = [&](C z, C& d) {
        C v = c[n];
        d = 0;
        for (int i = n - 1; i >= 0; --i) {
            d = d * z + v;
            v = v * z + c[i];
        }
        return v;
    };
    double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / (n - i)));
    radius = radius * 2 + 1;
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(radius * 0.5, 2 * M_PI * i / n + 0.4);
    for (int it = 0; it < 500; ++it) {
        double move = 0;
        for (int i = 0; i < n; ++i) {
            C d;
            C v = eval(z[i], d);
            C ratio = v / d;
            C sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0 / (z[i] - z[j]);
            C w = ratio / (1.0 - ratio * sum);
            z[i] -= w;
            move = std::max(move, std::abs(w));
        }
        if (move < 1e-15 * radius)
            break;
    }
    return z;
}

} // namespace foliation
