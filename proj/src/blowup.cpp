#include "foliation/blowup.hpp"

#include "foliation/extension.hpp"

namespace foliation {

namespace {

// Lowest total degree among the terms whose coefficient is a unit (may split).
int checked_order(const Poly2& p)
{
    int best = -1;
    for (const auto& [e, c] : p.terms()) {
        int d = e.first + e.second;
        if ((best < 0 || d < best) && !c.is_zero())
            best = d;
    }
    return best;
}

bool vanishes(const Poly2& p)
{
    for (const auto& [e, c] : p.terms())
        if (!c.is_zero())
            return false;
    return true;
}

struct Root {
    FieldElem value;
};

// Roots of p (over its field K) as elements of K or of one extension of K.
std::vector<Root> roots_of(const KPoly& p0)
{
    std::vector<Root> out;
    KPoly p = p0.normalized();
    if (p.degree() < 1)
        return out;
    const FieldPtr& k = p.field();
    KPoly sq = squarefree_part(p).monic();
    KPoly residual(k);
    if (sq.all_rational()) {
        RationalRoots rr = rational_roots(sq.to_rational());
        for (const auto& [r, m] : rr.roots)
            out.push_back({FieldElem(k, r)});
        residual = KPoly::from_rational(k, rr.residual);
    } else if (sq.coeff(0).is_zero()) {
        out.push_back({FieldElem(k, 0)});
        residual = sq.quot(KPoly(k, {FieldElem(k, 0), FieldElem(k, 1)}));
    } else {
        residual = sq;
    }
    if (residual.degree() >= 1) {
        Extension e = extend(residual.monic());
        out.push_back({e.point});
    }
    return out;
}

} // namespace

BlowupResult blowup_point(const DiffForm& w, bool allow_regular)
{
    if (!allow_regular && !w.singular_at_origin())
        throw std::domain_error("regular point");
    if (w.is_zero())
        throw std::invalid_argument("zero form");
    const FieldPtr& f = w.field();
    Poly2 x = Poly2::x(f), y = Poly2::y(f);
    int oa = checked_order(w.A), ob = checked_order(w.B);
    BlowupResult r;
    r.nu = oa < 0 ? ob : ob < 0 ? oa : std::min(oa, ob);
    r.dicritical = vanishes((x * w.A + y * w.B).homogeneous_part(r.nu + 1));
    int div = r.dicritical ? r.nu + 1 : r.nu;

    Poly2 ax = w.A.subst(x, x * y), bx = w.B.subst(x, x * y);
    r.chart_x = DiffForm((ax + y * bx).divide_monomial(div, 0), (x * bx).divide_monomial(div, 0));
    Poly2 ay = w.A.subst(x * y, y), by = w.B.subst(x * y, y);
    r.chart_y = DiffForm((y * ay).divide_monomial(0, div), (x * ay + by).divide_monomial(0, div));
    return r;
}

std::vector<DivisorPoint> divisor_singularities(const BlowupResult& b)
{
    std::vector<DivisorPoint> out;
    const DiffForm& cx = b.chart_x;
    const DiffForm& cy = b.chart_y;
    // chart_x: divisor {x = 0}; restricted coefficient is A (invariant) or B (dicritical)
    KPoly p = b.dicritical ? cx.B.restrict_x0() : cx.A.restrict_x0();
    for (const Root& r : roots_of(p)) {
        DivisorPoint d;
        d.chart = DivisorPoint::Chart::X;
        d.location = r.value;
        const FieldPtr& f = r.value.field();
        d.local_form = translate_origin(cx.map_field(f), FieldElem(f, 0), r.value);
        d.singular = d.local_form.singular_at_origin();
        d.tangency = b.dicritical;
        out.push_back(std::move(d));
    }
    // chart_y origin (u = 0, the point v = infinity); divisor {w = 0}
    const FieldPtr& f = cy.field();
    bool hit = b.dicritical ? cy.A.coeff(0, 0).is_zero() : cy.B.coeff(0, 0).is_zero();
    if (hit) {
        DivisorPoint d;
        d.chart = DivisorPoint::Chart::Y;
        d.location = FieldElem(f, 0);
        d.local_form = cy;
        d.singular = cy.singular_at_origin();
        d.tangency = b.dicritical;
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace foliation
