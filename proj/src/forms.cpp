#include "foliation/forms.hpp"

#include <stdexcept>

namespace foliation {

DiffForm::DiffForm(Poly2 a, Poly2 b) : A(std::move(a)), B(std::move(b))
{
    if (A.field() != B.field()) {
        A = A + Poly2(B.field());
        B = B + Poly2(A.field());
    }
}

bool DiffForm::singular_at_origin() const
{
    return A.coeff(0, 0).is_zero() && B.coeff(0, 0).is_zero();
}

DiffForm DiffForm::map_field(const FieldPtr& target) const { return {A.map_field(target), B.map_field(target)}; }

DiffForm DiffForm::swap_axes() const { return {B.swap_xy(), A.swap_xy()}; }

std::string DiffForm::str() const
{
    std::string out;
    if (!A.is_zero())
        out += "(" + A.str() + ") dx";
    if (!B.is_zero())
        out += std::string(out.empty() ? "" : " + ") + "(" + B.str() + ") dy";
    return out.empty() ? "0" : out;
}

Normalized normalize_primitive(const DiffForm& w)
{
    if (w.is_zero())
        throw std::invalid_argument("zero form");
    Poly2 g = gcd(w.A, w.B);
    if (g.total_degree() == 0)
        return {w, Poly2::constant(FieldElem(w.field(), 1))};
    auto a = w.A.exact_div(g);
    auto b = w.B.exact_div(g);
    if (!a || !b)
        throw std::logic_error("gcd does not divide the form coefficients");
    return {DiffForm(*a, *b), g};
}

LinearData linear_part(const DiffForm& w)
{
    if (!w.singular_at_origin())
        throw std::domain_error("regular point");
    LinearData d;
    d.matrix = {{{w.B.coeff(1, 0), w.B.coeff(0, 1)}, {-w.A.coeff(1, 0), -w.A.coeff(0, 1)}}};
    d.trace = d.matrix[0][0] + d.matrix[1][1];
    d.det = d.matrix[0][0] * d.matrix[1][1] - d.matrix[0][1] * d.matrix[1][0];
    return d;
}

Poly2 derivation(const DiffForm& w, const Poly2& f) { return w.B * f.dx() - w.A * f.dy(); }

bool is_invariant_curve(const DiffForm& w, const Poly2& f)
{
    if (f.is_zero())
        throw std::invalid_argument("zero curve equation");
    return derivation(w, f).exact_div(f).has_value();
}

DiffForm translate_origin(const DiffForm& w, const FieldElem& px, const FieldElem& py)
{
    return {w.A.translate(px, py), w.B.translate(px, py)};
}

int multiplicity(const DiffForm& w)
{
    int a = w.A.order(), b = w.B.order();
    if (a < 0)
        return b;
    if (b < 0)
        return a;
    return std::min(a, b);
}

DiffForm pullback(const DiffForm& w, const Poly2& X, const Poly2& Y)
{
    Poly2 a = w.A.subst(X, Y), b = w.B.subst(X, Y);
    return {a * X.dx() + b * Y.dx(), a * X.dy() + b * Y.dy()};
}

DiffForm linear_change(const DiffForm& w, const Mat2& m)
{
    const FieldPtr& f = w.field();
    Poly2 x = Poly2::x(f), y = Poly2::y(f);
    Poly2 X = x * m[0][0] + y * m[0][1];
    Poly2 Y = x * m[1][0] + y * m[1][1];
    return pullback(w, X, Y);
}

Mat2 mat_mul(const Mat2& a, const Mat2& b)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 mat_inverse(const Mat2& a)
{
    FieldElem det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    FieldElem id = det.inv();
    return {{{a[1][1] * id, -a[0][1] * id}, {-a[1][0] * id, a[0][0] * id}}};
}

} // namespace foliation
