#ifndef FOLIATION_FORMS_HPP
#define FOLIATION_FORMS_HPP

#include "foliation/poly2.hpp"

#include <array>
#include <string>

namespace foliation {

// omega = A dx + B dy. Dual vector field v = B d/dx - A d/dy.
struct DiffForm {
    Poly2 A;
    Poly2 B;

    DiffForm() = default;
    DiffForm(Poly2 a, Poly2 b);

    const FieldPtr& field() const { return A.field(); }
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
    bool singular_at_origin() const;
    DiffForm map_field(const FieldPtr& target) const;
    DiffForm swap_axes() const;
    DiffForm scaled(const FieldElem& c) const { return {A * c, B * c}; }
    std::string str() const;

    friend bool operator==(const DiffForm& a, const DiffForm& b) { return a.A == b.A && a.B == b.B; }
};

using Mat2 = std::array<std::array<FieldElem, 2>, 2>;

struct LinearData {
    Mat2 matrix; // [[dB/dx, dB/dy], [-dA/dx, -dA/dy]] at the origin
    FieldElem trace;
    FieldElem det;
};

struct Normalized {
    DiffForm form;
    Poly2 cofactor;
};

Normalized normalize_primitive(const DiffForm& w);
LinearData linear_part(const DiffForm& w);
// v(f) = B f_x - A f_y
Poly2 derivation(const DiffForm& w, const Poly2& f);
bool is_invariant_curve(const DiffForm& w, const Poly2& f);
DiffForm translate_origin(const DiffForm& w, const FieldElem& px, const FieldElem& py);
int multiplicity(const DiffForm& w);

// Pullback by (x, y) = (X(x, y), Y(x, y)).
DiffForm pullback(const DiffForm& w, const Poly2& X, const Poly2& Y);
// Pullback by the linear map (x, y) = M (X, Y).
DiffForm linear_change(const DiffForm& w, const Mat2& m);

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_inverse(const Mat2& a);

} // namespace foliation

#endif
