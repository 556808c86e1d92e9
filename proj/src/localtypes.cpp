#include "foliation/localtypes.hpp"

#include "foliation/extension.hpp"

#include <cstdlib>

namespace foliation {

std::string to_string(RatioKind k)
{
    switch (k) {
    case RatioKind::RationalPositive: return "rational-positive";
    case RatioKind::RationalNegative: return "rational-negative";
    case RatioKind::IrrationalRealPositive: return "irrational-real-positive";
    case RatioKind::IrrationalRealNegative: return "irrational-real-negative";
    case RatioKind::NonReal: return "non-real";
    case RatioKind::ConjugateDependent: return "conjugate-dependent";
    }
    return "?";
}

std::string to_string(NonReducedReason r)
{
    switch (r) {
    case NonReducedReason::NilpotentLinearPart: return "nilpotent-linear-part";
    case NonReducedReason::ZeroLinearPart: return "zero-linear-part";
    case NonReducedReason::PositiveRationalRatio: return "positive-rational-ratio";
    }
    return "?";
}

std::string to_string(SingClass::Kind k)
{
    switch (k) {
    case SingClass::Kind::Regular: return "regular";
    case SingClass::Kind::ReducedNonDegenerate: return "reduced-nondegenerate";
    case SingClass::Kind::SaddleNode: return "saddle-node";
    case SingClass::Kind::NonReduced: return "non-reduced";
    }
    return "?";
}

std::string to_string(Axis a) { return a == Axis::YZero ? "y=0" : "x=0"; }

namespace {

std::optional<Rational> rational_sqrt(const Rational& d)
{
    if (d < 0)
        return std::nullopt;
    Integer n = d.get_num(), m = d.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(m.get_mpz_t()))
        return std::nullopt;
    Integer rn, rm;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rm.get_mpz_t(), m.get_mpz_t());
    Rational r(rn, rm);
    r.canonicalize();
    return r;
}

KPoly truncated(const KPoly& p, int n)
{
    std::vector<FieldElem> c;
    for (int i = 0; i <= p.degree() && i <= n; ++i)
        c.push_back(p.coeffs()[i]);
    return KPoly(p.field(), std::move(c));
}

KPoly mul_trunc(const KPoly& a, const KPoly& b, int n)
{
    std::vector<FieldElem> r(std::max(0, std::min(a.degree() + b.degree(), n) + 1), FieldElem(a.field(), 0));
    for (int i = 0; i <= a.degree() && i <= n; ++i) {
        if (a.coeffs()[i].is_identically_zero())
            continue;
        for (int j = 0; j <= b.degree() && i + j <= n; ++j)
            r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    if (a.is_zero() || b.is_zero())
        return KPoly(a.field());
    return KPoly(a.field(), std::move(r));
}

// P(X, s(X)) mod X^(n+1)
KPoly compose(const Poly2& p, const KPoly& s, int n)
{
    const FieldPtr& f = p.field();
    std::vector<KPoly> sp{KPoly::constant(FieldElem(f, 1))};
    for (int j = 1; j <= p.degree_y(); ++j)
        sp.push_back(mul_trunc(sp.back(), s, n));
    std::vector<FieldElem> acc(n + 1, FieldElem(f, 0));
    for (const auto& [e, c] : p.terms()) {
        if (e.first > n)
            continue;
        const KPoly& q = sp[e.second];
        for (int i = 0; i <= q.degree() && i + e.first <= n; ++i)
            acc[i + e.first] += c * q.coeffs()[i];
    }
    return KPoly(f, std::move(acc));
}

Vec2 kernel_vector(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d)
{
    Vec2 e;
    if (!a.is_zero() || !b.is_zero())
        e = {-b, a};
    else
        e = {-d, c};
    if (!e[0].is_zero())
        return {FieldElem(e[0].field(), 1), e[1] / e[0]};
    return {FieldElem(e[1].field(), 0), FieldElem(e[1].field(), 1)};
}

} // namespace

RatioVerdict ratio_decide(const LinearData& l)
{
    if (l.det.is_zero())
        throw std::domain_error("zero determinant: use the saddle-node path");
    RatioVerdict v;
    v.s = l.trace * l.trace / l.det - FieldElem(2);
    if (!v.s.is_rational()) {
        QPoly chi = characteristic_polynomial(v.s);
        for (const auto& [q, mult] : rational_roots(chi).roots)
            if ((v.s - FieldElem(q)).is_zero())
                throw std::logic_error("rational element with non-constant representative");
        v.kind = RatioKind::ConjugateDependent;
        return v;
    }
    Rational s = v.s.to_rational();
    Rational disc = s * s - 4;
    if (auto r = rational_sqrt(disc)) {
        Rational a = (s + *r) / 2, b = (s - *r) / 2;
        if (abs(a) < abs(b))
            std::swap(a, b);
        v.lambda = a;
        v.lambda_inv = b;
        v.kind = s > 0 ? RatioKind::RationalPositive : RatioKind::RationalNegative;
    } else if (disc > 0) {
        v.kind = s > 0 ? RatioKind::IrrationalRealPositive : RatioKind::IrrationalRealNegative;
    } else {
        v.kind = RatioKind::NonReal;
    }
    return v;
}

int default_jet_order()
{
    if (const char* env = std::getenv("FOLIATION_JET_ORDER")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 2 && n <= 4096)
            return static_cast<int>(n);
    }
    return 10;
}

KPoly SeparatrixJet::graph() const
{
    // x(X) = m00 X + m01 s(X), y(X) = m10 X + m11 s(X); invert x(X) by fixed point.
    const FieldPtr& f = jet.field();
    if (frame[0][0].is_zero())
        throw std::domain_error("vertical tangent: the separatrix is not a graph over x");
    FieldElem inv = frame[0][0].inv();
    KPoly xvar(f, {FieldElem(f, 0), FieldElem(f, 1)});
    KPoly X = xvar * inv;
    for (int it = 0; it <= order; ++it) {
        KPoly comp(f);
        for (int i = jet.degree(); i >= 0; --i)
            comp = truncated(mul_trunc(comp, X, order) + KPoly::constant(jet.coeff(i)), order);
        X = truncated((xvar - comp * frame[0][1]) * inv, order);
    }
    KPoly comp(f);
    for (int i = jet.degree(); i >= 0; --i)
        comp = truncated(mul_trunc(comp, X, order) + KPoly::constant(jet.coeff(i)), order);
    return truncated(X * frame[1][0] + comp * frame[1][1], order);
}

SeparatrixJet separatrix_jet(const DiffForm& w, int order)
{
    LinearData l = linear_part(w);
    if (!l.matrix[1][0].is_zero())
        throw std::invalid_argument("the x-axis is not an eigendirection of the linear part");
    const FieldPtr& f = w.field();
    FieldElem la = l.matrix[0][0], lb = l.matrix[1][1];
    KPoly s(f);
    for (int n = 2; n <= order; ++n) {
        KPoly ds = s.derivative();
        KPoly e = compose(w.A, s, n) + mul_trunc(compose(w.B, s, n), ds, n);
        FieldElem c = e.coeff(n);
        FieldElem denom = FieldElem(f, n) * la - lb;
        if (denom.is_zero())
            throw std::logic_error("unexpected resonance");
        if (c.is_identically_zero())
            continue;
        std::vector<FieldElem> mono(n + 1, FieldElem(f, 0));
        mono[n] = -c / denom;
        s += KPoly(f, std::move(mono));
    }
    SeparatrixJet j;
    j.frame = {{{FieldElem(f, 1), FieldElem(f, 0)}, {FieldElem(f, 0), FieldElem(f, 1)}}};
    j.jet = s;
    j.order = order;
    return j;
}

namespace {

struct SnFrame {
    Vec2 strong, weak;
    FieldElem trace;
};

SnFrame saddle_node_frame(const DiffForm& w)
{
    LinearData l = linear_part(w);
    if (!l.det.is_zero())
        throw std::domain_error("not a saddle-node: nonzero determinant");
    if (l.trace.is_zero())
        throw std::domain_error("not elementary");
    const auto& m = l.matrix;
    SnFrame fr;
    fr.trace = l.trace;
    fr.weak = kernel_vector(m[0][0], m[0][1], m[1][0], m[1][1]);
    fr.strong = kernel_vector(m[0][0] - l.trace, m[0][1], m[1][0], m[1][1] - l.trace);
    return fr;
}

Mat2 columns(const Vec2& a, const Vec2& b) { return {{{a[0], b[0]}, {a[1], b[1]}}}; }

} // namespace

SeparatrixJet saddle_node_separatrix(const DiffForm& w, SeparatrixJet::Direction direction, int order)
{
    SnFrame fr = saddle_node_frame(w);
    Mat2 m = direction == SeparatrixJet::Direction::Weak ? columns(fr.weak, fr.strong) : columns(fr.strong, fr.weak);
    SeparatrixJet j = separatrix_jet(linear_change(w, m), order);
    j.direction = direction;
    j.frame = m;
    return j;
}

LaurentSeries cs_integrand(const DiffForm& w0, Axis axis, int trunc)
{
    DiffForm w = axis == Axis::XZero ? w0.swap_axes() : w0;
    if (!w.A.restrict_y0().normalized().is_zero())
        throw std::domain_error("axis " + to_string(axis) + " is not invariant");
    KPoly num = -w.A.dy().restrict_y0();
    KPoly den = w.B.restrict_y0();
    LaurentSeries n = LaurentSeries::from_poly(num, trunc);
    LaurentSeries d = LaurentSeries::from_poly(den, trunc);
    return n / d;
}

FieldElem cs_index(const DiffForm& w, Axis axis)
{
    const DiffForm& v = axis == Axis::XZero ? w.swap_axes() : w;
    int deg = std::max(v.A.total_degree(), v.B.total_degree());
    return residue(cs_integrand(w, axis, 2 * deg + 4));
}

SaddleNodeInvariants saddle_node_invariants(const DiffForm& w, int order)
{
    SnFrame fr = saddle_node_frame(w);
    DiffForm v = linear_change(w, columns(fr.weak, fr.strong));
    SeparatrixJet j = separatrix_jet(v, order);
    const KPoly& s = j.jet;
    KPoly ds = s.derivative();
    KPoly bres = compose(v.B, s, order);
    KPoly ay = compose(v.A.dy(), s, order) + mul_trunc(compose(v.B.dy(), s, order), ds, order);
    LaurentSeries num = LaurentSeries::from_poly(-truncated(ay, order - 1), order);
    LaurentSeries den = LaurentSeries::from_poly(bres, order + 1);
    LaurentSeries a = num / den;
    int pole = -a.valuation();
    if (a.valuation() >= a.trunc())
        throw InsufficientPrecision("insufficient precision, retry with larger N");
    if (pole < 2)
        throw std::logic_error("saddle-node with pole order " + std::to_string(pole));
    SaddleNodeInvariants out;
    out.k = pole - 1;
    try {
        out.mu = residue(a);
    } catch (const InsufficientPrecision&) {
        throw InsufficientPrecision("insufficient precision, retry with larger N");
    }
    out.strong = fr.strong;
    out.weak = fr.weak;
    return out;
}

bool tangent_to_axis(const Vec2& d, Axis axis) { return axis == Axis::XZero ? d[0].is_zero() : d[1].is_zero(); }

SingClass classify(const DiffForm& w, const JetOptions& opts)
{
    SingClass c;
    if (!w.singular_at_origin()) {
        c.kind = SingClass::Kind::Regular;
        return c;
    }
    LinearData l = linear_part(w);
    bool zero = true;
    for (const auto& row : l.matrix)
        for (const auto& e : row)
            zero = zero && e.is_zero();
    if (zero) {
        c.kind = SingClass::Kind::NonReduced;
        c.reason = NonReducedReason::ZeroLinearPart;
        return c;
    }
    if (l.det.is_zero()) {
        if (l.trace.is_zero()) {
            c.kind = SingClass::Kind::NonReduced;
            c.reason = NonReducedReason::NilpotentLinearPart;
            return c;
        }
        int n = opts.order > 0 ? opts.order : default_jet_order();
        while (true) {
            try {
                SaddleNodeInvariants inv = saddle_node_invariants(w, n);
                c.kind = SingClass::Kind::SaddleNode;
                c.k = inv.k;
                c.mu = inv.mu;
                c.strong = inv.strong;
                c.weak = inv.weak;
                c.jet_order = n;
                return c;
            } catch (const InsufficientPrecision&) {
                if (n >= opts.cap)
                    throw;
                n = std::min(2 * n, opts.cap);
            }
        }
    }
    c.ratio = ratio_decide(l);
    if (c.ratio->kind == RatioKind::RationalPositive) {
        c.kind = SingClass::Kind::NonReduced;
        c.reason = NonReducedReason::PositiveRationalRatio;
        return c;
    }
    c.kind = SingClass::Kind::ReducedNonDegenerate;
    if (c.ratio->kind == RatioKind::RationalNegative)
        c.caveat = "rational-negative ratio: linearizability not decided";
    return c;
}

} // namespace foliation
