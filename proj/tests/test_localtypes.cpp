#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foliation/corpus.hpp"
#include "foliation/extension.hpp"
#include "foliation/localtypes.hpp"
#include "foliation/parse.hpp"

#include <cstdlib>
#include <random>

using namespace foliation;

namespace {

DiffForm F(const std::string& s) { return parse_form(s); }
Rational r(long a, long b = 1) { return make_rational(a, b); }
FieldElem q(long a, long b = 1) { return FieldElem(r(a, b)); }

LinearData diag(const FieldElem& a, const FieldElem& b)
{
    LinearData l;
    l.matrix = {{{a, FieldElem(0)}, {FieldElem(0), b}}};
    l.trace = a + b;
    l.det = a * b;
    return l;
}

LinearData trace_det(long t, long d)
{
    LinearData l;
    l.matrix = {{{q(0), q(1)}, {q(-d), q(t)}}};
    l.trace = q(t);
    l.det = q(d);
    return l;
}

} // namespace

TEST_CASE("ratio_decide")
{
    auto v = ratio_decide(diag(q(1), q(-1)));
    CHECK(v.s == q(-2));
    CHECK(v.kind == RatioKind::RationalNegative);
    CHECK(*v.lambda == -1);

    v = ratio_decide(diag(q(1), q(1)));
    CHECK(v.s == q(2));
    CHECK(v.kind == RatioKind::RationalPositive);
    CHECK(*v.lambda == 1);

    v = ratio_decide(trace_det(1, -1));
    CHECK(v.s == q(-3));
    CHECK(v.kind == RatioKind::IrrationalRealNegative);
    CHECK(!v.lambda);

    v = ratio_decide(trace_det(3, 1)); // s = 7
    CHECK(v.kind == RatioKind::IrrationalRealPositive);
    v = ratio_decide(trace_det(1, 1)); // s = -1
    CHECK(v.kind == RatioKind::NonReal);

    v = ratio_decide(diag(q(3), q(-2)));
    CHECK(v.kind == RatioKind::RationalNegative);
    CHECK(*v.lambda == r(-3, 2));
    CHECK(*v.lambda_inv == r(-2, 3));
    CHECK(*v.lambda * *v.lambda_inv == 1);

    CHECK_THROWS(ratio_decide(diag(q(1), q(0))));
}

TEST_CASE("ratio_decide over extension fields")
{
    auto k = NumberField::over_rationals(QPoly{-2, 0, 1});
    FieldElem t = FieldElem::generator(k);
    // eigenvalues sqrt2 and -sqrt2: ratio -1 although the entries are irrational
    auto v = ratio_decide(diag(t, -t));
    CHECK(v.kind == RatioKind::RationalNegative);
    CHECK(*v.lambda == -1);
    // eigenvalues 1 and sqrt2: s = 1/sqrt2 + sqrt2 is irrational on the only branch
    v = ratio_decide(diag(FieldElem(k, 1), t));
    CHECK(v.kind == RatioKind::ConjugateDependent);

    // t = +-2: eigenvalues 1 and t give s = 5t/4, rational on each branch once the field splits
    auto k2 = NumberField::over_rationals(QPoly{-4, 0, 1});
    FieldElem u = FieldElem::generator(k2);
    try {
        ratio_decide(diag(FieldElem(k2, 1), u));
        FAIL("expected a split");
    } catch (const SplitRequired& e) {
        CHECK(e.event().m1 * e.event().m2 == k2->modulus());
        auto [b1, b2] = split_field(e.event());
        for (const auto& b : {b1, b2}) {
            auto v2 = ratio_decide(diag(FieldElem(b, 1), restrict_to_branch(u, b)));
            CHECK(v2.kind == (v2.s.to_rational() > 0 ? RatioKind::RationalPositive : RatioKind::RationalNegative));
            CHECK(v2.s * v2.s == q(25, 4));
        }
    }
    auto k3 = NumberField::over_rationals(QPoly{-2, -1, 1}); // (t - 2)(t + 1)
    FieldElem w = FieldElem::generator(k3);
    CHECK_THROWS_AS(ratio_decide(diag(w * w + FieldElem(k3, 1), FieldElem(k3, 1))), SplitRequired);
}

TEST_CASE("classify")
{
    auto c = classify(F("x dy + y dx"));
    CHECK(c.kind == SingClass::Kind::ReducedNonDegenerate);
    CHECK(*c.ratio->lambda == -1);
    CHECK(!c.caveat.empty());

    c = classify(corpus::euler());
    CHECK(c.kind == SingClass::Kind::SaddleNode);
    CHECK(c.k == 1);
    CHECK(*c.mu == q(0));

    c = classify(corpus::omega_n(1));
    CHECK(c.kind == SingClass::Kind::NonReduced);
    CHECK(c.reason == NonReducedReason::PositiveRationalRatio);
    CHECK(*c.ratio->lambda == 1);

    CHECK(classify(F("dy + x dx")).kind == SingClass::Kind::Regular);
    c = classify(corpus::cusp());
    CHECK(c.kind == SingClass::Kind::NonReduced);
    CHECK(c.reason == NonReducedReason::NilpotentLinearPart);
    c = classify(corpus::sqrt2_star());
    CHECK(c.reason == NonReducedReason::ZeroLinearPart);
    c = classify(corpus::linear(r(-2, 3)));
    CHECK(c.kind == SingClass::Kind::ReducedNonDegenerate);
    CHECK(c.ratio->kind == RatioKind::RationalNegative);
    c = classify(F("(x + y) dx + (x - y) dy"));
    CHECK(c.kind == SingClass::Kind::ReducedNonDegenerate);
}

TEST_CASE("saddle_node_invariants")
{
    auto inv = saddle_node_invariants(corpus::euler(), 10);
    CHECK(inv.k == 1);
    CHECK(inv.mu == q(0));

    inv = saddle_node_invariants(F("(x - 1)*y dx + x^2 dy"), 10);
    CHECK(inv.k == 1);
    CHECK(inv.mu == q(-1));

    inv = saddle_node_invariants(F("x^3 dy - y dx"), 10);
    CHECK(inv.k == 2);
    CHECK(inv.mu == q(0));

    for (int k = 1; k <= 4; ++k)
        for (long mu : {-3L, 0L, 2L}) {
            inv = saddle_node_invariants(corpus::model_sn(k, r(mu, 5)), 2 * k + 8);
            CHECK(inv.k == k);
            CHECK(inv.mu == q(mu, 5));
        }

    CHECK_THROWS_WITH(saddle_node_invariants(corpus::cusp(), 10), doctest::Contains("not elementary"));
    CHECK_THROWS_AS(saddle_node_invariants(F("x^5 dy - y dx"), 3), InsufficientPrecision);
}

TEST_CASE("classify retries with a larger jet order")
{
    // k = 6 needs more than the starting order
    JetOptions o;
    o.order = 4;
    auto c = classify(corpus::model_sn(6, r(1, 3)), o);
    CHECK(c.kind == SingClass::Kind::SaddleNode);
    CHECK(c.k == 6);
    CHECK(*c.mu == q(1, 3));
    CHECK(c.jet_order > 4);

    o.cap = 5;
    CHECK_THROWS_AS(classify(corpus::model_sn(6, r(1, 3)), o), InsufficientPrecision);
}

TEST_CASE("jet order from the environment")
{
    setenv("FOLIATION_JET_ORDER", "14", 1);
    CHECK(default_jet_order() == 14);
    CHECK(classify(corpus::euler()).jet_order == 14);
    setenv("FOLIATION_JET_ORDER", "junk", 1);
    CHECK(default_jet_order() == 10);
    unsetenv("FOLIATION_JET_ORDER");
    CHECK(default_jet_order() == 10);
}

TEST_CASE("separatrix jets")
{
    // Euler: weak separatrix y = -x - x^2 - 2x^3 - 6x^4 - ...
    auto j = saddle_node_separatrix(corpus::euler(), SeparatrixJet::Direction::Weak, 4);
    KPoly g = j.graph();
    std::vector<Rational> expect{0, -1, -1, -2, -6};
    REQUIRE(g.degree() == 4);
    for (int i = 0; i <= 4; ++i)
        CHECK(g.coeff(i) == FieldElem(expect[i]));

    // recurrence oracle a_{n+1} = n a_n to higher order
    g = saddle_node_separatrix(corpus::euler(), SeparatrixJet::Direction::Weak, 9).graph();
    Rational a = -1;
    for (int n = 1; n <= 9; ++n) {
        CHECK(g.coeff(n) == FieldElem(a));
        a *= n;
    }

    // linear forms: both axes
    auto lin = corpus::linear(r(-2, 3));
    CHECK(separatrix_jet(lin, 8).jet.is_zero());
    CHECK(separatrix_jet(lin.swap_axes(), 8).jet.is_zero());

    // strong separatrix of x^2 dy - y dx is {x = 0}
    j = saddle_node_separatrix(F("x^2 dy - y dx"), SeparatrixJet::Direction::Strong, 8);
    CHECK(j.jet.is_zero());
    CHECK(j.frame[0][0] == q(0));
    CHECK_THROWS(j.graph());
}

TEST_CASE("jet invariance residual")
{
    // y = s(x) invariant for a saddle with non-resonant ratio
    auto w = F("(-y + x^2 + x*y^2) dx + (3x + y^2 + x^3) dy");
    auto l = linear_part(w);
    CHECK(l.matrix[1][0] == q(0)); // x-axis is an eigendirection
    const int N = 8;
    auto j = separatrix_jet(w, N);
    Poly2 s(NumberField::rationals());
    for (int i = 0; i <= j.jet.degree(); ++i)
        s += Poly2::monomial(j.jet.coeff(i), i, 0);
    // A(x, s) + B(x, s) s' = O(x^{N+1})
    Poly2 ds(NumberField::rationals());
    for (int i = 1; i <= j.jet.degree(); ++i)
        ds += Poly2::monomial(j.jet.coeff(i) * FieldElem(i), i - 1, 0);
    Poly2 e = w.A.subst(Poly2::x(), s) + w.B.subst(Poly2::x(), s) * ds;
    for (const auto& [ex, c] : e.terms())
        CHECK(ex.first > N);
}

TEST_CASE("cs_index")
{
    CHECK(cs_index(corpus::linear(r(-2, 3)), Axis::XZero) == q(-2, 3));
    CHECK(cs_index(corpus::linear(r(-2, 3)), Axis::YZero) == q(-3, 2));
    CHECK(cs_index(F("x dy + y dx"), Axis::XZero) == q(-1));
    CHECK(cs_index(F("x dy + y dx"), Axis::YZero) == q(-1));
    // saddle-node along the strong separatrix {x = 0}
    CHECK(cs_index(corpus::model_sn(1, 0), Axis::XZero) == q(0));
    CHECK(cs_index(corpus::model_sn(2, r(3, 7)), Axis::XZero) == q(0));
    // along the weak separatrix {y = 0}: mu
    CHECK(cs_index(corpus::model_sn(2, r(3, 7)), Axis::YZero) == q(3, 7));
    CHECK(cs_index(F("(x - 1)*y dx + x^2 dy"), Axis::YZero) == q(-1));

    CHECK_THROWS_WITH(cs_index(corpus::euler(), Axis::YZero), doctest::Contains("not invariant"));
    CHECK_THROWS_AS(cs_integrand(corpus::model_sn(3, r(1)), Axis::YZero, 1), InsufficientPrecision);
    CHECK_THROWS_AS(residue(cs_integrand(corpus::model_sn(3, r(1)), Axis::YZero, 1)), InsufficientPrecision);
}

TEST_CASE("cs_index reproduces the eigenvalue ratio on a grid of linear forms")
{
    // omega = a x dy - b y dx: -A_y/B = b/(a x), so CS along {y = 0} is b/a and along {x = 0} is a/b
    int count = 0;
    for (long a : {1L, 2L, 3L, -1L, -2L, 5L, 7L})
        for (long b : {1L, -1L, 2L, -3L, 4L, -5L, 6L, 9L}) {
            if (count == 50)
                break;
            ++count;
            auto w = F(std::to_string(a) + " x dy - (" + std::to_string(b) + ") y dx");
            auto l = linear_part(w);
            CHECK(l.matrix[0][0] == q(a));
            CHECK(l.matrix[1][1] == q(b));
            FieldElem cx = cs_index(w, Axis::XZero), cy = cs_index(w, Axis::YZero);
            CHECK(cx == q(a, b));
            CHECK(cy == q(b, a));
            CHECK(cx * cy == q(1));
        }
    CHECK(count == 50);
}

TEST_CASE("mu equals cs_index along the straightened weak separatrix")
{
    for (const auto& w : {corpus::euler(), F("(x - 1)*y dx + x^2 dy"), F("(x + y + y^2) dx + (x^2 - x*y) dy")}) {
        auto inv = saddle_node_invariants(w, 16);
        auto j = saddle_node_separatrix(w, SeparatrixJet::Direction::Weak, 16);
        DiffForm v = linear_change(w, j.frame);
        Poly2 s(v.field());
        for (int i = 0; i <= j.jet.degree(); ++i)
            s += Poly2::monomial(j.jet.coeff(i), i, 0);
        // Y -> Y + s(X), then drop the terms of A that keep {Y = 0} from being invariant beyond order 16
        DiffForm straight = pullback(v, Poly2::x(v.field()), Poly2::y(v.field()) + s);
        Poly2 a0(v.field());
        for (const auto& [e, c] : straight.A.terms())
            if (e.second > 0 || e.first <= 16)
                a0 += Poly2::monomial(c, e.first, e.second);
        straight.A = a0;
        CHECK(cs_index(straight, Axis::YZero) == inv.mu);
    }
}

TEST_CASE("tangent_to_axis")
{
    Vec2 vertical{q(0), q(1)}, horizontal{q(1), q(0)}, diag{q(1), q(1)};
    CHECK(tangent_to_axis(vertical, Axis::XZero));
    CHECK(!tangent_to_axis(vertical, Axis::YZero));
    CHECK(tangent_to_axis(horizontal, Axis::YZero));
    CHECK(!tangent_to_axis(diag, Axis::YZero));
    CHECK(!tangent_to_axis(diag, Axis::XZero));
}
