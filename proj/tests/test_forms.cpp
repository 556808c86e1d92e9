#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foliation/corpus.hpp"
#include "foliation/forms.hpp"
#include "foliation/parse.hpp"

#include <random>

using namespace foliation;

namespace {

DiffForm F(const std::string& s) { return parse_form(s); }
Poly2 P(const std::string& s) { return parse_poly(s); }
FieldElem q(long a, long b = 1) { return FieldElem(make_rational(a, b)); }

Mat2 mat(long a, long b, long c, long d) { return {{{q(a), q(b)}, {q(c), q(d)}}}; }

} // namespace

TEST_CASE("normalize_primitive")
{
    auto n = normalize_primitive(F("x^2*(x dy + y dx)"));
    CHECK(n.form == F("x dy + y dx"));
    CHECK(n.cofactor == P("x^2"));

    n = normalize_primitive(F("x dy + y dx"));
    CHECK(n.form == F("x dy + y dx"));
    CHECK(n.cofactor == P("1"));

    n = normalize_primitive(F("y*((x - 1)*y dx + x^2 dy)"));
    CHECK(n.form == F("(x - 1)*y dx + x^2 dy"));
    CHECK(n.cofactor == P("y"));

    for (const auto& c : corpus::all_cases()) {
        auto once = normalize_primitive(c.form);
        auto twice = normalize_primitive(once.form);
        CHECK(twice.form == once.form);
        CHECK(twice.cofactor == P("1"));
    }

    CHECK_THROWS(normalize_primitive(DiffForm()));
}

TEST_CASE("linear_part")
{
    auto l = linear_part(F("x dy + y dx"));
    CHECK(l.matrix == mat(1, 0, 0, -1));
    CHECK(l.trace == q(0));
    CHECK(l.det == q(-1));

    l = linear_part(corpus::euler());
    CHECK(l.matrix == mat(0, 0, 1, 1));
    CHECK(l.trace == q(1));
    CHECK(l.det == q(0));

    l = linear_part(corpus::omega_n(1));
    CHECK(l.matrix == mat(1, 0, -1, 1));
    CHECK(l.trace == q(2));
    CHECK(l.det == q(1));

    CHECK_THROWS_WITH(linear_part(F("dy")), doctest::Contains("regular point"));
}

TEST_CASE("linear_part commutes with linear changes")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<DiffForm> forms{corpus::euler(), corpus::omega_n(1), corpus::saddle(), corpus::linear(make_rational(-2, 3)),
                                F("(2x + 3y + x*y) dx + (x - 5y + y^2) dy")};
    int done = 0;
    while (done < 20) {
        Mat2 m = mat(d(rng), d(rng), d(rng), d(rng));
        FieldElem det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det.is_identically_zero())
            continue;
        ++done;
        for (const auto& w : forms) {
            Mat2 j = linear_part(w).matrix;
            Mat2 expect = mat_mul(mat_mul(mat_inverse(m), j), m);
            for (auto& row : expect)
                for (auto& e : row)
                    e *= det;
            CHECK(linear_part(linear_change(w, m)).matrix == expect);
        }
    }
}

TEST_CASE("is_invariant_curve")
{
    CHECK(is_invariant_curve(corpus::omega_n(1), P("x")));
    CHECK(is_invariant_curve(corpus::euler(), P("x")));
    CHECK(is_invariant_curve(corpus::radial(), P("x + y")));
    CHECK(is_invariant_curve(corpus::saddle(), P("y")));
    CHECK(is_invariant_curve(corpus::model_sn(1, 0), P("y")));
    CHECK(is_invariant_curve(corpus::psi_pullback(), P("y - 1")));
    CHECK(is_invariant_curve(corpus::psi_pullback(), P("y + 1")));
    CHECK(is_invariant_curve(corpus::cusp(), P("y^2 - x^3")));
    CHECK(is_invariant_curve(corpus::omega_n(3), P("x")));

    // generic lines are not invariant
    for (const auto& c : corpus::all_cases()) {
        if (c.name == "radial")
            continue;
        CHECK_MESSAGE(!is_invariant_curve(c.form, P("3x - 7y + 1/5")), c.name);
        CHECK_MESSAGE(!is_invariant_curve(c.form, P("2x + 5y")), c.name);
    }
}

TEST_CASE("translate_origin")
{
    auto w = F("x dy + y dx");
    CHECK(translate_origin(w, q(0), q(0)) == w);
    CHECK(translate_origin(F("x dy"), q(1), q(0)) == F("(x + 1) dy"));
    CHECK(translate_origin(F("(x - 1)*y dx + x^2 dy"), q(1), q(0)) == F("x*y dx + (x + 1)^2 dy"));
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(F("x dy + y dx")) == 1);
    CHECK(multiplicity(corpus::euler()) == 1);
    CHECK(multiplicity(F("dy")) == 0);
    CHECK(multiplicity(corpus::cusp()) == 1);
    CHECK(multiplicity(corpus::sqrt2_star()) == 3);
}

TEST_CASE("pullback matches substitution")
{
    auto w = corpus::omega_n(1);
    // x = u w, y = w
    auto p = pullback(w, P("x*y"), P("y"));
    CHECK(p == F("y*((x - 1)*y dx + x^2 dy)"));
}
