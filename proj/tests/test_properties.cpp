#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foliation/analysis.hpp"
#include "foliation/corpus.hpp"
#include "foliation/numerics.hpp"
#include "foliation/parse.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

using namespace foliation;

namespace {

FieldElem q(long a, long b = 1) { return FieldElem(make_rational(a, b)); }

Mat2 random_gl2(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    for (;;) {
        Mat2 m{{{q(num(rng), den(rng)), q(num(rng), den(rng))}, {q(num(rng), den(rng)), q(num(rng), den(rng))}}};
        if (!(m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_identically_zero())
            return m;
    }
}

void check_same_class(const SingClass& a, const SingClass& b)
{
    REQUIRE(a.kind == b.kind);
    if (a.kind == SingClass::Kind::SaddleNode) {
        CHECK(a.k == b.k);
        CHECK(*a.mu == *b.mu);
    } else if (a.ratio) {
        REQUIRE(b.ratio);
        CHECK(a.ratio->s == b.ratio->s);
        CHECK(a.ratio->kind == b.ratio->kind);
        CHECK(a.ratio->lambda == b.ratio->lambda);
    }
}

// Blow-ups of a form and of the rational points on its divisors, to the given depth.
void for_each_blowup(const DiffForm& w, int depth, const std::function<void(const DiffForm&, const BlowupResult&)>& fn)
{
    if (depth == 0 || !w.singular_at_origin())
        return;
    BlowupResult b = blowup_point(w);
    fn(w, b);
    if (b.dicritical)
        return;
    for (const DivisorPoint& p : divisor_singularities(b))
        if (p.singular && p.local_form.field()->degree() == 1 && !classify(p.local_form).is_reduced())
            for_each_blowup(p.local_form, depth - 1, fn);
}

} // namespace

TEST_CASE("classification invariants under random linear changes")
{
    std::mt19937 rng(2024);
    std::vector<DiffForm> forms{corpus::euler(),
                                corpus::model_sn(1, make_rational(-1)),
                                corpus::model_sn(2, make_rational(1, 3)),
                                corpus::linear(make_rational(-2, 3)),
                                corpus::saddle(),
                                parse_form("(x - y) dx + (x + 2y) dy"),
                                parse_form("(y + x^2) dx + (3 x + y^2) dy"),
                                parse_form("x^3 dy - (y + x y - x^2) dx")};
    for (const DiffForm& w : forms) {
        CAPTURE(w.str());
        SingClass base = classify(w);
        for (int i = 0; i < 20; ++i) {
            Mat2 m = random_gl2(rng);
            check_same_class(base, classify(linear_change(w, m)));
        }
    }
}

TEST_CASE("chart transitions on all corpus blow-ups")
{
    int checked = 0;
    for (const auto& c : corpus::all_cases()) {
        CAPTURE(c.name);
        for_each_blowup(c.centered(), 4, [&](const DiffForm& w, const BlowupResult& b) {
            const FieldPtr& f = w.field();
            int div = b.dicritical ? b.nu + 1 : b.nu;
            Poly2 x = Poly2::x(f), y = Poly2::y(f);
            DiffForm px = pullback(w, x, x * y), py = pullback(w, x * y, y);
            CHECK(px.A == b.chart_x.A * x.pow(div));
            CHECK(px.B == b.chart_x.B * x.pow(div));
            CHECK(py.A == b.chart_y.A * y.pow(div));
            CHECK(py.B == b.chart_y.B * y.pow(div));
            // on the overlap v u = 1: chart_y(u, w) = u^div * (chart_x pulled back by (u w, 1/u))
            for (cplx u : {cplx(0.7, 0.2), cplx(-0.4, 0.9)})
                for (cplx wv : {cplx(0.3, -0.5), cplx(1.1, 0.1)}) {
                    cplx ax = b.chart_x.A.evaluate(u * wv, 1.0 / u), bx = b.chart_x.B.evaluate(u * wv, 1.0 / u);
                    cplx s = std::pow(u, div);
                    CHECK(std::abs(s * (ax * wv - bx / (u * u)) - b.chart_y.A.evaluate(u, wv)) < 1e-9);
                    CHECK(std::abs(s * ax * u - b.chart_y.B.evaluate(u, wv)) < 1e-9);
                }
            ++checked;
        });
    }
    CHECK(checked > 15);
}

TEST_CASE("tree acyclicity and corner count")
{
    std::vector<DiffForm> forms;
    for (const auto& c : corpus::all_cases())
        forms.push_back(c.centered());
    forms.push_back(parse_form("(y^2 - x^5) dx + x^2 y dy"));
    forms.push_back(parse_form("3 x^2 y dx + (x^3 - 2 y) dy"));
    for (const DiffForm& w : forms) {
        CAPTURE(w.str());
        ReductionTree t = reduce(w);
        CHECK(cs_check(t).pass);
        if (t.components.empty())
            continue;
        std::map<int, int> parent;
        for (const auto& c : t.components)
            parent[c.id] = c.id;
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        int cycles = 0;
        for (auto [a, b] : t.corners) {
            if (find(a) == find(b))
                ++cycles;
            parent[find(a)] = find(b);
        }
        CHECK(cycles == 0);
        CHECK(t.corners.size() + 1 == t.components.size());
        std::set<std::pair<int, int>> unique;
        for (auto [a, b] : t.corners)
            unique.insert({std::min(a, b), std::max(a, b)});
        CHECK(unique.size() == t.corners.size());
        for (const SingularPoint& p : t.points)
            CHECK(p.cls.is_reduced());
        // components are born in order of their ids
        for (size_t i = 0; i + 1 < t.components.size(); ++i)
            CHECK(t.components[i].birth_step < t.components[i + 1].birth_step);
    }
}

TEST_CASE("path reversal and tolerance scaling on numeric lifts")
{
    std::vector<DiffForm> forms{corpus::linear(make_rational(-2, 3)), corpus::model_sn(1, 0),
                                corpus::model_sn(2, make_rational(1, 2)), corpus::euler(),
                                corpus::omega_n(1), corpus::omega_n(3)};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> rad(0.25, 0.45), ang(-1, 1);
    int complete = 0;
    for (const DiffForm& w : forms) {
        CAPTURE(w.str());
        ComplexForm f = ComplexForm::from(w);
        for (int i = 0; i < 3; ++i) {
            double r0 = rad(rng);
            CPath path = CPath::arc(0.0, r0, ang(rng), ang(rng) + 4);
            // fibers away from {B = 0}, where lifts are ill-conditioned
            cplx y0(0.1 * (i + 1), 0.05);
            LiftResult fwd = lift_path(f, path, y0);
            if (fwd.status != LiftStatus::Complete)
                continue;
            ++complete;
            LiftResult back = lift_path(f, path.reversed(), fwd.final_y);
            REQUIRE(back.status == LiftStatus::Complete);
            // per-step control: the global budget is the sum of the accepted local errors
            double budget = std::max(10 * 1e-10, fwd.error_estimate + back.error_estimate);
            CHECK(std::abs(back.final_y - y0) < budget);

            LiftOptions coarse, fine;
            coarse.ctl.rtol = 1e-8;
            coarse.ctl.atol = 1e-10;
            fine.ctl.rtol = 5e-9;
            fine.ctl.atol = 5e-11;
            LiftResult a = lift_path(f, path, y0, coarse), b = lift_path(f, path, y0, fine);
            CHECK(std::abs(a.final_y - b.final_y) < a.error_estimate);
        }
    }
    CHECK(complete >= 12);
}
