#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foliation/corpus.hpp"
#include "foliation/cycles.hpp"
#include "foliation/numerics.hpp"

#include <cmath>
#include <numbers>

using namespace foliation;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

ComplexForm linear_form(long p, long q) { return ComplexForm::from(corpus::linear(make_rational(p, q))); }

} // namespace

TEST_CASE("integrator on y' = i y")
{
    OdeResult r = integrate_dp45(
        [](double, cplx y, cplx& dy) {
            dy = I * y;
            return true;
        },
        0, 2 * pi, 1.0, {});
    CHECK(r.complete);
    CHECK(std::abs(r.y - 1.0) < 1e-9);
    CHECK(r.steps > 0);
}

TEST_CASE("lift_path examples")
{
    // lambda x dy - y dx: around |x| = 1/2 the fiber is multiplied by e^{2 pi i / lambda}, and
    // around |y| = 1/2 (x as fiber) by e^{2 pi i lambda}
    ComplexForm f = linear_form(-2, 3);
    for (double y0 : {0.1, 0.02}) {
        LiftResult a = lift_path(f, CPath::circle(0.5), y0);
        CHECK(a.status == LiftStatus::Complete);
        CHECK(std::abs(a.final_y - y0 * std::exp(2 * pi * I / (-2.0 / 3))) < 1e-8);
        LiftResult b = lift_path(f.swapped(), CPath::circle(0.5), y0);
        CHECK(std::abs(b.final_y - y0 * std::exp(2 * pi * I * (-2.0 / 3))) < 1e-8);
        CHECK(b.max_form_residual < 1e-6);
    }

    LiftResult m = lift_path(ComplexForm::from(corpus::model_sn(1, 0)), CPath::circle(0.2), 0.05);
    CHECK(std::abs(m.final_y - 0.05) < 1e-8);

    LiftResult e = lift_path(ComplexForm::from(corpus::euler()), CPath::circle(0.2), 0.01);
    CHECK(std::abs(e.final_y - (0.01 + 2 * pi * I * std::exp(-5.0))) < 1e-6);
}

TEST_CASE("lift statuses")
{
    // start on {B = 0}
    LiftResult t = lift_path(linear_form(-1, 1), CPath::segment(0.0, 1.0), 0.1);
    CHECK(t.status == LiftStatus::TransversalityFailure);
    CHECK(t.final_y == cplx(0.1));

    // |y| grows like e^{(1 - cos t)/rho} around the model saddle-node
    LiftOptions o;
    o.y_bound = 0.5;
    LiftResult l = lift_path(ComplexForm::from(corpus::model_sn(1, 0)), CPath::circle(0.5), 0.1, o);
    CHECK(l.status == LiftStatus::LeftDomain);
    CHECK(l.t_end < 1);

    LiftResult c = lift_path(linear_form(-1, 1), CPath::circle(0.5), 0.1);
    CHECK(c.status == LiftStatus::Complete);
    CHECK(c.samples.front().t == 0);
    CHECK(c.samples.back().t == doctest::Approx(1));
}

TEST_CASE("holonomy maps")
{
    std::vector<cplx> grid;
    for (int i = 0; i < 10; ++i)
        grid.push_back(0.01 + 0.01 * i + 0.005 * I * static_cast<double>(i % 3));

    for (const HolonomyPoint& p : holonomy(linear_form(-1, 1), CPath::circle(1.0), grid))
        CHECK(std::abs(p.y1 - p.y0) < 1e-9);

    for (const HolonomyPoint& p : holonomy(ComplexForm::from(corpus::euler()), CPath::circle(0.2), grid))
        CHECK(std::abs(p.y1 - p.y0 - 2 * pi * I * std::exp(-5.0)) < 1e-6);

    for (const HolonomyPoint& p : holonomy(ComplexForm::from(corpus::model_sn(1, 0)), CPath::circle(0.2, 2), grid))
        CHECK(std::abs(p.y1 - p.y0) < 1e-8);

    CHECK_THROWS_AS(holonomy(linear_form(-1, 1), CPath::segment(0.5, 1.0), grid), std::invalid_argument);
}

TEST_CASE("path reversal")
{
    LiftOptions o;
    const double tol = o.ctl.rtol;
    struct Item {
        ComplexForm f;
        CPath path;
        cplx y0;
    };
    std::vector<Item> items{
        {linear_form(-2, 3), CPath::circle(0.5), 0.1},
        {ComplexForm::from(corpus::euler()), CPath::circle(0.2), 0.01},
        {ComplexForm::from(corpus::model_sn(1, 0)), CPath::arc(0.0, 0.3, 0, 2), 0.05},
        {ComplexForm::from(corpus::omega_n(2)), CPath::segment(0.3, 0.3 + 0.2 * I), 0.4},
    };
    for (const Item& it : items) {
        LiftResult fwd = lift_path(it.f, it.path, it.y0, o);
        REQUIRE(fwd.status == LiftStatus::Complete);
        LiftResult back = lift_path(it.f, it.path.reversed(), fwd.final_y, o);
        REQUIRE(back.status == LiftStatus::Complete);
        CHECK(std::abs(back.final_y - it.y0) < 10 * tol * std::max(1.0, std::abs(it.y0)));
    }
}

TEST_CASE("tolerance scaling")
{
    std::vector<std::pair<ComplexForm, cplx>> items{
        {linear_form(-2, 3), 0.1},
        {ComplexForm::from(corpus::euler()), 0.01},
        {ComplexForm::from(corpus::model_sn(1, 0)), 0.05},
        {ComplexForm::from(corpus::model_sn(2, make_rational(1, 2))), 0.02},
    };
    for (auto& [f, y0] : items) {
        LiftOptions coarse, fine;
        coarse.ctl.rtol = 1e-8;
        coarse.ctl.atol = 1e-10;
        fine.ctl.rtol = coarse.ctl.rtol / 2;
        fine.ctl.atol = coarse.ctl.atol / 2;
        LiftResult a = lift_path(f, CPath::circle(0.4), y0, coarse);
        LiftResult b = lift_path(f, CPath::circle(0.4), y0, fine);
        REQUIRE(a.status == LiftStatus::Complete);
        CHECK(std::abs(a.final_y - b.final_y) < a.error_estimate);
    }
}

TEST_CASE("homotopy invariance of loop parameterizations")
{
    CPath one = CPath::circle(0.3);
    CPath four = CPath::arc(0.0, 0.3, 0, pi / 2);
    four.then(CPath::arc(0.0, 0.3, pi / 2, pi)).then(CPath::arc(0.0, 0.3, pi, 3 * pi / 2));
    four.then(CPath::arc(0.0, 0.3, 3 * pi / 2, 2 * pi));
    for (const ComplexForm& f : {ComplexForm::from(corpus::euler()), linear_form(-2, 3)}) {
        cplx a = lift_path(f, one, 0.02).final_y;
        cplx b = lift_path(f, four, 0.02).final_y;
        CHECK(std::abs(a - b) < 10 * 1e-10);
    }
}

TEST_CASE("first integral is conserved along model lifts")
{
    struct Item {
        int k;
        long mu_num, mu_den;
        CPath path;
    };
    // arcs away from the negative real axis keep x^(-mu) on one branch
    std::vector<Item> items{{1, 0, 1, CPath::circle(0.3)},
                            {2, 0, 1, CPath::circle(0.5)},
                            {1, 1, 2, CPath::arc(0.0, 0.4, -pi / 2, pi / 2)},
                            {2, -1, 3, CPath::arc(0.0, 0.6, -pi / 2, pi / 3)}};
    for (const Item& it : items) {
        CAPTURE(it.k);
        ComplexForm f = ComplexForm::from(corpus::model_sn(it.k, make_rational(it.mu_num, it.mu_den)));
        double mu = static_cast<double>(it.mu_num) / it.mu_den;
        LiftResult r = lift_path(f, it.path, 0.01);
        REQUIRE(r.status == LiftStatus::Complete);
        cplx h0 = model_first_integral(it.k, mu, r.samples.front().x, r.samples.front().y);
        for (const LiftSample& s : r.samples)
            CHECK(std::abs(model_first_integral(it.k, mu, s.x, s.y) - h0) < 10 * 1e-10 * std::abs(h0));
    }
}

TEST_CASE("stability beams")
{
    PreparedForm a;
    a.lambda = cplx(-1, 1);
    BeamReport ra = beam_verify(a, std::log(0.3), 0.5, pi / 2 - 0.01, 100, 20);
    CHECK(ra.precondition);
    CHECK(ra.rays.size() == 100);
    CHECK(ra.violations.empty());

    PreparedForm b;
    b.lambda = -1.0;
    b.R = [](cplx x, cplx) { return x / 2.0; };
    b.M = 0.5;
    BeamReport rb = beam_verify(b, std::log(0.3), 0.5, pi / 3, 100, 20);
    CHECK(rb.precondition);
    CHECK(rb.violations.empty());

    PreparedForm c;
    c.kind = PreparedForm::Kind::SaddleNode;
    c.k = 1;
    BeamReport rc = beam_verify(c, std::log(0.3), 0.5, pi / 3, 100, 20);
    CHECK(rc.violations.empty());

    // outside the beam |y| grows: theta = -1 reverses every ray
    BeamReport bad = beam_verify(a, std::log(0.3), 0.5, pi, 3, 5);
    CHECK_FALSE(bad.violations.empty());
    CHECK_FALSE(beam_verify(b, std::log(0.3), 0.5, pi / 2, 3, 5).precondition);
}

TEST_CASE("inamovible paths Gamma_c")
{
    for (double c : {0.5, 0.9}) {
        GammaCReport g = gamma_c_verify(c);
        CHECK(g.pass);
        CHECK(std::abs(g.start_x - cplx(-c)) < 1e-15);
        CHECK(std::abs(g.end_y - 1.0) < 1e-15);
        CHECK(g.max_h0_error < 1e-9);
        CHECK(g.samples == 1000);
    }
    CHECK_THROWS_AS(gamma_c_verify(1.5), std::invalid_argument);
    CHECK_THROWS_AS(gamma_c_verify(0), std::invalid_argument);

    const double c = 0.5;
    auto x = [c](double t) { return gamma_c_x(c, t); };
    CHECK(tangency_residual(x, [c](double t) { return gamma_c_y(c, t); }, 1000) < 1e-8);
    // a constant factor maps leaves to leaves; a varying one does not
    CHECK(tangency_residual(x, [c](double t) { return 1.01 * gamma_c_y(c, t); }, 1000) < 1e-8);
    CHECK(tangency_residual(x, [c](double t) { return (1.0 + 0.01 * std::exp(I * t)) * gamma_c_y(c, t); }, 1000) >
          1e-4);
}

TEST_CASE("pulled-back cycle gamma_c")
{
    for (double c : {0.5, 0.7}) {
        CAPTURE(c);
        PsiCycleReport r = psi_cycle_verify(c);
        CHECK(r.pass);
        CHECK(r.closed);
        CHECK(r.closure_gap < 1e-6);
        CHECK(r.max_lift_deviation < 1e-6);
        CHECK(r.winding_x0 == 0);
        CHECK(r.winding_y_plus == 0);
        CHECK(r.winding_y_minus == 0);
        CHECK_FALSE(r.winding_y0.has_value());
        CHECK_FALSE(r.notes.empty());
    }
}

TEST_CASE("roughness")
{
    std::vector<cplx> circle, offset, radial, open_arc;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double t = 2 * pi * i / n;
        circle.push_back(2.0 * std::exp(I * t));
        offset.push_back(1.0 + 2.0 * std::exp(I * t));
    }
    for (int i = 1; i <= 50; ++i)
        radial.push_back(cplx(0.02 * i, 0.01 * i));
    for (int i = 0; i <= 100; ++i)
        open_arc.push_back(std::exp(I * (0.01 * i)));

    Roughness rc = roughness(circle, true);
    CHECK_FALSE(rc.infinite);
    CHECK(rc.value < 1e-12);
    // oracle: maximize |arg(r e^{it} / (c + r e^{it}))| over a fine grid
    double best = 0;
    for (int i = 0; i < 2000000; ++i) {
        double t = 2 * pi * i / 2000000;
        best = std::max(best, std::abs(std::arg(2.0 * std::exp(I * t) / (1.0 + 2.0 * std::exp(I * t)))));
    }
    Roughness ro = roughness(offset, true);
    CHECK(std::abs(ro.value - best) < 1e-6);
    CHECK(std::abs(ro.value - pi / 6) < 1e-6);
    CHECK(roughness(radial, false).infinite);
    CHECK(roughness(open_arc, false).value < 1e-6);
    std::vector<cplx> through_zero{1.0, 0.0, I};
    CHECK_THROWS_AS(roughness(through_zero, false), std::invalid_argument);
}

TEST_CASE("sigma domains")
{
    SigmaOptions o;
    o.grid = 41;
    o.directions = 90;
    const double r = 0.1;
    SigmaResult lin = sigma_domain(linear_form(-1, 1), 0.5, r, o);
    double h = 2 * r / (o.grid - 1);
    for (int i = 0; i < o.grid; ++i)
        for (int j = 0; j < o.grid; ++j) {
            double m = std::abs(cplx(-r + j * h, -r + i * h));
            if (m < r * (1 - 1e-6))
                CHECK(lin.member[i][j]);
            else if (m > r * (1 + 1e-6))
                CHECK_FALSE(lin.member[i][j]);
        }

    // x^2 dy - y dx around |x| = rho: |y| is multiplied by exp((1 - cos t)/rho), so Sigma is the disk r e^{-2/rho}
    o.grid = 81;
    SigmaResult s = sigma_domain(ComplexForm::from(corpus::model_sn(1, 0)), 0.5, r, o);
    CHECK(s.contains_origin);
    CHECK(s.components == 1);
    for (cplx z : s.boundary)
        CHECK(std::abs(std::abs(z) - r * std::exp(-4.0)) < 10 * s.resolution);
    CHECK_FALSE(s.boundary_roughness.infinite);
    CHECK(s.boundary_roughness.value < s.roughness_slack + 1e-9);
}

TEST_CASE("path construction")
{
    CPath p = CPath::segment(1.0, 2.0);
    p.then(CPath::segment(2.0, 2.0 + I));
    CHECK(p.size() == 2);
    CHECK(p.start() == cplx(1.0));
    CHECK(p.end() == 2.0 + I);
    CHECK(p.point(1.5) == 2.0 + 0.5 * I);
    CHECK_FALSE(p.closed());
    CPath r = p.reversed();
    CHECK(r.start() == p.end());
    CHECK(r.end() == p.start());
    CHECK(r.velocity(0.5) == -p.velocity(1.5));
    CHECK(CPath::circle(0.5, 2).closed(1e-12));
    CPath lg = CPath::log_segment(0.0, I * pi);
    CHECK(std::abs(lg.end() + 1.0) < 1e-15);
}
