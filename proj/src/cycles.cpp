#include "foliation/cycles.hpp"

#include "foliation/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace foliation {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

void check_c(double c)
{
    if (!(c > 0 && c < 1))
        throw std::invalid_argument("c must lie in (0, 1)");
}

// E(u) = exp(-(1 + e^{-iu})/c) and its u-derivative
cplx E(double c, double u) { return std::exp(-(1.0 + std::exp(-I * u)) / c); }
cplx dE(double c, double u) { return E(c, u) * I * std::exp(-I * u) / c; }

double smooth(double s) { return s * s * (3 - 2 * s); }
double dsmooth(double s) { return 6 * s * (1 - s); }

struct Half {
    double c;
    int sign; // -1 for the first half (Gamma_c^-), +1 for the second
    double u(double s) const { return sign < 0 ? -pi + 2 * pi * smooth(s) : pi - 2 * pi * smooth(s); }
    double du(double s) const { return (sign < 0 ? 2 * pi : -2 * pi) * dsmooth(s); }
    cplx x(double s) const { return c * std::exp(I * u(s)); }
    cplx y(double s) const { return static_cast<double>(sign) * std::sqrt(1.0 - E(c, u(s))); }
    cplx dy(double s) const
    {
        cplx yy = y(s);
        if (std::abs(yy) > 1e-4)
            return -dE(c, u(s)) * du(s) / (2.0 * yy);
        constexpr double h = 1e-4;
        if (s < 0.5)
            return (-3.0 * y(s) + 4.0 * y(s + h) - y(s + 2 * h)) / (2 * h);
        return (3.0 * y(s) - 4.0 * y(s - h) + y(s - 2 * h)) / (2 * h);
    }
};

int winding(const std::vector<cplx>& f)
{
    double total = 0;
    for (size_t i = 1; i < f.size(); ++i)
        total += std::arg(f[i] / f[i - 1]);
    return static_cast<int>(std::lround(total / (2 * pi)));
}

} // namespace

cplx gamma_c_x(double c, double t) { return c * std::exp(I * t); }
cplx gamma_c_y(double c, double t) { return E(c, t); }

double tangency_residual(const std::function<cplx(double)>& x, const std::function<cplx(double)>& y, int samples)
{
    double worst = 0;
    constexpr double h = 1e-5;
    for (int i = 0; i < samples; ++i) {
        double t = -pi + 2 * pi * i / (samples - 1);
        cplx dx = (x(t + h) - x(t - h)) / (2 * h), dy = (y(t + h) - y(t - h)) / (2 * h);
        cplx xx = x(t), yy = y(t);
        double scale = std::abs(xx * xx * dy) + std::abs(yy * dx);
        if (scale > 0)
            worst = std::max(worst, std::abs(xx * xx * dy - yy * dx) / scale);
    }
    return worst;
}

GammaCReport gamma_c_verify(double c, int samples, double tol)
{
    check_c(c);
    if (samples < 2)
        throw std::invalid_argument("need at least 2 samples");
    GammaCReport r;
    r.c = c;
    r.samples = samples;
    r.start_x = gamma_c_x(c, -pi);
    r.start_y = gamma_c_y(c, -pi);
    r.end_x = gamma_c_x(c, pi);
    r.end_y = gamma_c_y(c, pi);
    const cplx target_x(-c, 0), target_y(1, 0);
    r.endpoint_error = std::max({std::abs(r.start_x - target_x), std::abs(r.start_y - target_y),
                                 std::abs(r.end_x - target_x), std::abs(r.end_y - target_y)});
    const double h0 = std::exp(-1 / c);
    for (int i = 0; i < samples; ++i) {
        double t = -pi + 2 * pi * i / (samples - 1);
        cplx x = gamma_c_x(c, t), y = gamma_c_y(c, t);
        r.max_h0_error = std::max(r.max_h0_error, std::abs(model_first_integral(1, 0.0, x, y) - h0));
        // x' = i x, y' = y i e^{-it} / c
        cplx dx = I * x, dy = y * (I * std::exp(-I * t) / c);
        double scale = std::abs(x * x * dy) + std::abs(y * dx);
        r.max_residual = std::max(r.max_residual, std::abs(x * x * dy - y * dx) / scale);
    }
    r.pass = r.endpoint_error < 1e-12 && r.max_h0_error < tol && r.max_residual < tol;
    return r;
}

PsiCycleReport psi_cycle_verify(double c, double tol)
{
    check_c(c);
    PsiCycleReport r;
    r.c = c;
    const Half halves[2] = {{c, -1}, {c, 1}};

    // sampled loop, also used to detect a branch cut crossing of the square root
    constexpr int per_half = 4000;
    std::vector<cplx> xs, ys;
    for (const Half& h : halves)
        for (int i = 0; i <= per_half; ++i) {
            double s = static_cast<double>(i) / per_half;
            xs.push_back(h.x(s));
            ys.push_back(h.y(s));
        }
    for (size_t i = 1; i < ys.size(); ++i) {
        double jump = std::abs(ys[i] - ys[i - 1]);
        if (jump > 0.5 * std::max(std::abs(ys[i]), std::abs(ys[i - 1])) && jump > 1e-2)
            throw std::domain_error("square root crosses its branch cut: reparameterize");
    }
    // y is a square root of a quantity that vanishes at the ends, so round-off is amplified there
    r.closed = std::abs(xs.front() - xs.back()) < 1e-12 && std::abs(ys.front() - ys.back()) < 1e-7;

    std::vector<cplx> f;
    for (cplx x : xs)
        f.push_back(x);
    r.winding_x0 = winding(f);
    f.clear();
    for (cplx y : ys)
        f.push_back(y - 1.0);
    r.winding_y_plus = winding(f);
    f.clear();
    for (cplx y : ys)
        f.push_back(y + 1.0);
    r.winding_y_minus = winding(f);
    double min_y = std::abs(ys.front());
    for (cplx y : ys)
        min_y = std::min(min_y, std::abs(y));
    // the ends of both halves sit on y = 0 up to the square root of round-off
    if (min_y < 1e-6) {
        r.notes.push_back("the loop passes through y = 0 at (-c, 0), so its winding number around {y = 0} is undefined");
    } else {
        f.assign(ys.begin(), ys.end());
        r.winding_y0 = winding(f);
    }

    // lift the y-projection with x as the fiber
    ComplexForm form = ComplexForm::from(corpus::psi_pullback()).swapped();
    CPath base;
    for (const Half& h : halves)
        base.then(CPath::sampler([h](double s) { return h.y(s); }, [h](double s) { return h.dy(s); }, "psi-half"));
    LiftResult lift = lift_path(form, base, halves[0].x(0), {});
    r.lift_status = lift.status;
    r.closure_gap = std::abs(lift.final_y - halves[0].x(0));
    for (const LiftSample& smp : lift.samples) {
        int k = smp.t < 1 ? 0 : 1;
        cplx expected = halves[k].x(smp.t - k);
        r.max_lift_deviation = std::max(r.max_lift_deviation, std::abs(smp.y - expected));
        r.samples.push_back({smp.t, smp.y, smp.x});
    }
    r.pass = r.closed && lift.status == LiftStatus::Complete && r.closure_gap < tol && r.winding_x0 == 0 &&
             r.winding_y_plus == 0 && r.winding_y_minus == 0;
    return r;
}

} // namespace foliation
