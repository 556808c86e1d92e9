#include "foliation/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace foliation {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

OdeResult integrate_dp45(const ComplexRhs& f, double t0, double t1, cplx y0, const StepControl& ctl,
                         const StepObserver& observer)
{
    OdeResult r;
    r.t = t0;
    r.y = y0;
    double span = t1 - t0;
    if (span == 0) {
        r.complete = true;
        return r;
    }
    double dir = span > 0 ? 1.0 : -1.0;
    double h = ctl.h0 > 0 ? ctl.h0 : std::abs(span) / 100;
    double hmax = ctl.h_max > 0 ? ctl.h_max : std::abs(span);
    h = std::min(h, hmax);

    cplx k1;
    if (!f(r.t, r.y, k1)) {
        r.stop = "rhs";
        return r;
    }
    while (true) {
        double remaining = (t1 - r.t) * dir;
        if (remaining <= 1e-15 * std::max(1.0, std::abs(t1))) {
            r.complete = true;
            return r;
        }
        if (r.steps + r.rejected >= ctl.max_steps) {
            r.stop = "max-steps";
            return r;
        }
        bool last = h >= remaining;
        double hs = last ? remaining : h;
        double s = dir * hs;
        cplx k2, k3, k4, k5, k6, k7;
        const double t = r.t;
        const cplx y = r.y;
        bool ok = f(t + c2 * s, y + s * (a21 * k1), k2) &&
                  f(t + c3 * s, y + s * (a31 * k1 + a32 * k2), k3) &&
                  f(t + c4 * s, y + s * (a41 * k1 + a42 * k2 + a43 * k3), k4) &&
                  f(t + c5 * s, y + s * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4), k5) &&
                  f(last ? t1 : t + s, y + s * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5), k6);
        cplx ynew;
        if (ok) {
            ynew = y + s * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            ok = f(last ? t1 : t + s, ynew, k7);
        }
        if (!ok) {
            // retry with a smaller step before giving up: the failure may lie beyond the true path
            if (hs <= ctl.h_min * 16) {
                r.stop = "rhs";
                return r;
            }
            h = hs / 4;
            ++r.rejected;
            continue;
        }
        cplx err = s * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double sc = ctl.atol + ctl.rtol * std::max(std::abs(y), std::abs(ynew));
        double en = std::abs(err) / sc;
        if (!std::isfinite(en)) {
            h = hs / 4;
            ++r.rejected;
            if (h < ctl.h_min) {
                r.stop = "step-size";
                return r;
            }
            continue;
        }
        if (en <= 1.0) {
            double tnew = last ? t1 : t + s;
            ++r.steps;
            r.error_estimate += std::abs(err);
            bool go = !observer || observer(t, y, k1, tnew, ynew, k7);
            r.t = tnew;
            r.y = ynew;
            k1 = k7;
            if (!go) {
                r.stop = "observer";
                return r;
            }
            double fac = en == 0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
            h = std::min(hs * fac, hmax);
        } else {
            ++r.rejected;
            h = hs * std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.9);
            if (h < ctl.h_min) {
                r.stop = "step-size";
                return r;
            }
        }
    }
}

} // namespace foliation
