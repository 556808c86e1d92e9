#ifndef FOLIATION_INTEGRATOR_HPP
#define FOLIATION_INTEGRATOR_HPP

#include <complex>
#include <functional>
#include <string>

namespace foliation {

using cplx = std::complex<double>;

struct StepControl {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h0 = 0;     // 0: chosen from the interval length
    double h_min = 1e-14;
    double h_max = 0;  // 0: no limit
    long max_steps = 2000000;
};

struct OdeResult {
    bool complete = false;
    std::string stop; // empty, "observer", "rhs", "step-size", "max-steps"
    double t = 0;
    cplx y;
    double error_estimate = 0; // sum of accepted local error estimates
    long steps = 0;
    long rejected = 0;
};

// Right-hand side: returns false to stop (the state is not accepted).
using ComplexRhs = std::function<bool(double t, cplx y, cplx& dy)>;
// Called after each accepted step with the step's endpoint data; returns false to stop.
using StepObserver = std::function<bool(double t0, cplx y0, cplx f0, double t1, cplx y1, cplx f1)>;

// Adaptive Dormand-Prince 5(4) for a scalar complex ODE on [t0, t1].
OdeResult integrate_dp45(const ComplexRhs& f, double t0, double t1, cplx y0, const StepControl& ctl,
                         const StepObserver& observer = {});

} // namespace foliation

#endif
