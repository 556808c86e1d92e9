#ifndef FOLIATION_CYCLES_HPP
#define FOLIATION_CYCLES_HPP

#include "foliation/numerics.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace foliation {

// Gamma_c(t) = (c e^{it}, exp(-(1 + e^{-it})/c)), t in [-pi, pi], a path in a leaf of x^2 dy - y dx.
cplx gamma_c_x(double c, double t);
cplx gamma_c_y(double c, double t);

struct GammaCReport {
    double c = 0;
    cplx start_x, start_y, end_x, end_y;
    double endpoint_error = 0;  // max distance of either endpoint to (-c, 1)
    double max_residual = 0;    // tangency residual against x^2 dy - y dx
    double max_h0_error = 0;    // max |y e^{1/x} - e^{-1/c}|
    int samples = 0;
    bool pass = false;
};

// Checks endpoints, tangency and the first integral along `samples` equally spaced points.
GammaCReport gamma_c_verify(double c, int samples = 1000, double tol = 1e-9);

// Tangency residual |x^2 y' - y x'| / (|x^2 y'| + |y x'|) of a curve (x(t), y(t)) sampled on
// [-pi, pi] with central differences, so the curve must extend slightly past both ends.
double tangency_residual(const std::function<cplx(double)>& x, const std::function<cplx(double)>& y, int samples);

struct PsiCycleReport {
    double c = 0;
    bool closed = false;            // the parameterized loop returns to its start
    double closure_gap = 0;         // |lifted x(end) - x(start)|
    double max_lift_deviation = 0;  // max |lifted x - parameterized x| over the samples
    LiftStatus lift_status = LiftStatus::Complete;
    int winding_x0 = 0;             // around {x = 0}
    int winding_y_plus = 0;         // around {y = 1}
    int winding_y_minus = 0;        // around {y = -1}
    std::optional<int> winding_y0;  // around {y = 0}; empty when the loop meets it
    std::vector<std::string> notes;
    std::vector<LiftSample> samples; // (t, x, y) along the loop, t in [0, 2]
    bool pass = false;
};

// Builds the loop gamma_c in the pullback (y^2 - 1) dx - 2 y x^2 dy from the two square-root
// preimages of Gamma_c and lifts its y-projection back into the leaf through (-c, 0).
PsiCycleReport psi_cycle_verify(double c, double tol = 1e-6);

} // namespace foliation

#endif
