#ifndef FOLIATION_NUMERICS_HPP
#define FOLIATION_NUMERICS_HPP

#include "foliation/forms.hpp"
#include "foliation/integrator.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace foliation {

// A dx + B dy with complex evaluation; x is the base coordinate of lifts, y the fiber.
struct ComplexForm {
    std::function<cplx(cplx, cplx)> A;
    std::function<cplx(cplx, cplx)> B;

    // Coefficients evaluated under the embedding that sends the field generator to `root`.
    static ComplexForm from(const DiffForm& w, cplx root = 0.0);
    // Exchanges the roles of x and y (lifts then run over a path in y).
    ComplexForm swapped() const;
};

// Piecewise path; each piece is parameterized by s in [0, 1] and the whole path by t in [0, size()].
class CPath {
public:
    struct Piece {
        std::function<cplx(double)> x;
        std::function<cplx(double)> dx;
        std::string kind;
    };

    static CPath segment(cplx a, cplx b);
    // Straight segment in the z = log x chart.
    static CPath log_segment(cplx za, cplx zb);
    static CPath arc(cplx center, double radius, double theta0, double theta1);
    // Circle centered at 0 starting at angle theta0, `turns` times counterclockwise (negative: clockwise).
    static CPath circle(double radius, double turns = 1.0, double theta0 = 0.0);
    static CPath sampler(std::function<cplx(double)> x, std::function<cplx(double)> dx, std::string kind = "sampler");

    CPath& then(const CPath& next);
    CPath reversed() const;

    size_t size() const { return pieces_.size(); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    cplx point(double t) const;
    cplx velocity(double t) const;
    cplx start() const { return point(0); }
    cplx end() const { return point(static_cast<double>(size())); }
    bool closed(double tol = 1e-12) const { return std::abs(end() - start()) <= tol; }

private:
    std::vector<Piece> pieces_;
};

enum class LiftStatus { Complete, LeftDomain, TransversalityFailure };
std::string to_string(LiftStatus s);

struct LiftOptions {
    StepControl ctl;
    double guard = 1e-12;  // |B| below guard * scale stops the lift
    double y_bound = std::numeric_limits<double>::infinity();
    double x_bound = std::numeric_limits<double>::infinity();
    bool keep_samples = true;
};

struct LiftSample {
    double t;
    cplx x;
    cplx y;
};

struct LiftResult {
    std::vector<LiftSample> samples;
    LiftStatus status = LiftStatus::Complete;
    double max_form_residual = 0; // at step midpoints, from the cubic Hermite interpolant
    cplx final_y;
    double t_end = 0;
    double error_estimate = 0;
    long steps = 0;
};

// Integrates dy/dt = -(A/B)(x(t), y) x'(t) along the path.
LiftResult lift_path(const ComplexForm& form, const CPath& path, cplx y0, const LiftOptions& opts = {});

struct HolonomyPoint {
    cplx y0;
    cplx y1;
    LiftStatus status = LiftStatus::Complete;
    double error_estimate = 0;
};

std::vector<HolonomyPoint> holonomy(const ComplexForm& form, const CPath& loop, const std::vector<cplx>& y_grid,
                                    const LiftOptions& opts = {});

// First integral y x^(-mu) exp(x^(-k)/k) of the model x^(k+1) dy - y(1 + mu x^k) dx (principal branch of x^(-mu)).
cplx model_first_integral(int k, cplx mu, cplx x, cplx y);

// lambda x dy - y(1+R) dx, or x^(k+1) dy - y(1+R) dx for a saddle-node.
struct PreparedForm {
    enum class Kind { Nondegenerate, SaddleNode };
    Kind kind = Kind::Nondegenerate;
    cplx lambda = -1.0;
    int k = 1;
    std::function<cplx(cplx, cplx)> R; // empty means R = 0
    double M = 0;   // caller-verified bound of |R| on the polydisk
    double rho = 1; // |x| <= rho
    double r = 1;   // |y| <= r

    ComplexForm form() const;
};

struct BeamViolation {
    double phi;
    double t;
    double before;
    double after;
};

struct BeamRay {
    double phi;
    bool monotone = true;
    LiftStatus status = LiftStatus::Complete;
    double t_end = 0;
    long samples = 0;
};

struct BeamReport {
    double delta = 0;
    bool precondition = true; // delta <= arccos M
    std::vector<double> thetas;
    std::vector<BeamRay> rays;
    std::vector<BeamViolation> violations;
};

// Rays z* - t theta lambda/|lambda| (nondegenerate) or exp(k z) = exp(k z*)/(1 + k theta t exp(k z*))
// (saddle-node) in the z = log x chart, theta = exp(i phi) with |phi| <= delta; checks that |y|
// does not increase along each ray until it leaves the polydisk.
BeamReport beam_verify(const PreparedForm& f, cplx z_star, cplx y0, double delta, int n_rays, double t_max,
                       const LiftOptions& opts = {});

struct Roughness {
    double value = 0;
    bool infinite = false; // some sample reaches angle pi/2
    size_t argmax = 0;
};

// max over samples of |arg(g'/(i g))| with central differences (one-sided at the ends of an open curve).
Roughness roughness(const std::vector<cplx>& curve, bool closed);

struct SigmaOptions {
    int grid = 200;
    int directions = 360;
    double bisection_tol = 1e-6; // relative to r
    LiftOptions lift;
};

struct SigmaResult {
    double rho = 0;
    double r = 0;
    int grid = 0;
    std::vector<std::vector<char>> member; // [row][col], y0 = (-r + col h) + i(-r + row h)
    bool contains_origin = false;
    int components = 0; // 4-connected components of the membership grid
    std::vector<cplx> boundary;
    Roughness boundary_roughness;
    double resolution = 0; // bisection resolution in absolute units
    // angle error the bisection resolution can cause between neighbouring boundary points
    double roughness_slack = 0;
};

// Points y0 with |y0| < r whose lift around |x| = rho (from x = rho) stays in |y| < r.
SigmaResult sigma_domain(const ComplexForm& form, double rho, double r, const SigmaOptions& opts = {});

} // namespace foliation

#endif
