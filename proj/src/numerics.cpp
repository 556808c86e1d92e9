#include "foliation/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace foliation {

namespace {

struct Term {
    int i;
    int j;
    cplx c;
};

std::vector<Term> compile(const Poly2& p, cplx root)
{
    std::vector<Term> out;
    for (const auto& [e, c] : p.terms()) {
        auto [re, im] = c.evaluate(root.real(), root.imag());
        out.push_back({e.first, e.second, cplx(re, im)});
    }
    return out;
}

cplx ipow(cplx z, int n)
{
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1)
            r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

std::function<cplx(cplx, cplx)> evaluator(std::vector<Term> terms)
{
    return [terms = std::move(terms)](cplx x, cplx y) {
        cplx s = 0.0;
        for (const Term& t : terms)
            s += t.c * ipow(x, t.i) * ipow(y, t.j);
        return s;
    };
}

} // namespace

ComplexForm ComplexForm::from(const DiffForm& w, cplx root)
{
    return {evaluator(compile(w.A, root)), evaluator(compile(w.B, root))};
}

ComplexForm ComplexForm::swapped() const
{
    auto a = A, b = B;
    return {[b](cplx u, cplx v) { return b(v, u); }, [a](cplx u, cplx v) { return a(v, u); }};
}

CPath CPath::segment(cplx a, cplx b)
{
    CPath p;
    p.pieces_.push_back({[a, b](double s) { return a + s * (b - a); }, [a, b](double) { return b - a; }, "segment"});
    return p;
}

CPath CPath::log_segment(cplx za, cplx zb)
{
    CPath p;
    p.pieces_.push_back({[za, zb](double s) { return std::exp(za + s * (zb - za)); },
                         [za, zb](double s) { return std::exp(za + s * (zb - za)) * (zb - za); }, "log-segment"});
    return p;
}

CPath CPath::arc(cplx center, double radius, double theta0, double theta1)
{
    CPath p;
    double d = theta1 - theta0;
    p.pieces_.push_back(
        {[=](double s) { return center + radius * std::exp(cplx(0, theta0 + s * d)); },
         [=](double s) { return cplx(0, d) * radius * std::exp(cplx(0, theta0 + s * d)); }, "arc"});
    return p;
}

CPath CPath::circle(double radius, double turns, double theta0)
{
    return arc(0.0, radius, theta0, theta0 + 2 * std::numbers::pi * turns);
}

CPath CPath::sampler(std::function<cplx(double)> x, std::function<cplx(double)> dx, std::string kind)
{
    CPath p;
    p.pieces_.push_back({std::move(x), std::move(dx), std::move(kind)});
    return p;
}

CPath& CPath::then(const CPath& next)
{
    pieces_.insert(pieces_.end(), next.pieces_.begin(), next.pieces_.end());
    return *this;
}

CPath CPath::reversed() const
{
    CPath p;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        auto x = it->x;
        auto dx = it->dx;
        p.pieces_.push_back({[x](double s) { return x(1 - s); }, [dx](double s) { return -dx(1 - s); }, it->kind});
    }
    return p;
}

namespace {

std::pair<size_t, double> locate(size_t n, double t)
{
    if (n == 0)
        throw std::logic_error("empty path");
    double fl = std::floor(t);
    size_t i = static_cast<size_t>(std::max(0.0, fl));
    if (i >= n)
        return {n - 1, 1.0};
    return {i, t - static_cast<double>(i)};
}

} // namespace

cplx CPath::point(double t) const
{
    auto [i, s] = locate(size(), t);
    return pieces_[i].x(s);
}

cplx CPath::velocity(double t) const
{
    auto [i, s] = locate(size(), t);
    return pieces_[i].dx(s);
}

std::string to_string(LiftStatus s)
{
    switch (s) {
    case LiftStatus::Complete: return "complete";
    case LiftStatus::LeftDomain: return "left-domain";
    case LiftStatus::TransversalityFailure: return "transversality-failure";
    }
    return "?";
}

LiftResult lift_path(const ComplexForm& form, const CPath& path, cplx y0, const LiftOptions& opts)
{
    LiftResult res;
    cplx y = y0;
    double t_base = 0;
    auto transversal = [&](cplx a, cplx b) { return std::abs(b) > opts.guard * std::max(1.0, std::abs(a)); };
    {
        cplx x0 = path.start();
        if (!transversal(form.A(x0, y0), form.B(x0, y0))) {
            res.status = LiftStatus::TransversalityFailure;
            res.final_y = y0;
            return res;
        }
    }
    if (opts.keep_samples)
        res.samples.push_back({0.0, path.start(), y0});
    for (size_t k = 0; k < path.size(); ++k) {
        const auto& piece = path.pieces()[k];
        bool lost_transversality = false;
        auto rhs = [&](double s, cplx yy, cplx& dy) {
            cplx x = piece.x(s);
            cplx a = form.A(x, yy), b = form.B(x, yy);
            if (!transversal(a, b)) {
                lost_transversality = true;
                return false;
            }
            dy = -(a / b) * piece.dx(s);
            return std::isfinite(dy.real()) && std::isfinite(dy.imag());
        };
        bool left = false;
        auto observer = [&](double s0, cplx ya, cplx fa, double s1, cplx yb, cplx fb) {
            double h = s1 - s0;
            // Hermite midpoint value and derivative
            cplx ym = 0.5 * (ya + yb) + h / 8.0 * (fa - fb);
            cplx dym = 1.5 * (yb - ya) / h - 0.25 * (fa + fb);
            double sm = 0.5 * (s0 + s1);
            cplx xm = piece.x(sm), dxm = piece.dx(sm);
            cplx a = form.A(xm, ym), b = form.B(xm, ym);
            double scale = std::abs(a * dxm) + std::abs(b * dym);
            if (scale > 0)
                res.max_form_residual = std::max(res.max_form_residual, std::abs(a * dxm + b * dym) / scale);
            cplx xb = piece.x(s1);
            if (opts.keep_samples)
                res.samples.push_back({t_base + s1, xb, yb});
            if (std::abs(yb) > opts.y_bound || std::abs(xb) > opts.x_bound) {
                left = true;
                return false;
            }
            return true;
        };
        OdeResult o = integrate_dp45(rhs, 0.0, 1.0, y, opts.ctl, observer);
        res.error_estimate += o.error_estimate;
        res.steps += o.steps;
        y = o.y;
        res.t_end = t_base + o.t;
        if (!o.complete) {
            res.final_y = y;
            if (left)
                res.status = LiftStatus::LeftDomain;
            else if (lost_transversality)
                res.status = LiftStatus::TransversalityFailure;
            else
                res.status = LiftStatus::LeftDomain; // step-size collapse: treated as leaving the domain
            return res;
        }
        t_base += 1.0;
    }
    res.final_y = y;
    res.status = LiftStatus::Complete;
    return res;
}

std::vector<HolonomyPoint> holonomy(const ComplexForm& form, const CPath& loop, const std::vector<cplx>& y_grid,
                                    const LiftOptions& opts)
{
    if (!loop.closed(1e-9))
        throw std::invalid_argument("holonomy needs a closed loop");
    LiftOptions o = opts;
    o.keep_samples = false;
    std::vector<HolonomyPoint> out;
    for (cplx y0 : y_grid) {
        LiftResult r = lift_path(form, loop, y0, o);
        out.push_back({y0, r.final_y, r.status, r.error_estimate});
    }
    return out;
}

cplx model_first_integral(int k, cplx mu, cplx x, cplx y)
{
    return y * std::pow(x, -mu) * std::exp(std::pow(x, -k) / static_cast<double>(k));
}

ComplexForm PreparedForm::form() const
{
    auto rr = R;
    auto one_plus_r = [rr](cplx x, cplx y) { return rr ? 1.0 + rr(x, y) : cplx(1.0); };
    ComplexForm f;
    f.A = [one_plus_r](cplx x, cplx y) { return -y * one_plus_r(x, y); };
    if (kind == Kind::Nondegenerate) {
        cplx l = lambda;
        f.B = [l](cplx x, cplx) { return l * x; };
    } else {
        int kk = k;
        f.B = [kk](cplx x, cplx) { return ipow(x, kk + 1); };
    }
    return f;
}

BeamReport beam_verify(const PreparedForm& f, cplx z_star, cplx y0, double delta, int n_rays, double t_max,
                       const LiftOptions& opts)
{
    BeamReport rep;
    rep.delta = delta;
    rep.precondition = f.M < 1 && delta <= std::acos(f.M) + 1e-12;
    ComplexForm form = f.form();
    LiftOptions lo = opts;
    lo.x_bound = f.rho;
    lo.y_bound = f.r;
    lo.keep_samples = true;
    for (int i = 0; i < n_rays; ++i) {
        double phi = n_rays == 1 ? 0.0 : -delta + 2 * delta * i / (n_rays - 1);
        rep.thetas.push_back(phi);
        cplx theta = std::exp(cplx(0, phi));
        CPath ray;
        if (f.kind == PreparedForm::Kind::Nondegenerate) {
            cplx dir = -theta * f.lambda / std::abs(f.lambda);
            ray = CPath::log_segment(z_star, z_star + t_max * dir);
        } else {
            int k = f.k;
            cplx es = std::exp(static_cast<double>(k) * z_star);
            cplx xs = std::exp(z_star);
            auto x = [=](double s) {
                cplx d = 1.0 + static_cast<double>(k) * theta * (s * t_max) * es;
                return xs * std::pow(d, -1.0 / k);
            };
            auto dx = [=](double s) {
                cplx d = 1.0 + static_cast<double>(k) * theta * (s * t_max) * es;
                // dz/dt = -theta exp(kz) = -theta es / d
                return x(s) * (-theta * es / d) * t_max;
            };
            ray = CPath::sampler(x, dx, "saddle-node-ray");
        }
        LiftResult lr = lift_path(form, ray, y0, lo);
        BeamRay br;
        br.phi = phi;
        br.status = lr.status;
        br.t_end = lr.t_end * t_max;
        br.samples = static_cast<long>(lr.samples.size());
        for (size_t j = 1; j < lr.samples.size(); ++j) {
            double before = std::abs(lr.samples[j - 1].y), after = std::abs(lr.samples[j].y);
            // the last sample may lie past the domain boundary
            if (j + 1 == lr.samples.size() && lr.status == LiftStatus::LeftDomain)
                break;
            if (after > before * (1 + 10 * lo.ctl.rtol) + lo.ctl.atol) {
                br.monotone = false;
                rep.violations.push_back({phi, lr.samples[j].t * t_max, before, after});
            }
        }
        rep.rays.push_back(br);
    }
    return rep;
}

Roughness roughness(const std::vector<cplx>& g, bool closed)
{
    const size_t n = g.size();
    if (n < 3)
        throw std::invalid_argument("roughness needs at least 3 samples");
    for (cplx z : g)
        if (z == 0.0)
            throw std::invalid_argument("curve passes through 0");
    constexpr double limit = std::numbers::pi / 2 - 1e-9;
    Roughness r;
    for (size_t i = 0; i < n; ++i) {
        cplx d;
        if (closed)
            d = g[(i + 1) % n] - g[(i + n - 1) % n];
        else if (i == 0)
            d = -3.0 * g[0] + 4.0 * g[1] - g[2];
        else if (i + 1 == n)
            d = 3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3];
        else
            d = g[i + 1] - g[i - 1];
        double a = std::abs(std::arg(d / (cplx(0, 1) * g[i])));
        if (a >= limit) {
            r.infinite = true;
            r.argmax = i;
            return r;
        }
        if (a > r.value) {
            r.value = a;
            r.argmax = i;
        }
    }
    return r;
}

namespace {

bool member(const ComplexForm& form, const CPath& loop, cplx y0, double r, const LiftOptions& base)
{
    if (std::abs(y0) >= r)
        return false;
    LiftOptions o = base;
    o.keep_samples = false;
    o.y_bound = r;
    return lift_path(form, loop, y0, o).status == LiftStatus::Complete;
}

int count_components(const std::vector<std::vector<char>>& m)
{
    int n = static_cast<int>(m.size());
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    int comps = 0;
    std::vector<std::pair<int, int>> stack;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!m[i][j] || seen[i][j])
                continue;
            ++comps;
            stack.push_back({i, j});
            seen[i][j] = 1;
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                const int da[] = {1, -1, 0, 0}, db[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int u = a + da[k], v = b + db[k];
                    if (u >= 0 && v >= 0 && u < n && v < n && m[u][v] && !seen[u][v]) {
                        seen[u][v] = 1;
                        stack.push_back({u, v});
                    }
                }
            }
        }
    return comps;
}

} // namespace

SigmaResult sigma_domain(const ComplexForm& form, double rho, double r, const SigmaOptions& opts)
{
    SigmaResult s;
    s.rho = rho;
    s.r = r;
    s.grid = opts.grid;
    CPath loop = CPath::circle(rho);
    int n = opts.grid;
    double h = n > 1 ? 2 * r / (n - 1) : 0;
    s.member.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.member[i][j] = member(form, loop, cplx(-r + j * h, -r + i * h), r, opts.lift);
    s.contains_origin = member(form, loop, 0.0, r, opts.lift);
    s.components = count_components(s.member);

    s.resolution = opts.bisection_tol * r;
    for (int d = 0; d < opts.directions; ++d) {
        cplx u = std::exp(cplx(0, 2 * std::numbers::pi * d / opts.directions));
        double lo = 0, hi = r;
        while (hi - lo > s.resolution) {
            double mid = 0.5 * (lo + hi);
            if (member(form, loop, mid * u, r, opts.lift))
                lo = mid;
            else
                hi = mid;
        }
        s.boundary.push_back(0.5 * (lo + hi) * u);
    }
    if (s.boundary.size() >= 3) {
        s.boundary_roughness = roughness(s.boundary, true);
        double rmin = r;
        for (cplx z : s.boundary)
            rmin = std::min(rmin, std::abs(z));
        double step = 2 * std::numbers::pi / opts.directions;
        if (rmin > 0)
            s.roughness_slack = 2 * s.resolution / (rmin * step);
    }
    return s;
}

} // namespace foliation
