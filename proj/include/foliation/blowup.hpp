#ifndef FOLIATION_BLOWUP_HPP
#define FOLIATION_BLOWUP_HPP

#include "foliation/localtypes.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace foliation {

// chart_x: (x, y) = (x, x v), divisor {x = 0}; chart_y: (x, y) = (u w, w), divisor {w = 0}.
// Chart forms are written in the variables (x, y) of the Poly2 type: (x, v) and (u, w).
struct BlowupResult {
    DiffForm chart_x;
    DiffForm chart_y;
    bool dicritical = false;
    int nu = 0;
};

// Regular centers (nu = 0) are allowed when allow_regular is set; the reduction uses this for
// tangencies with a dicritical component.
BlowupResult blowup_point(const DiffForm& w, bool allow_regular = false);

struct DivisorPoint {
    enum class Chart { X, Y };
    Chart chart = Chart::X;
    FieldElem location; // v in chart_x, u in chart_y (always 0 there)
    DiffForm local_form; // chart form recentered at the point, over location.field()
    bool singular = false;
    bool tangency = false; // foliation tangent to a dicritical divisor
};

// Singular points of the new divisor (and, when dicritical, its tangency points). chart_x points
// come from the roots of the restricted coefficient; the chart_y origin covers the one point
// missing from chart_x. Non-rational roots live in an extension by the residual factor.
std::vector<DivisorPoint> divisor_singularities(const BlowupResult& b);

struct DivisorComponent {
    int id = 0;
    int birth_step = 0;
    int self_intersection = -1;
    bool dicritical = false;
    FieldPtr field; // each component stands for its conjugates over Q
    int center = -1; // step that created it (index into steps)
};

struct SingularPoint {
    int index = 0;
    std::vector<int> hosts;       // 0, 1 or 2 component ids
    std::vector<Axis> host_axes;  // local equation of each host
    std::string chart;            // "origin", or "E<id>.x" / "E<id>.y" for a chart of a component
    FieldElem location;
    DiffForm local_form;
    SingClass cls;

    const FieldPtr& field() const { return local_form.field(); }
    bool is_corner() const { return hosts.size() == 2; }
};

struct StepLog {
    int step = 0;
    int created = 0;                 // component id
    std::vector<int> center_hosts;   // components through the center
    std::string chart;
    FieldElem location;
    int nu = 0;
    bool dicritical = false;
    bool tangency = false;           // regular center tangent to a dicritical component
};

// Where the strict transform of a tracked curve ends.
struct CurveTrace {
    std::string curve;
    int point = -1;      // singular point index, or -1 for a regular crossing
    int component = -1;  // component crossed at a regular point
    std::optional<Vec2> tangent;
};

struct ReductionTree {
    std::vector<DivisorComponent> components;
    std::vector<std::pair<int, int>> corners;
    std::vector<SingularPoint> points;
    std::vector<StepLog> steps;
    std::vector<CurveTrace> traces;
    std::set<std::string> flags;
    DiffForm form;        // primitive input form
    Poly2 cofactor;

    const DivisorComponent& component(int id) const;
    // Number of points of the orbit of p on component c, i.e. [F_p : K_c].
    int multiplicity_on(const SingularPoint& p, int c) const;
};

struct Curve {
    std::string name;
    Poly2 f;
};

struct ReduceOptions {
    int max_steps = 64;
    bool force_initial_blowup = false;
    // Track {x = 0} and {y = 0} when they are invariant.
    bool track_axes = true;
    std::vector<Curve> curves;
    JetOptions jet;
};

class ReductionLimit : public std::runtime_error {
public:
    ReductionLimit(const std::string& what, ReductionTree partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const ReductionTree& partial() const { return partial_; }

private:
    ReductionTree partial_;
};

ReductionTree reduce(const DiffForm& w, const ReduceOptions& opts = {});

} // namespace foliation

#endif
