#ifndef FOLIATION_LOCALTYPES_HPP
#define FOLIATION_LOCALTYPES_HPP

#include "foliation/forms.hpp"
#include "foliation/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace foliation {

enum class RatioKind {
    RationalPositive,
    RationalNegative,
    IrrationalRealPositive,
    IrrationalRealNegative,
    NonReal,
    // s is not rational on any branch of an extension field: the kind differs between embeddings
    ConjugateDependent,
};

std::string to_string(RatioKind k);

// lambda and 1/lambda are the roots of X^2 - s X + 1.
struct RatioVerdict {
    FieldElem s;
    RatioKind kind = RatioKind::NonReal;
    std::optional<Rational> lambda;     // root of larger absolute value when rational
    std::optional<Rational> lambda_inv; // the other root
};

RatioVerdict ratio_decide(const LinearData& l);

enum class NonReducedReason { NilpotentLinearPart, ZeroLinearPart, PositiveRationalRatio };
std::string to_string(NonReducedReason r);

using Vec2 = std::array<FieldElem, 2>;

struct SingClass {
    enum class Kind { Regular, ReducedNonDegenerate, SaddleNode, NonReduced };
    Kind kind = Kind::Regular;

    std::optional<RatioVerdict> ratio; // nondegenerate (reduced or positive rational)
    std::string caveat;                // set for rational-negative ratios

    int k = 0;                    // saddle-node
    std::optional<FieldElem> mu;  // saddle-node
    std::optional<Vec2> strong;   // saddle-node strong (nonzero eigenvalue) direction
    std::optional<Vec2> weak;     // saddle-node weak (zero eigenvalue) direction
    int jet_order = 0;            // order used for the weak jet

    NonReducedReason reason = NonReducedReason::ZeroLinearPart;

    bool is_reduced() const { return kind == Kind::ReducedNonDegenerate || kind == Kind::SaddleNode; }
};

std::string to_string(SingClass::Kind k);

struct JetOptions {
    int order = 0; // 0: default from FOLIATION_JET_ORDER or 10
    int cap = 256;
};

int default_jet_order();

SingClass classify(const DiffForm& w, const JetOptions& opts = {});

// Invariant curve Y = s(X) tangent to the X axis in the frame (x, y) = M (X, Y).
struct SeparatrixJet {
    enum class Direction { Strong, Weak, XAxis };
    Direction direction = Direction::XAxis;
    Mat2 frame;  // columns: tangent direction, complementary direction
    KPoly jet;   // s(X), s(0) = s'(0) = 0
    int order = 0;

    // The curve as a graph y = g(x) in the original coordinates, to the same order.
    // Requires the tangent direction not to be vertical.
    KPoly graph() const;
};

// Frame already has the wanted eigendirection along the x-axis (linear part triangular).
SeparatrixJet separatrix_jet(const DiffForm& w, int order);
// Saddle-node separatrices: the frame is computed from the eigenvectors.
SeparatrixJet saddle_node_separatrix(const DiffForm& w, SeparatrixJet::Direction direction, int order);

enum class Axis { YZero, XZero };
std::string to_string(Axis a);

// Residue of -A_y(x,0)/B(x,0) for the invariant axis {y = 0} (swapped for {x = 0}).
FieldElem cs_index(const DiffForm& w, Axis axis);
// Same residue from a truncated expansion: throws InsufficientPrecision.
LaurentSeries cs_integrand(const DiffForm& w, Axis axis, int trunc);

struct SaddleNodeInvariants {
    int k = 0;
    FieldElem mu;
    Vec2 strong;
    Vec2 weak;
};

SaddleNodeInvariants saddle_node_invariants(const DiffForm& w, int order);

// True iff direction d is parallel to the tangent of the axis (x = 0 has tangent (0, 1)).
bool tangent_to_axis(const Vec2& d, Axis axis);

} // namespace foliation

#endif
