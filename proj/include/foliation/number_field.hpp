#ifndef FOLIATION_NUMBER_FIELD_HPP
#define FOLIATION_NUMBER_FIELD_HPP

#include "foliation/qpoly.hpp"

#include <exception>
#include <memory>
#include <ostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace foliation {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// How a field F = Q[s]/(M) sits over a base K = Q[t]/(m):
// F is isomorphic to K[v]/(g) with s = v + shift*t.
struct Tower {
    FieldPtr base;
    std::vector<QPoly> g; // monic relative polynomial, g[i] is the base rep of the v^i coefficient
    Rational shift;
    QPoly base_gen;       // image of t in F
    QPoly point;          // image of v in F
    // basis[k] holds the coordinates of s^k in the K-basis {v^i t^j}, index i*deg(K) + j
    std::vector<std::vector<Rational>> basis;
};

struct SplitEvent {
    FieldPtr field;
    QPoly m1; // branch where the tested element vanishes
    QPoly m2; // branch where it is invertible
};

class SplitRequired : public std::exception {
public:
    explicit SplitRequired(SplitEvent e);
    const char* what() const noexcept override { return message_.c_str(); }
    const SplitEvent& event() const { return event_; }

private:
    SplitEvent event_;
    std::string message_;
};

class NumberField {
public:
    struct Split {
        QPoly parent_modulus;
        QPoly kept;
    };

    // The canonical field Q (modulus t).
    static FieldPtr rationals();
    // Q[t]/(m) directly over Q; m is made monic and must be squarefree.
    static FieldPtr over_rationals(const QPoly& modulus);
    static FieldPtr with_tower(const QPoly& modulus, Tower tower, std::vector<Split> history = {},
                               FieldPtr split_parent = nullptr);

    const QPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    const std::optional<Tower>& tower() const { return tower_; }
    FieldPtr base() const { return tower_ ? tower_->base : nullptr; }
    const std::vector<Split>& history() const { return history_; }
    FieldPtr split_parent() const { return split_parent_; }
    bool is_rationals() const { return degree() == 1; }
    // True if `other` is this field or one of its tower ancestors.
    bool extends(const NumberField* other) const;
    // Degree over an ancestor field.
    int relative_degree(const NumberField& ancestor) const;

    std::string describe() const;

private:
    NumberField(QPoly modulus, std::optional<Tower> tower, std::vector<Split> history, FieldPtr split_parent);

    QPoly modulus_;
    std::optional<Tower> tower_;
    std::vector<Split> history_;
    FieldPtr split_parent_;
};

class FieldElem {
public:
    FieldElem();
    FieldElem(const Rational& q); // NOLINT: rationals embed into every field
    FieldElem(long q) : FieldElem(Rational(q)) {} // NOLINT
    FieldElem(FieldPtr field, const QPoly& rep);
    FieldElem(FieldPtr field, const Rational& q);

    static FieldElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const QPoly& rep() const { return rep_; }

    // Exact ring zero (no branching).
    bool is_identically_zero() const { return rep_.is_zero(); }
    // Zero in every branch: true; unit in every branch: false; otherwise throws SplitRequired.
    bool is_zero() const;
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational to_rational() const;

    std::variant<FieldElem, SplitEvent> invert() const;
    // Inverse; throws SplitRequired on a zero divisor and std::domain_error on zero.
    FieldElem inv() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o) { return *this *= o.inv(); }

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    // Representation equality; reduced representatives are unique, so this is ring equality.
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    std::string str() const;
    // Complex value under the embedding sending the generator to `root`.
    std::pair<double, double> evaluate(double re, double im) const;

private:
    FieldPtr field_;
    QPoly rep_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

std::variant<FieldElem, SplitEvent> field_invert(const FieldElem& e);

// Image of e in a field that extends e.field() through its tower.
FieldElem embed(const FieldElem& e, const FieldPtr& target);
// Reduction of e into a branch created by splitting e.field().
FieldElem restrict_to_branch(const FieldElem& e, const FieldPtr& branch);
// Moves e into target, whichever of embed / restrict / constant promotion applies.
FieldElem coerce(const FieldElem& e, const FieldPtr& target);

} // namespace foliation

#endif
