#include "foliation/number_field.hpp"

#include <complex>
#include <stdexcept>

namespace foliation {

SplitRequired::SplitRequired(SplitEvent e)
    : event_(std::move(e)),
      message_("zero divisor in " + event_.field->describe() + ": split into (" + event_.m1.str() + ") and (" +
               event_.m2.str() + ")")
{
}

NumberField::NumberField(QPoly modulus, std::optional<Tower> tower, std::vector<Split> history,
                         FieldPtr split_parent)
    : modulus_(modulus.monic()), tower_(std::move(tower)), history_(std::move(history)),
      split_parent_(std::move(split_parent))
{
    if (modulus_.degree() < 1)
        throw std::invalid_argument("number field modulus must have degree >= 1");
    if (!is_squarefree(modulus_))
        throw std::invalid_argument("number field modulus must be squarefree: " + modulus_.str());
}

FieldPtr NumberField::rationals()
{
    static const FieldPtr q(new NumberField(QPoly::variable(), std::nullopt, {}, nullptr));
    return q;
}

FieldPtr NumberField::over_rationals(const QPoly& modulus)
{
    QPoly m = modulus.monic();
    if (m.degree() == 1 && m.coeff(0) == 0)
        return rationals();
    Tower t;
    t.base = rationals();
    t.g = {};
    for (const auto& c : m.coeffs())
        t.g.push_back(QPoly::constant(c));
    t.shift = 0;
    t.base_gen = QPoly();
    t.point = QPoly::variable().rem(m);
    for (int k = 0; k < m.degree(); ++k) {
        std::vector<Rational> col(m.degree());
        col[k] = 1;
        t.basis.push_back(std::move(col));
    }
    return FieldPtr(new NumberField(m, std::move(t), {}, nullptr));
}

FieldPtr NumberField::with_tower(const QPoly& modulus, Tower tower, std::vector<Split> history,
                                 FieldPtr split_parent)
{
    return FieldPtr(new NumberField(modulus, std::move(tower), std::move(history), std::move(split_parent)));
}

bool NumberField::extends(const NumberField* other) const
{
    for (const NumberField* f = this; f; f = f->base().get())
        if (f == other)
            return true;
    return false;
}

int NumberField::relative_degree(const NumberField& ancestor) const
{
    if (ancestor.degree() == 0 || degree() % ancestor.degree() != 0)
        throw std::logic_error("relative degree over a non-subfield");
    return degree() / ancestor.degree();
}

std::string NumberField::describe() const
{
    if (this == rationals().get())
        return "Q";
    return "Q[t]/(" + modulus_.str() + ")";
}

FieldElem::FieldElem() : field_(NumberField::rationals()) {}

FieldElem::FieldElem(const Rational& q) : field_(NumberField::rationals()), rep_(QPoly::constant(q)) {}

FieldElem::FieldElem(FieldPtr field, const QPoly& rep) : field_(std::move(field))
{
    rep_ = rep.degree() < field_->degree() ? rep : rep.rem(field_->modulus());
}

FieldElem::FieldElem(FieldPtr field, const Rational& q) : field_(std::move(field)), rep_(QPoly::constant(q)) {}

FieldElem FieldElem::generator(const FieldPtr& field) { return FieldElem(field, QPoly::variable()); }

bool FieldElem::is_zero() const
{
    if (rep_.is_zero())
        return true;
    if (field_->degree() == 1 || rep_.degree() == 0)
        return false;
    QPoly g = gcd(rep_, field_->modulus());
    if (g.degree() == 0)
        return false;
    throw SplitRequired({field_, g, field_->modulus().quot(g)});
}

Rational FieldElem::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("field element is not rational: " + str());
    return rep_.coeff(0);
}

std::variant<FieldElem, SplitEvent> FieldElem::invert() const
{
    if (rep_.is_zero())
        throw std::domain_error("division by zero");
    if (rep_.degree() == 0)
        return FieldElem(field_, QPoly::constant(1 / rep_.coeff(0)));
    auto [g, s] = half_gcdex(rep_, field_->modulus());
    if (g.degree() == 0)
        return FieldElem(field_, s);
    return SplitEvent{field_, g, field_->modulus().quot(g)};
}

FieldElem FieldElem::inv() const
{
    auto r = invert();
    if (auto* e = std::get_if<SplitEvent>(&r))
        throw SplitRequired(*e);
    return std::get<FieldElem>(r);
}

std::variant<FieldElem, SplitEvent> field_invert(const FieldElem& e) { return e.invert(); }

FieldElem FieldElem::operator-() const { return FieldElem(field_, -rep_); }

namespace {

// Brings a and b to one field, promoting constants and tower ancestors.
FieldPtr unify(FieldElem& a, FieldElem& b)
{
    if (a.field() == b.field())
        return a.field();
    if (a.field()->is_rationals() && a.is_rational()) {
        a = FieldElem(b.field(), a.rep());
        return b.field();
    }
    if (b.field()->is_rationals() && b.is_rational()) {
        b = FieldElem(a.field(), b.rep());
        return a.field();
    }
    bool b_below = b.field()->extends(a.field().get());
    for (const NumberField* f = b.field()->split_parent().get(); f && !b_below; f = f->split_parent().get())
        b_below = f == a.field().get();
    if (b_below) {
        a = coerce(a, b.field());
        return b.field();
    }
    b = coerce(b, a.field());
    return a.field();
}

} // namespace

FieldElem& FieldElem::operator+=(const FieldElem& o)
{
    FieldElem b = o;
    unify(*this, b);
    rep_ += b.rep_;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o)
{
    FieldElem b = o;
    unify(*this, b);
    rep_ -= b.rep_;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o)
{
    FieldElem b = o;
    unify(*this, b);
    if (field_->degree() == 1 || (rep_.degree() <= 0 || b.rep_.degree() <= 0)) {
        rep_ *= b.rep_;
        if (rep_.degree() >= field_->degree())
            rep_ = rep_.rem(field_->modulus());
    } else {
        rep_ = mulmod(rep_, b.rep_, field_->modulus());
    }
    return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b)
{
    if (a.field() == b.field())
        return a.rep() == b.rep();
    FieldElem x = a, y = b;
    unify(x, y);
    return x.rep() == y.rep();
}

std::string FieldElem::str() const
{
    if (rep_.degree() <= 0)
        return rep_.coeff(0).get_str();
    return "(" + rep_.str() + ")";
}

std::pair<double, double> FieldElem::evaluate(double re, double im) const
{
    std::complex<double> z(re, im), acc = 0;
    for (int i = rep_.degree(); i >= 0; --i)
        acc = acc * z + rep_.coeffs()[i].get_d();
    return {acc.real(), acc.imag()};
}

FieldElem embed(const FieldElem& e, const FieldPtr& target)
{
    if (e.field() == target)
        return e;
    if (e.is_rational())
        return FieldElem(target, e.rep());
    const auto& tw = target->tower();
    if (!tw || !tw->base)
        throw std::logic_error("cannot embed " + e.field()->describe() + " into " + target->describe());
    FieldElem inner = embed(e, tw->base);
    // Horner in the image of the base generator.
    QPoly acc;
    const auto& c = inner.rep().coeffs();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = (acc * tw->base_gen + QPoly::constant(c[i])).rem(target->modulus());
    return FieldElem(target, acc);
}

FieldElem restrict_to_branch(const FieldElem& e, const FieldPtr& branch)
{
    for (const NumberField* f = branch.get(); f; f = f->split_parent().get())
        if (f == e.field().get())
            return FieldElem(branch, e.rep().rem(branch->modulus()));
    throw std::logic_error("field " + branch->describe() + " is not a branch of " + e.field()->describe());
}

FieldElem coerce(const FieldElem& e, const FieldPtr& target)
{
    if (e.field() == target)
        return e;
    if (e.is_rational())
        return FieldElem(target, e.rep());
    if (target->extends(e.field().get()))
        return embed(e, target);
    if (target->split_parent()) {
        FieldElem p = coerce(e, target->split_parent());
        return FieldElem(target, p.rep().rem(target->modulus()));
    }
    if (target->base())
        return embed(coerce(e, target->base()), target);
    throw std::logic_error("no coercion from " + e.field()->describe() + " to " + target->describe());
}

} // namespace foliation
