#include "foliation/corpus.hpp"

#include "foliation/parse.hpp"

#include <stdexcept>

namespace foliation::corpus {

namespace {

FieldPtr Q() { return NumberField::rationals(); }
Poly2 c(const Rational& r) { return Poly2::constant(Q(), r); }
Poly2 X() { return Poly2::x(); }
Poly2 Y() { return Poly2::y(); }

std::string param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& def)
{
    auto it = p.find(key);
    return it == p.end() ? def : it->second;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, int def)
{
    std::string s = param(p, key, std::to_string(def));
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size())
        throw std::invalid_argument("parameter " + key + " must be an integer, got '" + s + "'");
    return v;
}

} // namespace

DiffForm linear(const Rational& lambda) { return {-Y(), c(lambda) * X()}; }

DiffForm model_sn(int k, const Rational& mu)
{
    if (k < 1)
        throw std::invalid_argument("model_sn needs k >= 1");
    return {-(Y() * (c(1) + c(mu) * X().pow(k))), X().pow(k + 1)};
}

DiffForm euler() { return {-(Y() + X()), X().pow(2)}; }

DiffForm omega_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("omega_n needs n >= 1");
    return {c(Rational(1, n)) * X() - Y().pow(n), c(n) * X() * Y().pow(n - 1)};
}

DiffForm psi_pullback() { return {Y().pow(2) - c(1), c(-2) * Y() * X().pow(2)}; }

DiffForm radial() { return {-Y(), X()}; }

DiffForm saddle() { return {Y(), X()}; }

DiffForm cusp() { return {c(-3) * X().pow(2), c(2) * Y()}; }

DiffForm sqrt2_star()
{
    // f = x y^3 - 2 x^3 y
    return {Y().pow(3) - c(6) * X().pow(2) * Y(), c(3) * X() * Y().pow(2) - c(2) * X().pow(3)};
}

DiffForm sqrt_mixed()
{
    Poly2 q = Y().pow(2) - c(2) * X().pow(2);
    return {c(-3) * X() * q + Y().pow(4), Y() * q};
}

std::vector<std::string> names()
{
    return {"linear", "model_sn", "euler", "omega_n", "psi_pullback", "radial",
            "saddle", "omega1", "omega0", "cusp", "sqrt2_star", "sqrt_mixed"};
}

DiffForm by_name(const std::string& name, const std::map<std::string, std::string>& p)
{
    if (name == "linear")
        return linear(parse_rational(param(p, "lambda", "-2/3")));
    if (name == "model_sn")
        return model_sn(int_param(p, "k", 1), parse_rational(param(p, "mu", "0")));
    if (name == "euler")
        return euler();
    if (name == "omega_n")
        return omega_n(int_param(p, "n", 3));
    if (name == "psi_pullback")
        return psi_pullback();
    if (name == "radial")
        return radial();
    if (name == "saddle")
        return saddle();
    if (name == "omega1")
        return omega_n(1);
    if (name == "omega0")
        return model_sn(1, 0);
    if (name == "cusp")
        return cusp();
    if (name == "sqrt2_star")
        return sqrt2_star();
    if (name == "sqrt_mixed")
        return sqrt_mixed();
    throw std::invalid_argument("unknown corpus case '" + name + "'");
}

DiffForm Case::centered() const
{
    if (center_x == 0 && center_y == 0)
        return form;
    return translate_origin(form, FieldElem(center_x), FieldElem(center_y));
}

std::vector<Case> all_cases()
{
    std::vector<Case> out{
        {"linear", linear(Rational(-2, 3)), "linear saddle, lambda = -2/3"},
        {"model_sn", model_sn(1, 0), "model saddle-node k = 1, mu = 0 (omega0)"},
        {"euler", euler(), "Euler equation; divergent weak separatrix"},
        {"psi_pullback", psi_pullback(), "pullback of omega0; regular at the origin, centered at (0, 1)", 0, 1},
        {"radial", radial(), "radial form, dicritical after one blow-up"},
        {"saddle", saddle(), "x dy + y dx"},
        {"cusp", cusp(), "d(y^2 - x^3)"},
        {"sqrt2_star", sqrt2_star(), "divisor points in Q(sqrt 2)"},
        {"sqrt_mixed", sqrt_mixed(), "field splitting during reduction"},
    };
    for (int n = 1; n <= 5; ++n)
        out.push_back({"omega_n n=" + std::to_string(n), omega_n(n), "dead-branch family"});
    return out;
}

} // namespace foliation::corpus
