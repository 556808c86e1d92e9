#include "foliation/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace foliation {

ParseError::ParseError(const std::string& msg, int token, int column)
    : std::runtime_error("syntax error at token " + std::to_string(token) + " (column " + std::to_string(column) +
                         "): " + msg),
      token_(token), column_(column)
{
}

namespace {

struct Token {
    enum Kind { Number, X, Y, DX, DY, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    Integer value;
    int column = 0;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t{Token::End, 0, col, std::string(1, c)};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            t.kind = Token::Number;
            t.text = s.substr(i, j - i);
            t.value = Integer(t.text);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])))
                ++j;
            t.text = s.substr(i, j - i);
            if (t.text == "x")
                t.kind = Token::X;
            else if (t.text == "y")
                t.kind = Token::Y;
            else if (t.text == "dx")
                t.kind = Token::DX;
            else if (t.text == "dy")
                t.kind = Token::DY;
            else if (t.text == "xy" || t.text == "yx") {
                // common shorthand, split into two factors
                out.push_back({t.text[0] == 'x' ? Token::X : Token::Y, 0, col, t.text.substr(0, 1)});
                t.kind = t.text[1] == 'x' ? Token::X : Token::Y;
                t.text = t.text.substr(1);
                t.column = col + 1;
            } else
                throw ParseError("unknown identifier '" + t.text + "'", static_cast<int>(out.size()) + 1, col);
            i = j;
        } else {
            ++i;
            switch (c) {
            case '+': t.kind = Token::Plus; break;
            case '-': t.kind = Token::Minus; break;
            case '*': t.kind = Token::Star; break;
            case '/': t.kind = Token::Slash; break;
            case '^': t.kind = Token::Caret; break;
            case '(': t.kind = Token::LParen; break;
            case ')': t.kind = Token::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", static_cast<int>(out.size()) + 1,
                                 col);
            }
        }
        out.push_back(t);
    }
    out.push_back({Token::End, 0, static_cast<int>(s.size()) + 1, "end of input"});
    return out;
}

// A polynomial or a form with polynomial coefficients.
struct Value {
    bool form = false;
    Poly2 p, a, b;

    static Value poly(Poly2 q) { return {false, std::move(q), Poly2(), Poly2()}; }
    bool zero() const { return form ? a.is_zero() && b.is_zero() : p.is_zero(); }
};

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    Value parse()
    {
        Value v = expr();
        if (peek().kind != Token::End)
            fail("unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg, size_t at) const
    {
        throw ParseError(msg, static_cast<int>(at) + 1, toks_[at].column);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    Value add(Value l, const Value& r, bool minus, size_t at)
    {
        if (l.form != r.form) {
            if (l.zero())
                l.form = r.form;
            else if (!r.zero())
                fail("cannot add a polynomial and a form", at);
        }
        if (l.form) {
            if (minus) {
                l.a -= r.a;
                l.b -= r.b;
            } else {
                l.a += r.a;
                l.b += r.b;
            }
        } else {
            if (minus)
                l.p -= r.p;
            else
                l.p += r.p;
        }
        return l;
    }

    Value mul(const Value& l, const Value& r, size_t at)
    {
        if (l.form && r.form)
            fail("product of two differentials", at);
        if (l.form)
            return {true, Poly2(), l.a * r.p, l.b * r.p};
        if (r.form)
            return {true, Poly2(), r.a * l.p, r.b * l.p};
        return Value::poly(l.p * r.p);
    }

    Value expr()
    {
        Value v = Value::poly(Poly2());
        bool minus = false;
        size_t at = pos_;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus)
            minus = next().kind == Token::Minus;
        v = add(v, term(), minus, at);
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            at = pos_;
            minus = next().kind == Token::Minus;
            v = add(v, term(), minus, at);
        }
        return v;
    }

    bool starts_primary() const
    {
        switch (peek().kind) {
        case Token::Number:
        case Token::X:
        case Token::Y:
        case Token::DX:
        case Token::DY:
        case Token::LParen: return true;
        default: return false;
        }
    }

    Value term()
    {
        Value v = factor();
        while (true) {
            size_t at = pos_;
            if (peek().kind == Token::Star) {
                next();
                v = mul(v, factor(), at);
            } else if (peek().kind == Token::Slash) {
                next();
                size_t dat = pos_;
                Value d = factor();
                if (d.form || d.p.is_zero() || d.p.total_degree() != 0)
                    fail("division by a non-constant or zero", dat);
                Rational q = d.p.coeff(0, 0).to_rational();
                v = mul(v, Value::poly(Poly2::constant(NumberField::rationals(), 1 / q)), at);
            } else if (starts_primary()) {
                v = mul(v, factor(), at);
            } else {
                return v;
            }
        }
    }

    Value factor()
    {
        Value base = primary();
        if (peek().kind == Token::Caret) {
            size_t at = pos_;
            next();
            if (peek().kind != Token::Number)
                fail("expected a nonnegative integer exponent");
            Token e = next();
            if (base.form)
                fail("power of a differential", at);
            if (!e.value.fits_ulong_p() || e.value > 4096)
                fail("exponent too large", at + 1);
            return Value::poly(base.p.pow(static_cast<unsigned>(e.value.get_ui())));
        }
        return base;
    }

    Value primary()
    {
        const FieldPtr& q = NumberField::rationals();
        size_t at = pos_;
        Token t = next();
        switch (t.kind) {
        case Token::Number: return Value::poly(Poly2::constant(q, Rational(t.value)));
        case Token::X: return Value::poly(Poly2::x());
        case Token::Y: return Value::poly(Poly2::y());
        case Token::DX: return {true, Poly2(), Poly2::constant(q, 1), Poly2()};
        case Token::DY: return {true, Poly2(), Poly2(), Poly2::constant(q, 1)};
        case Token::LParen: {
            Value v = expr();
            if (peek().kind != Token::RParen)
                fail("expected ')'");
            next();
            return v;
        }
        default: fail("unexpected '" + t.text + "'", at);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

DiffForm parse_form(const std::string& text)
{
    Value v = Parser(text).parse();
    if (!v.form)
        throw ParseError("expected a differential form (no dx or dy)", 1, 1);
    DiffForm w(v.a, v.b);
    if (w.is_zero())
        throw std::invalid_argument("zero form");
    return w;
}

Poly2 parse_poly(const std::string& text)
{
    Value v = Parser(text).parse();
    if (v.form)
        throw ParseError("expected a polynomial, found a form", 1, 1);
    return v.p;
}

std::string render(const Poly2& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // descending total degree, then descending x exponent
    std::vector<std::pair<Poly2::Exp, FieldElem>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        return da != db ? da > db : a.first.first > b.first.first;
    });
    for (const auto& [e, c] : terms) {
        if (!c.is_rational())
            throw std::invalid_argument("render: coefficient outside Q");
        Rational r = c.to_rational();
        bool neg = r < 0;
        if (neg)
            r = -r;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool mono = e.first > 0 || e.second > 0;
        bool one = r == 1;
        if (!one || !mono)
            os << r.get_str();
        auto var = [&](const char* name, int k) {
            if (k == 0)
                return;
            if (!one || (name[0] == 'y' && e.first > 0))
                os << '*';
            one = false;
            os << name;
            if (k > 1)
                os << '^' << k;
        };
        var("x", e.first);
        var("y", e.second);
    }
    return os.str();
}

std::string render(const DiffForm& w)
{
    std::string out;
    if (!w.A.is_zero())
        out = "(" + render(w.A) + ") dx";
    if (!w.B.is_zero())
        out += (out.empty() ? "" : " + ") + std::string("(") + render(w.B) + ") dy";
    return out;
}

} // namespace foliation
