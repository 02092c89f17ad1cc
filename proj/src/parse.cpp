#include "branchforge/parse.hpp"

#include <cctype>

#include "branchforge/algebra.hpp"

namespace branchforge {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

    Z integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Z(s.substr(start, pos - start));
    }

    int exponent() {
        skip_ws();
        if (peek() == '-') fail("negative exponent");
        Z e = integer();
        if (e > 1000000) fail("exponent too large");
        return static_cast<int>(e.get_si());
    }

    // number := INT ('/' INT)?
    FamPoly number() {
        Z num = integer();
        if (eat('/')) {
            Z den = integer();
            if (den == 0) fail("zero denominator");
            Q v(num, den);
            v.canonicalize();
            return FamPoly::constant(v);
        }
        return FamPoly::constant(Q(num));
    }

    // atom := number | var | '(' expr ')'
    FamPoly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '(') {
            ++pos;
            FamPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "x") return fp_term(Q(1), 0, 1, 0);
            if (name == "y") return fp_term(Q(1), 0, 0, 1);
            if (name == "l" || name == "lambda") return fp_term(Q(1), 1, 0, 0);
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }

    // factor := atom ('^' nat)*
    FamPoly factor() {
        FamPoly base = atom();
        while (eat('^')) {
            int e = exponent();
            base = base.pow(e);
        }
        return base;
    }

    // term := ('-'|'+')* factor ('*' factor)*
    FamPoly term() {
        bool neg = false;
        while (true) {
            char c = peek();
            if (c == '-') {
                neg = !neg;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        FamPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        if (neg) acc = FamPoly() - acc;
        return acc;
    }

    FamPoly expr() {
        FamPoly acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += term();
            } else if (c == '-') {
                ++pos;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    FamPoly run() {
        FamPoly e = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return e;
    }
};

}  // namespace

std::variant<BiPoly, FamPoly> parse_poly(const std::string& text) {
    Parser p(text);
    FamPoly f = p.run();
    if (deg_lambda(f) > 0) return f;
    return eval_lambda0(f);
}

BiPoly parse_bipoly(const std::string& text) {
    auto v = parse_poly(text);
    if (auto* b = std::get_if<BiPoly>(&v)) return *b;
    throw parse_error("expected a polynomial in x, y only", 0);
}

FamPoly parse_fampoly(const std::string& text) {
    Parser p(text);
    return p.run();
}

}  // namespace branchforge
