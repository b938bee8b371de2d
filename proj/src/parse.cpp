#include "cremona/parse.hpp"

#include <cctype>

namespace cremona {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Parser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(pos, msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    char peek() const {
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected a digit");
        return text.substr(start, pos - start);
    }

    void reject_decimal_point() {
        if (peek() == '.')
            fail("decimal literals are not supported; write an exact fraction like 3/2");
    }

    Rat rational() {
        std::string num = digits();
        reject_decimal_point();
        if (peek() == '/') {
            ++pos;
            skip_ws();
            size_t den_pos = pos;
            std::string den = digits();
            reject_decimal_point();
            mpz_class d(den);
            if (d == 0) {
                pos = den_pos;
                fail("denominator must be a positive integer");
            }
            Rat q(mpz_class(num), d);
            q.canonicalize();
            return q;
        }
        return Rat(mpz_class(num));
    }

    unsigned natural() {
        if (peek() == '-')
            fail("negative exponents are not allowed");
        std::string d = digits();
        if (d.size() > 4)
            fail("exponent too large");
        unsigned long v = std::stoul(d);
        if (v > kMaxExponent)
            fail("exponent too large");
        return static_cast<unsigned>(v);
    }

    RatPoly base() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos;
            return -base();
        }
        if (c == '(') {
            ++pos;
            RatPoly e = expr();
            skip_ws();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (c == 't') {
            ++pos;
            return RatPoly::variable();
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail(std::string("unknown variable '") + c + "': only t is supported");
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatPoly(rational());
        fail("expected a rational, 't', '(' or '-'");
    }

    RatPoly factor() {
        RatPoly b = base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            return b.pow(natural());
        }
        return b;
    }

    RatPoly term() {
        RatPoly f = factor();
        skip_ws();
        while (eat('*')) {
            f = f * factor();
            skip_ws();
        }
        return f;
    }

    RatPoly expr() {
        RatPoly e = term();
        skip_ws();
        while (true) {
            if (eat('+')) {
                e = e + term();
            } else if (eat('-')) {
                e = e - term();
            } else {
                break;
            }
            skip_ws();
        }
        return e;
    }
};

}

ParseError::ParseError(size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) +
                         ": " + message),
      position(position) {}

RatPoly parse_poly(const std::string& text) {
    Parser p{text};
    p.skip_ws();
    RatPoly result = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("unexpected trailing input");
    return result;
}

}
