#include "cendiv/poly_io.hpp"
#include "cendiv/errors.hpp"

#include <cctype>

namespace cendiv {

namespace {

class PolyParser {
public:
    PolyParser(const Field& field, const std::string& text)
        : field_(field), text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    const Field& field_;
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') { ++line; col = 1; } else ++col;
        }
        throw parse_error(msg + " in '" + text_ + "'", line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant())
                    fail("division by a non-constant");
                if (d.is_zero())
                    fail("division by zero");
                acc = acc.scaled(field_.inv(d.coeff(0)));
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        bool neg = false;
        for (;;) {
            if (eat('+')) continue;
            if (eat('-')) { neg = !neg; continue; }
            break;
        }
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("exponent must be a nonnegative integer");
            long e = std::stol(text_.substr(start, pos_ - start));
            if (e > 4096)
                fail("exponent too large");
            base = base.pow(static_cast<int>(e));
        }
        return neg ? -base : base;
    }

    Poly atom() {
        int c = peek();
        if (c == '(') {
            eat('(');
            Poly inner = expr();
            if (!eat(')'))
                fail("missing ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x(field_);
        }
        if (c == 't') {
            ++pos_;
            if (!field_.is_finite() || field_.extension_degree() < 2)
                fail("'t' is only defined over extension fields");
            return Poly::constant(field_, field_.generator());
        }
        if (c >= '0' && c <= '9') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            BigInt z(text_.substr(start, pos_ - start));
            return Poly::constant(field_, field_.from_integer(z));
        }
        fail("unexpected character");
    }
};

} // namespace

Poly parse_poly(const Field& field, const std::string& text) {
    return PolyParser(field, text).parse();
}

FieldElem parse_element(const Field& field, const std::string& text) {
    Poly p = parse_poly(field, text);
    if (p.degree() > 0)
        throw parse_error("expected a scalar, got a polynomial in x: '" + text + "'");
    return p.is_zero() ? field.zero() : p.coeff(0);
}

} // namespace cendiv
