#include "hcf/parser.hpp"

#include "hcf/format.hpp"

#include <cctype>
#include <cstring>

namespace hcf {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    FieldPtr field; // the one allowed radicand's field, once seen
    GaussianInt radicand;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw error("parse error at position " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    FieldElement parse_expr() {
        FieldElement v = parse_term();
        while (true) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    FieldElement parse_term() {
        FieldElement v = parse_factor();
        while (true) {
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/')) {
                FieldElement d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else
                return v;
        }
    }

    FieldElement parse_factor() {
        if (eat('-')) return -parse_factor();
        return parse_atom();
    }

    FieldElement parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            FieldElement v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            return FieldElement(GaussianRational(GaussianInt(BigInt(digits), 0)));
        }
        if (c == 'i' && !starts_with("sqrt")) {
            ++pos;
            return FieldElement(GaussianRational::i());
        }
        if (starts_with("sqrt")) {
            pos += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            return parse_sqrt_body();
        }
        fail("expected a number, 'i', 'sqrt(...)' or '('");
    }

    bool starts_with(const char* s) {
        skip_ws();
        return text.compare(pos, strlen(s), s) == 0;
    }

    FieldElement parse_sqrt_body() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] != ')') ++pos;
        if (pos >= text.size()) fail("unterminated sqrt(");
        std::string lit = text.substr(start, pos - start);
        ++pos; // ')'
        std::string squeezed;
        for (char ch : lit)
            if (!isspace(static_cast<unsigned char>(ch))) squeezed += ch;
        GaussianInt d = parse_gaussian_int(squeezed);
        if (auto root = gaussian_sqrt(d.re, d.im)) {
            // Squares demote to the exact principal root.
            GaussianInt r = *root;
            if (r.re < 0 || (r.re == 0 && r.im < 0)) r = -r;
            return FieldElement(GaussianRational(r));
        }
        if (field) {
            if (!(radicand == d))
                throw error("two distinct radicands: sqrt(" + format_gaussian_int(radicand) +
                            ") and sqrt(" + format_gaussian_int(d) + ")");
        } else {
            field = QuadraticField::make(d.re, d.im);
            radicand = d;
        }
        return FieldElement::sqrt_d(field);
    }
};

} // namespace

FieldElement parse_expr(const std::string& text) {
    Parser p(text);
    FieldElement v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace hcf
