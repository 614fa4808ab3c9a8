#pragma once

// Parser for algebra expressions such as "2 w[1,2;0]^w[2;0] - 1/2 w[1;0]^w[2;0]".
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('^' factor)*
//   factor := scalar ['*'] factor | scalar | atom | '(' expr ')'
//   atom   := 'w[' i ',' j ';' g ']'  (group element index g)
//           | 'w[' k ';' label ']'    (point label of Z)
//
// The result lives in the free exterior algebra; straightening is left to the caller.

#include <cctype>
#include <string>
#include <string_view>

#include "orbconf/element.hpp"
#include "orbconf/error.hpp"
#include "orbconf/presentation.hpp"
#include "orbconf/scalar.hpp"

namespace orbconf {

template <typename Scalar = Integer>
class ExpressionParser {
public:
    ExpressionParser(const Presentation& p, std::string_view text) : p_(p), s_(text) {}

    Element<Scalar> parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression: " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::string digits() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned index() {
        const auto text = digits();
        if (text.size() > 9) fail("index too large");
        return static_cast<unsigned>(std::stoul(text));
    }

    Element<Scalar> expr() {
        Element<Scalar> acc;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        auto t = term();
        acc += negative ? -t : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Element<Scalar> term() {
        auto acc = factor();
        while (eat('^')) acc = exterior_product(acc, factor());
        return acc;
    }

    bool factor_follows() {
        skip();
        return pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(s_[pos_])));
    }

    Element<Scalar> factor() {
        if (at_digit()) {
            std::string text = digits();
            if (eat('/')) text += "/" + digits();
            const auto c = parse_scalar<Scalar>(text);
            const bool star = eat('*');
            if (star || factor_follows()) {
                auto rest = factor();
                rest *= c;
                return rest;
            }
            return Element<Scalar>::from_monomial(Monomial::unit(), c);
        }
        if (eat('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        return atom();
    }

    Element<Scalar> atom() {
        if (!eat('w')) fail("expected w[...]");
        expect('[');
        const unsigned a = index();
        if (eat(',')) {
            const unsigned b = index();
            expect(';');
            const unsigned g = index();
            expect(']');
            if (a == b) fail("w[i,j;g] needs i != j");
            check_strand(a);
            check_strand(b);
            if (g >= p_.group().order()) fail("group element " + std::to_string(g) + " out of range");
            return p_.omega(a, b, g).template cast<Scalar>();
        }
        expect(';');
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
        const std::string label(s_.substr(start, pos_ - start));
        expect(']');
        check_strand(a);
        const auto point = p_.action().find_point(label);
        if (!point) fail("unknown point label '" + label + "'");
        return p_.omega_diag(a, *point).template cast<Scalar>();
    }

    void check_strand(unsigned k) const {
        if (k < 1 || k > p_.n()) fail("strand " + std::to_string(k) + " outside 1.." + std::to_string(p_.n()));
    }

    const Presentation& p_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <typename Scalar = Integer>
Element<Scalar> parse_expression(const Presentation& p, std::string_view text) {
    return ExpressionParser<Scalar>(p, text).parse();
}

// "2 w[1,2;0]^w[2;0] - w[1;0]"; "0" for zero.
template <typename Scalar>
std::string format_element(const Presentation& p, const Element<Scalar>& x) {
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        const bool neg = sgn(c) < 0;
        const Scalar mag = neg ? Scalar(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string word;
        for (auto f : m.factors()) word += (word.empty() ? "" : "^") + p.generator_name(f);
        if (word.empty())
            out += to_string(mag);
        else
            out += (mag == 1 ? "" : to_string(mag) + " ") + word;
    }
    return out.empty() ? "0" : out;
}

}  // namespace orbconf
