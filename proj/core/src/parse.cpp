#include "relcyc/parse.hpp"

#include <cctype>
#include <string>

#include "relcyc/errors.hpp"

namespace relcyc {

namespace {

constexpr unsigned long kMaxExponent = 1000000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPoly run() {
        IntPoly result;
        skip_ws();
        bool first = true;
        while (true) {
            int sign = 1;
            if (first) {
                if (at_end()) fail("a term");
                if (peek() == '+' || peek() == '-') {
                    if (take() == '-') sign = -1;
                    skip_ws();
                }
            } else {
                if (at_end()) break;
                if (peek() != '+' && peek() != '-') fail("'+' or '-'");
                if (take() == '-') sign = -1;
                skip_ws();
            }
            result += term(sign);
            skip_ws();
            first = false;
        }
        return result;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = at_end() ? "end of input" : std::string("'") + peek() + "'";
        throw ParseError(pos_, expected,
                         "parse error at position " + std::to_string(pos_) + ": expected " +
                             expected + ", got " + got);
    }

    Int integer_literal() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    unsigned long exponent() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("an unsigned integer exponent");
        std::size_t at = pos_;
        Int e = integer_literal();
        if (e > kMaxExponent)
            throw ParseError(at, "an exponent <= " + std::to_string(kMaxExponent),
                             "parse error at position " + std::to_string(at) +
                                 ": exponent too large");
        return e.get_ui();
    }

    /* power := 'x' | 'x' '^' unsigned-integer */
    unsigned long power() {
        ++pos_;  // consume 'x', checked by caller
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            return exponent();
        }
        return 1;
    }

    /* term := integer | integer '*' power | integer power | power */
    IntPoly term(int sign) {
        if (at_end()) fail("an integer or 'x'");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int c = integer_literal();
            if (sign < 0) c = -c;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'x') fail("'x'");
                return IntPoly::monomial(std::move(c), power());
            }
            if (!at_end() && peek() == 'x') return IntPoly::monomial(std::move(c), power());
            return IntPoly(std::move(c));
        }
        if (peek() == 'x') return IntPoly::monomial(Int(sign), power());
        fail("an integer or 'x'");
    }
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
    return Parser(text).run();
}

}  // namespace relcyc
