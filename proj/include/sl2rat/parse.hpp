#pragma once

// Expression reader for elements of Q(z).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | var | '(' expr ')'
//
// Juxtaposition ("2z") is rejected; exponents are nonnegative integers.

#include <cctype>
#include <string>
#include <string_view>

#include "ratfunc.hpp"

namespace sl2rat {

namespace detail {

class ExprParser {
   public:
    ExprParser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Syntax, "syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    throw Error(ErrorKind::ZeroDenominator,
                                "division by the zero polynomial at position " + std::to_string(at));
                }
                r /= d;
            } else {
                skip_ws();
                if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
                    fail("implicit multiplication is not allowed");
                return r;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        if (accept('^')) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a nonnegative integer exponent");
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ - start > 6) fail("exponent too large");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            return base.pow(e);
        }
        return base;
    }

    RatFunc primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (s_.substr(start, pos_ - start) != var_) {
                pos_ = start;
                fail("unknown identifier '" + std::string(s_.substr(start, pos_ - start)) + "'");
            }
            return RatFunc::z();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(std::string_view text, std::string_view var = "z") {
    return detail::ExprParser(text, var).parse();
}

inline std::string format_ratfunc(const RatFunc& f) { return f.to_string("z"); }

/// A constant expression such as "-1/4".
inline Rational parse_rational(std::string_view text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_constant()) throw Error(ErrorKind::InvalidInput, "expected a rational constant, got '" + std::string(text) + "'");
    return f.constant_value();
}

inline Poly parse_poly(std::string_view text, std::string_view var = "z") {
    RatFunc f = parse_ratfunc(text, var);
    if (!f.is_poly()) throw Error(ErrorKind::InvalidInput, "expected a polynomial, got '" + std::string(text) + "'");
    return f.num();
}

}  // namespace sl2rat
