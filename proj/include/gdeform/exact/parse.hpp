#pragma once

// Text syntax for exact scalars: rationals "p/q" and polynomial expressions in
// "w", where w denotes zeta_m for the declared conductor m.  Examples:
// "3", "-1/2", "w^2", "1 + 2*w", "(w - 1)/3".

#include <cctype>
#include <string>

#include "gdeform/exact/cyclotomic.hpp"

namespace gdeform {

namespace detail {

class ScalarParser {
public:
    ScalarParser(const std::string& text, int conductor) : s_(text), m_(conductor) {}

    CycScalar parse()
    {
        CycScalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError("cannot parse scalar '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    CycScalar expr()
    {
        CycScalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    CycScalar term()
    {
        CycScalar v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                CycScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }
    CycScalar factor()
    {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        CycScalar base = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            long e = integer_literal();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    long integer_literal()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    CycScalar primary()
    {
        skip();
        if (eat('(')) {
            CycScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'w' || s_[pos_] == 'z')) {
            ++pos_;
            return CycScalar::zeta(m_);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number, 'w' or '('");
        return CycScalar(Rational(Integer(s_.substr(start, pos_ - start))));
    }

    std::string s_;
    int m_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an exact scalar; "w" is a primitive conductor-th root of unity.
inline CycScalar parse_scalar(const std::string& text, int conductor = 1)
{
    return detail::ScalarParser(text, conductor).parse();
}

}  // namespace gdeform
