#include "blax/expr_parser.hpp"

#include <cctype>

#include "blax/errors.hpp"

namespace blax {

namespace {

// Single-pass scanner over the input; pos_ always points at the next
// unconsumed character, which is exactly what SyntaxError reports.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RatFunc run() {
        RatFunc e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    RatFunc expr() {
        RatFunc e = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    RatFunc term() {
        RatFunc e = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                e *= factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const RatFunc d = factor();
                if (d.is_zero())
                    throw PoleError("division by an identically-zero expression at position " +
                                    std::to_string(at));
                e /= d;
            } else {
                return e;
            }
        }
    }

    RatFunc factor() {
        RatFunc b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected integer exponent", pos_);
            long n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                n = n * 10 + (text_[pos_++] - '0');
            if (neg && b.is_zero())
                throw PoleError("zero raised to a negative power at position " +
                                std::to_string(pos_));
            b = b.pow(static_cast<int>(neg ? -n : n));
        }
        return b;
    }

    RatFunc base() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc e = expr();
            skip_ws();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            Rational q(digits);  // arbitrary precision
            q.canonicalize();
            return RatFunc::constant({}, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            std::string word;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                word += text_[pos_++];
            if (word == "lambda" || word == "mu") return RatFunc::variable({word}, word);
            throw SyntaxError("unknown identifier '" + word + "'", at);
        }
        throw SyntaxError("unexpected character", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expression(const std::string& text) { return Parser(text).run(); }

}  // namespace blax
