#include "binom/parse.hpp"

#include <cctype>

namespace binom {

namespace {

class Parser {
public:
    Parser(const std::string& s, char var) : s_(s), var_(var) {}

    PolyZ run() {
        PolyZ r = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected character '" + std::string(1, s_[pos_]) +
                             "' at position " + std::to_string(pos_));
        return r;
    }

private:
    const std::string& s_;
    char var_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    PolyZ expr() {
        PolyZ acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        PolyZ first = term();
        acc = neg ? -first : first;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    PolyZ term() {
        PolyZ acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    PolyZ factor() {
        PolyZ b = base();
        if (eat('^')) {
            unsigned long e = uint_lit();
            return b.pow(e);
        }
        return b;
    }

    unsigned long uint_lit() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            throw ParseError("expected exponent at position " + std::to_string(pos_));
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (unsigned long)(s_[pos_] - '0');
            if (v > 1000000) throw ParseError("exponent too large");
            ++pos_;
        }
        return v;
    }

    PolyZ base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            PolyZ r = expr();
            if (!eat(')')) throw ParseError("missing ')' at position " + std::to_string(pos_));
            return r;
        }
        if (c == var_) {
            ++pos_;
            return PolyZ::var();
        }
        if (c == 't' || c == 'x')
            throw ParseError(std::string("unexpected variable '") + c + "', expected '" +
                             std::string(1, var_) + "'");
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            skip_ws();
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
                digits += s_[pos_++];
            return PolyZ::constant(ExactInt(digits));
        }
        throw ParseError("unexpected input at position " + std::to_string(pos_));
    }
};

void append_term(std::string& out, const std::string& coeff_abs, bool coeff_is_one,
                 long e, char var, bool negative, bool first) {
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? '-' : '+';
    }
    if (e == 0) {
        out += coeff_abs;
        return;
    }
    if (!coeff_is_one) {
        out += coeff_abs;
        out += '*';
    }
    out += var;
    if (e > 1) {
        out += '^';
        out += std::to_string(e);
    }
}

} // namespace

PolyZ parse_poly(const std::string& text, char var) {
    return Parser(text, var).run();
}

std::string poly_to_string(const PolyZ& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long e = f.degree(); e >= 0; --e) {
        ExactInt c = f.coeff(e);
        if (c == 0) continue;
        bool neg = c < 0;
        ExactInt a = neg ? ExactInt(-c) : c;
        append_term(out, a.get_str(), a == 1, e, var, neg, first);
        first = false;
    }
    return out;
}

std::string poly_to_string(const PolyQ& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long e = f.degree(); e >= 0; --e) {
        ExactRat c = f.coeff(e);
        if (c == 0) continue;
        bool neg = c < 0;
        ExactRat a = neg ? ExactRat(-c) : c;
        append_term(out, a.get_str(), a == 1, e, var, neg, first);
        first = false;
    }
    return out;
}

} // namespace binom
