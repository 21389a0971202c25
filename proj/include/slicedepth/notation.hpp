#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slicedepth/continued_fraction.hpp"

namespace slicedepth {

struct PretzelParams {
    Int p, q, r;
    friend bool operator==(const PretzelParams& a, const PretzelParams& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

/// Parsed surface notation: C(a1,...,am), P(p,q,r) or p/q.
struct NotationInput {
    std::string raw;
    std::variant<EvenCF, Fraction, PretzelParams> parsed;
};

namespace detail {

class NotationParser {
public:
    explicit NotationParser(std::string_view s) : s_(s) {}

    NotationInput parse() {
        skip_ws();
        if (eof()) throw SyntaxError(col(), "empty input");
        NotationInput out;
        out.raw = std::string(s_);
        char c = peek();
        if (c == 'C') {
            std::vector<Int> list = coefficient_list();
            if (list.empty()) throw EmptyListError();
            out.parsed = EvenCF(std::move(list));
        } else if (c == 'P') {
            std::vector<Int> list = coefficient_list();
            if (list.size() != 3)
                throw SyntaxError(col(), "P(...) takes exactly 3 parameters, got " +
                                             std::to_string(list.size()));
            out.parsed = PretzelParams{list[0], list[1], list[2]};
        } else if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            skip_ws();
            expect('/');
            skip_ws();
            Int den = integer();
            if (den == 0) throw SyntaxError(col(), "zero denominator");
            out.parsed = Fraction(num, den);
        } else {
            throw SyntaxError(col(), std::string("expected C(...), P(...) or p/q, got '") + c + "'");
        }
        skip_ws();
        if (!eof()) throw SyntaxError(col(), "trailing input");
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    std::size_t col() const { return pos_ + 1; }  // 1-based column

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (eof() || peek() != c)
            throw SyntaxError(col(), std::string("expected '") + c + "'");
        ++pos_;
    }

    Int integer() {
        bool negative = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos_;
        }
        std::size_t digits = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits) throw SyntaxError(col(), "expected an integer");
        Int value(std::string(s_.substr(digits, pos_ - digits)));
        return negative ? -value : value;
    }

    std::vector<Int> coefficient_list() {
        ++pos_;  // past 'C' or 'P'
        skip_ws();
        expect('(');
        skip_ws();
        std::vector<Int> list;
        if (!eof() && peek() == ')') {
            ++pos_;
            return list;
        }
        for (;;) {
            list.push_back(integer());
            skip_ws();
            if (!eof() && peek() == ',') {
                ++pos_;
                skip_ws();
                continue;
            }
            expect(')');
            return list;
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses C(a1,...,am), P(p,q,r) or p/q. Whitespace-tolerant; integers
/// are decimal with an optional sign.
inline NotationInput parse_notation(std::string_view raw) {
    return detail::NotationParser(raw).parse();
}

/// Canonical rendering; parse_notation(render_notation(x)) recovers x.
inline std::string render_notation(const NotationInput& input) {
    struct Renderer {
        std::string operator()(const EvenCF& cf) const {
            std::string out = "C(";
            for (std::size_t i = 0; i < cf.size(); ++i) {
                if (i > 0) out += ',';
                out += cf.coefficients()[i].str();
            }
            return out + ")";
        }
        std::string operator()(const Fraction& f) const { return f.str(); }
        std::string operator()(const PretzelParams& p) const {
            return "P(" + p.p.str() + "," + p.q.str() + "," + p.r.str() + ")";
        }
    };
    return std::visit(Renderer{}, input.parsed);
}

}  // namespace slicedepth
