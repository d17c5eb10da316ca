#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "stackchow/presentation.hpp"

namespace stackchow {

namespace {

// Recursive descent over expr := [sign] term (sign term)*, term := factor
// ('*' factor)*, factor := atom ('^' integer)?, atom := integer | variable |
// '(' expr ')'.  Newlines and commas end a relation; other whitespace is
// skipped.  Positions in errors are 1-based offsets into the whole text.
class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), var_count_(static_cast<int>(names.size())) {
        for (size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
    }

    std::vector<Polynomial> run() {
        std::vector<Polynomial> out;
        for (;;) {
            while (!at_end() && (is_space(peek()) || peek() == ',' || peek() == '\n')) ++pos_;
            if (at_end()) break;
            const size_t start = pos_;
            Polynomial p = parse_expr();
            skip_ws();
            if (!at_end() && peek() != ',' && peek() != '\n')
                fail("expected end of relation", pos_);
            if (!p.is_homogeneous()) fail("relation is not homogeneous", start);
            out.push_back(p);
        }
        return out;
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && is_space(peek())) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg, size_t pos) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos + 1) +
                                    ": " + msg);
    }

    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial p = parse_term();
        if (negate) p = -p;
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) return p;
            const bool minus = peek() == '-';
            ++pos_;
            const Polynomial q = parse_term();
            p = minus ? p - q : p + q;
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') return p;
            ++pos_;
            p = p * parse_factor();
        }
    }

    Polynomial parse_factor() {
        Polynomial p = parse_atom();
        skip_ws();
        if (at_end() || peek() != '^') return p;
        ++pos_;
        skip_ws();
        const size_t start = pos_;
        const std::string digits = read_digits();
        if (digits.empty()) fail("expected integer exponent", pos_);
        const mpz_class e(digits);
        if (e < 1) fail("exponent must be positive", start);
        if (e > 10000) fail("exponent too large", start);
        return p.power(static_cast<int>(e.get_si()));
    }

    Polynomial parse_atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of input", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(var_count_, mpz_class(read_digits()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                                 peek() == '_')) {
                name.push_back(peek());
                ++pos_;
            }
            const auto it = index_.find(name);
            if (it == index_.end()) fail("unknown variable '" + name + "'", start);
            return Polynomial::variable(var_count_, it->second);
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            skip_ws();
            if (at_end() || peek() != ')') fail("expected ')'", pos_);
            ++pos_;
            return p;
        }
        fail(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string read_digits() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            ++pos_;
        }
        return digits;
    }

    const std::string& text_;
    int var_count_;
    std::map<std::string, int> index_;
    size_t pos_ = 0;
};

}  // namespace

std::vector<Polynomial> parse_relations(const std::string& text,
                                        const std::vector<std::string>& variable_names) {
    return Parser(text, variable_names).run();
}

}  // namespace stackchow
