#ifndef WID_EXPR_HPP
#define WID_EXPR_HPP

#include <wid/freealg.hpp>
#include <wid/scalars.hpp>

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wid {

/*
 * Textual generator names: x<N> is generator 2N-1 and y<N> is generator 2N,
 * so the two families never collide.
 */
struct Naming {
    static Gen x(std::uint32_t n) { return 2 * n - 1; }
    static Gen y(std::uint32_t n) { return 2 * n; }
    static std::string name(Gen g)
    {
        return (g % 2 ? "x" + std::to_string((g + 1) / 2) : "y" + std::to_string(g / 2));
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct ExprNode;
using ExprAst = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, variable, negate, sum, difference, product, power, commutator, jordan, standard };

    Kind kind;
    Rational value;        // number
    Gen generator = 0;     // variable
    std::uint32_t arg = 0; // power exponent, standard-polynomial degree
    std::vector<ExprAst> children;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    ExprAst parse()
    {
        ExprAst e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool accept_word(const std::string& w)
    {
        skip();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a natural number");
        return s_.substr(start, pos_ - start);
    }

    std::uint32_t natural()
    {
        const std::string d = digits();
        if (d.size() > 9)
            fail("number too large");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    static ExprAst node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprAst expr()
    {
        ExprAst lhs;
        if (accept('-'))
            lhs = node({ExprNode::Kind::negate, {}, 0, 0, {term()}});
        else
            lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = node({ExprNode::Kind::sum, {}, 0, 0, {lhs, term()}});
            else if (accept('-'))
                lhs = node({ExprNode::Kind::difference, {}, 0, 0, {lhs, term()}});
            else
                return lhs;
        }
    }

    ExprAst term()
    {
        ExprAst lhs = factor();
        while (accept('*'))
            lhs = node({ExprNode::Kind::product, {}, 0, 0, {lhs, factor()}});
        return lhs;
    }

    ExprAst factor()
    {
        ExprAst base = atom();
        if (accept('^')) {
            const std::size_t at = pos_;
            const std::uint32_t e = natural();
            if (e == 0)
                throw ParseError("exponent must be positive", at);
            return node({ExprNode::Kind::power, {}, 0, e, {base}});
        }
        return base;
    }

    ExprAst atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = digits();
            std::string den = "1";
            if (accept('/'))
                den = digits();
            if (den.find_first_not_of('0') == std::string::npos)
                fail("zero denominator");
            return node({ExprNode::Kind::number, Rational(Integer(num), Integer(den)), 0, 0, {}});
        }
        if (accept_word("jord(")) {
            ExprAst a = expr();
            expect(',');
            ExprAst b = expr();
            expect(')');
            return node({ExprNode::Kind::jordan, {}, 0, 0, {a, b}});
        }
        if (accept_word("S(")) {
            const std::size_t at = pos_;
            const std::uint32_t n = natural();
            if (n == 0)
                throw ParseError("standard polynomial needs n >= 1", at);
            expect(')');
            return node({ExprNode::Kind::standard, {}, 0, n, {}});
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            const std::size_t at = pos_;
            const std::uint32_t idx = natural();
            if (idx == 0)
                throw ParseError("variable indices start at 1", at);
            return node({ExprNode::Kind::variable, {}, c == 'x' ? Naming::x(idx) : Naming::y(idx), 0, {}});
        }
        if (accept('(')) {
            ExprAst e = expr();
            expect(')');
            return e;
        }
        if (accept('[')) {
            ExprAst a = expr();
            expect(',');
            ExprAst b = expr();
            expect(']');
            return node({ExprNode::Kind::commutator, {}, 0, 0, {a, b}});
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/*
 * Grammar:
 *   expr   := ["-"] term { ("+"|"-") term }
 *   term   := factor { "*" factor }
 *   factor := atom [ "^" natural ]
 *   atom   := rational | var | "(" expr ")" | "[" expr "," expr "]"
 *           | "jord(" expr "," expr ")" | "S(" natural ")"
 *   var    := ("x"|"y") natural
 */
inline ExprAst parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

inline NcPoly lower(const ExprAst& e)
{
    using K = ExprNode::Kind;
    switch (e->kind) {
    case K::number:
        return NcPoly(e->value);
    case K::variable:
        return NcPoly::gen(e->generator);
    case K::negate:
        return -lower(e->children[0]);
    case K::sum:
        return lower(e->children[0]) + lower(e->children[1]);
    case K::difference:
        return lower(e->children[0]) - lower(e->children[1]);
    case K::product:
        return lower(e->children[0]) * lower(e->children[1]);
    case K::power:
        return power(lower(e->children[0]), e->arg);
    case K::commutator:
        return commutator(lower(e->children[0]), lower(e->children[1]));
    case K::jordan:
        return jordan(lower(e->children[0]), lower(e->children[1]));
    case K::standard: {
        std::vector<Gen> args;
        for (std::uint32_t i = 1; i <= e->arg; ++i)
            args.push_back(Naming::x(i));
        return standard_poly(args);
    }
    }
    throw std::logic_error("unknown expression node");
}

inline NcPoly parse_poly(const std::string& text) { return lower(parse_expr(text)); }

inline std::string format_word(const Word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        s += (i ? "*" : "") + Naming::name(w.letters[i]);
    return s;
}

/// Canonical text: terms in word order, explicit rational coefficients.
inline std::string format_expr(const NcPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        const Rational mag = c.abs();
        std::string term;
        if (w.empty())
            term = mag.str();
        else if (mag.is_one())
            term = format_word(w);
        else
            term = mag.str() + "*" + format_word(w);
        if (first)
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

/// Parses a single monomial such as "y1*x2" (empty text or "1" is the empty word).
inline Word parse_word(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text.substr(first, text.find_last_not_of(" \t") - first + 1) == "1")
        return Word{};
    const NcPoly p = parse_poly(text);
    if (p.size() != 1 || !p.terms().begin()->second.is_one())
        throw std::invalid_argument("'" + text + "' is not a monomial");
    return p.terms().begin()->first;
}

}  // namespace wid

#endif  // WID_EXPR_HPP
