#include "nearirr/expr.hpp"

#include "nearirr/errors.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace nearirr {

namespace {

// Largest exponent the parser will expand. Far beyond anything the geometry
// can digest, but keeps hostile inputs like "X^9^9^9" from allocating forever.
constexpr std::int64_t kMaxExponent = 1'000'000;

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text; // Int digits or Ident letters
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Ident, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: {
            std::ostringstream msg;
            msg << "unexpected character '" << c << "'";
            throw ParseError(msg.str(), i);
        }
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Polynomial run() {
        Polynomial p = expr();
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", peek().pos);
        return p;
    }

private:
    const Token& peek() const { return toks_[next_]; }
    Token take() { return toks_[next_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++next_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        if (peek().kind == Tok::End)
            throw ParseError(what + ", got end of input", peek().pos);
        throw ParseError(what + ", got '" + peek().text + "'", peek().pos);
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept(Tok::Plus))
                acc += term();
            else if (accept(Tok::Minus))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = signedFactor();
        while (accept(Tok::Star)) acc *= signedFactor();
        return acc;
    }

    Polynomial signedFactor() {
        bool negate = false;
        for (;;) {
            if (accept(Tok::Minus))
                negate = !negate;
            else if (accept(Tok::Plus))
                ;
            else
                break;
        }
        Polynomial p = power();
        return negate ? -p : p;
    }

    Polynomial power() {
        Polynomial base = atom();
        std::vector<std::pair<Integer, std::size_t>> exps;
        while (accept(Tok::Caret)) exps.push_back(exponentLiteral());
        if (exps.empty()) return base;
        // Right-associative: X^2^3 = X^(2^3).
        Integer e = exps.back().first;
        checkExponent(e, exps.back().second);
        for (std::size_t i = exps.size() - 1; i-- > 0;) {
            const auto& [b, pos] = exps[i];
            checkExponent(b, pos);
            if (b > 1 && e > 20)
                throw ParseError("exponent too large", pos);
            Integer folded = 1;
            if (b == 0)
                folded = (e == 0) ? 1 : 0;
            else if (b != 1)
                for (Integer k = 0; k < e; ++k) folded *= b;
            e = folded;
            checkExponent(e, pos);
        }
        return base.pow(static_cast<std::int64_t>(e));
    }

    void checkExponent(const Integer& e, std::size_t pos) const {
        if (e < 0) throw ParseError("negative exponent", pos);
        if (e > kMaxExponent) throw ParseError("exponent too large", pos);
    }

    // sign? INT or '(' sign? INT ')'. Anything else after '^' is either a
    // negative exponent (rejected above) or not a number at all.
    std::pair<Integer, std::size_t> exponentLiteral() {
        const std::size_t start = peek().pos;
        const bool paren = accept(Tok::LParen);
        int sign = 1;
        if (accept(Tok::Minus))
            sign = -1;
        else
            accept(Tok::Plus);
        if (peek().kind != Tok::Int) {
            if (peek().kind == Tok::Ident || peek().kind == Tok::LParen)
                throw ParseError("non-numeric exponent", peek().pos);
            fail("expected integer exponent");
        }
        Integer value(take().text);
        if (paren && !accept(Tok::RParen)) fail("expected ')'");
        return {sign < 0 ? Integer(-value) : value, start};
    }

    Polynomial atom() {
        const Token t = peek();
        switch (t.kind) {
        case Tok::Int: {
            take();
            Integer num(t.text);
            if (accept(Tok::Slash)) {
                if (peek().kind != Tok::Int) fail("expected integer denominator");
                const Token d = take();
                Integer den(d.text);
                if (den == 0) throw ParseError("zero denominator", d.pos);
                return Polynomial(Rational(num, den));
            }
            return Polynomial(Rational(num));
        }
        case Tok::Ident: {
            take();
            if (t.text == "X" || t.text == "x") return Polynomial::variable(Var::X);
            if (t.text == "Y" || t.text == "y") return Polynomial::variable(Var::Y);
            throw ParseError("unknown identifier '" + t.text + "'", t.pos);
        }
        case Tok::LParen: {
            take();
            Polynomial inner = expr();
            if (!accept(Tok::RParen)) fail("expected ')'");
            return inner;
        }
        default:
            fail("expected number, variable, or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t next_ = 0;
};

void appendMonomial(std::string& out, LatticePoint e, const Rational& c, bool first) {
    Rational mag = c;
    if (c < 0) {
        mag = -c;
        out += first ? "-" : " - ";
    } else if (!first) {
        out += " + ";
    }
    std::vector<std::string> pieces;
    if (mag != 1 || (e.alpha == 0 && e.beta == 0)) pieces.push_back(rational_to_string(mag));
    if (e.alpha > 0)
        pieces.push_back(e.alpha == 1 ? "X" : "X^" + std::to_string(e.alpha));
    if (e.beta > 0)
        pieces.push_back(e.beta == 1 ? "Y" : "Y^" + std::to_string(e.beta));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += '*';
        out += pieces[i];
    }
}

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        appendMonomial(out, it->first, it->second, first);
        first = false;
    }
    return out;
}

} // namespace nearirr
