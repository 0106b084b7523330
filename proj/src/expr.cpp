#include "wicksos/expr.hpp"

#include <cctype>

namespace wicksos {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        skip_ws();
        return src[pos++];
    }
};

struct Parser {
    Lexer lx;
    int n;

    Parser(const std::string& s, int n_) : lx(s), n(n_) {}

    Poly parse() {
        Poly p = expr();
        if (!lx.eof()) throw ParseError(lx.pos, "unexpected trailing input");
        return p;
    }

    Poly expr() {
        bool neg = false;
        if (lx.peek() == '+' || lx.peek() == '-') neg = (lx.get() == '-');
        Poly acc = term();
        if (neg) acc = -acc;
        while (lx.peek() == '+' || lx.peek() == '-') {
            char op = lx.get();
            Poly t = term();
            if (op == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        while (lx.peek() == '*') {
            lx.get();
            acc = acc * power();
        }
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (lx.peek() == '^') {
            lx.get();
            unsigned e = exponent();
            base = base.pow_ptwise(e);
        }
        return base;
    }

    unsigned exponent() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        if (lx.pos >= lx.src.size() || !std::isdigit((unsigned char)lx.src[lx.pos]))
            throw ParseError(start, "expected nonnegative integer exponent");
        unsigned long e = 0;
        while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos])) {
            e = e * 10 + (lx.src[lx.pos] - '0');
            if (e > 1000000) throw ParseError(start, "exponent too large");
            ++lx.pos;
        }
        return (unsigned)e;
    }

    Poly atom() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        if (lx.pos >= lx.src.size()) throw ParseError(start, "unexpected end of input");
        char c = lx.src[lx.pos];
        if (c == '(') {
            ++lx.pos;
            Poly p = expr();
            if (lx.peek() != ')') throw ParseError(lx.pos, "expected ')'");
            lx.get();
            return p;
        }
        if (std::isdigit((unsigned char)c)) return rational(start);
        if (c == 'i' && !follows_ident(lx.pos + 1)) {
            ++lx.pos;
            return Poly::constant(n, GaussRat::i());
        }
        if (c == 'J' && !follows_ident(lx.pos + 1)) {
            ++lx.pos;
            return momentum_map(n);
        }
        if (c == 'z') return variable(start);
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }

    bool follows_ident(std::size_t p) {
        return p < lx.src.size() &&
               (std::isalnum((unsigned char)lx.src[p]) || lx.src[p] == '_');
    }

    Poly rational(std::size_t start) {
        mpz_class num = integer(start);
        if (lx.pos < lx.src.size() && lx.src[lx.pos] == '.')
            throw ParseError(lx.pos, "float literals are not accepted; use rationals p/q");
        if (lx.pos < lx.src.size() && lx.src[lx.pos] == '/') {
            ++lx.pos;
            std::size_t dstart = lx.pos;
            if (lx.pos >= lx.src.size() || !std::isdigit((unsigned char)lx.src[lx.pos]))
                throw ParseError(dstart, "expected denominator");
            mpz_class den = integer(dstart);
            if (lx.pos < lx.src.size() && lx.src[lx.pos] == '.')
                throw ParseError(lx.pos, "float literals are not accepted; use rationals p/q");
            if (den == 0) throw ParseError(dstart, "zero denominator");
            return Poly::constant(n, GaussRat(Rat(num, den)));
        }
        return Poly::constant(n, GaussRat(Rat(num)));
    }

    mpz_class integer(std::size_t start) {
        std::string digits;
        while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos]))
            digits.push_back(lx.src[lx.pos++]);
        if (digits.empty()) throw ParseError(start, "expected integer");
        return mpz_class(digits);
    }

    Poly variable(std::size_t start) {
        ++lx.pos;  // 'z'
        bool bar = false;
        if (lx.pos < lx.src.size() && lx.src[lx.pos] == 'b') {
            bar = true;
            ++lx.pos;
        }
        if (lx.pos >= lx.src.size() || !std::isdigit((unsigned char)lx.src[lx.pos]))
            throw ParseError(start, "expected variable index");
        unsigned long idx = 0;
        while (lx.pos < lx.src.size() && std::isdigit((unsigned char)lx.src[lx.pos])) {
            idx = idx * 10 + (lx.src[lx.pos] - '0');
            if (idx > 10000) throw ParseError(start, "variable index too large");
            ++lx.pos;
        }
        if (idx > (unsigned long)n)
            throw ParseError(start, "variable index exceeds dimension (max z" +
                                        std::to_string(n) + ")");
        return bar ? Poly::covariable(n, idx) : Poly::variable(n, idx);
    }
};

std::string rat_factor(const Rat& r) {
    // coefficient factor in a product; parenthesize fractions
    if (r.is_integer()) return r.str();
    return "(" + r.str() + ")";
}

/// Renders |c| (c with its display sign removed) as a product prefix, or ""
/// for a bare unit coefficient. `has_mon` tells whether a monomial follows.
std::string coeff_str(const GaussRat& c, bool has_mon) {
    if (c.im().is_zero()) {
        const Rat& r = c.re();
        if (r == Rat(1) && has_mon) return "";
        return rat_factor(r);
    }
    if (c.re().is_zero()) {
        const Rat& im = c.im();
        if (im == Rat(1)) return "i";
        return rat_factor(im) + "*i";
    }
    // mixed: keep exact signs inside the parentheses
    std::string s = "(" + c.re().str();
    s += (c.im().sign() < 0 ? "-" : "+");
    Rat ai = abs(c.im());
    s += (ai == Rat(1)) ? "i" : ai.str() + "*i";
    s += ")";
    return s;
}

std::string monomial_str(const TermKey& key) {
    std::string s;
    auto emit = [&s](const char* name, std::size_t j, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name + std::to_string(j);
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (std::size_t j = 0; j < key.K.size(); ++j) emit("z", j, key.K[j]);
    for (std::size_t j = 0; j < key.L.size(); ++j) emit("zb", j, key.L[j]);
    return s;
}

}  // namespace

Poly parse_poly(const std::string& src, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    Parser p(src, n);
    return p.parse();
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        // display sign: real part if nonzero, else imaginary part;
        // mixed coefficients keep their signs inside parentheses
        bool mixed = !c.re().is_zero() && !c.im().is_zero();
        bool neg = !mixed && (c.re().is_zero() ? c.im().sign() < 0 : c.re().sign() < 0);
        GaussRat mag = neg ? -c : c;
        std::string mon = monomial_str(key);
        std::string cs = coeff_str(mag, !mon.empty());
        std::string term;
        if (cs.empty())
            term = mon;
        else if (mon.empty())
            term = cs;
        else
            term = cs + "*" + mon;
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

}  // namespace wicksos
