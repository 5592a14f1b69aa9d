#include "addact/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace addact {

namespace {

// ===== Lexer =====

enum class Tok {
    Ident, Integer,
    LBracket, RBracket, LParen, RParen,
    Comma, Slash, Plus, Minus, Star, Caret, Equals,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    // line0/col0 offset the reported positions, for parsing line fragments
    // of a larger document
    explicit Lexer(std::string_view text, std::size_t line0 = 1, std::size_t col0 = 1)
        : text_(text), line_(line0), col_(col0) {}

    Token next() {
        skip_space();
        const std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                word += text_[pos_];
                advance();
            }
            return {Tok::Ident, std::move(word), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                advance();
            }
            return {Tok::Integer, std::move(digits), line, col};
        }
        advance();
        switch (c) {
            case '[': return {Tok::LBracket, "[", line, col};
            case ']': return {Tok::RBracket, "]", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '=': return {Tok::Equals, "=", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

// ===== Grammar =====
//
// presentation := "Q" "[" ident ("," ident)* "]" "/" "(" poly ("," poly)* ")"
// poly         := ["-"] term (("+" | "-") term)*
// term         := coef "*" monomial | coef | monomial
// monomial     := factor ("*" factor)*
// factor       := ident ["^" integer]
// coef         := integer ["/" integer]

class Parser {
public:
    explicit Parser(std::string_view text, std::size_t line0 = 1, std::size_t col0 = 1)
        : lexer_(text, line0, col0) {
        cur_ = lexer_.next();
    }

    IdealPresentation presentation() {
        const Token q = expect(Tok::Ident, "'Q'");
        if (q.text != "Q")
            throw ParseError("presentations start with 'Q'", q.line, q.column);
        expect(Tok::LBracket, "'['");
        std::vector<std::string> vars;
        while (true) {
            const Token v = expect(Tok::Ident, "a variable name");
            if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
                throw ParseError("duplicate variable '" + v.text + "'", v.line, v.column);
            vars.push_back(v.text);
            if (cur_.kind != Tok::Comma) break;
            consume();
        }
        expect(Tok::RBracket, "']'");
        expect(Tok::Slash, "'/'");
        expect(Tok::LParen, "'('");

        ring_ = Ring::make(std::move(vars));
        std::vector<Polynomial> gens;
        while (true) {
            const Token start = cur_;
            Polynomial g = poly();
            if (g.is_zero())
                throw ParseError("zero generator", start.line, start.column);
            if (!g.constant_term().is_zero())
                throw ParseError("generator has nonzero constant term",
                                 start.line, start.column);
            gens.push_back(std::move(g));
            if (cur_.kind != Tok::Comma) break;
            consume();
        }
        expect(Tok::RParen, "')'");
        expect(Tok::End, "end of input");
        return IdealPresentation(ring_, std::move(gens));
    }

    Polynomial polynomial(RingPtr ring) {
        ring_ = std::move(ring);
        Polynomial p = poly();
        expect(Tok::End, "end of input");
        return p;
    }

private:
    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError("expected " + what, cur_.line, cur_.column);
        Token got = cur_;
        consume();
        return got;
    }
    void consume() { cur_ = lexer_.next(); }

    Polynomial poly() {
        Polynomial p = Polynomial::zero(ring_);
        bool negative = false;
        if (cur_.kind == Tok::Minus) {
            negative = true;
            consume();
        }
        p += term(negative);
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            consume();
            p += term(minus);
        }
        return p;
    }

    Polynomial term(bool negative) {
        Rational c(1);
        if (cur_.kind == Tok::Integer) {
            c = coef();
            if (cur_.kind != Tok::Star) {
                // a bare constant
                return Polynomial::constant(ring_, negative ? -c : c);
            }
            consume();
        }
        if (cur_.kind != Tok::Ident)
            throw ParseError("expected a variable", cur_.line, cur_.column);
        Monomial m = monomial();
        return Polynomial::term(ring_, std::move(m), negative ? -c : c);
    }

    Rational coef() {
        const Token num = expect(Tok::Integer, "an integer");
        if (cur_.kind == Tok::Slash) {
            consume();
            const Token den = expect(Tok::Integer, "a denominator");
            const Rational::Int d{den.text};
            if (d == 0) throw ParseError("zero denominator", den.line, den.column);
            return Rational(Rational::Int(num.text), d);
        }
        return Rational(Rational::Int(num.text));
    }

    Monomial monomial() {
        Monomial m = Monomial::unit(ring_->nvars());
        factor_into(m);
        while (cur_.kind == Tok::Star) {
            consume();
            factor_into(m);
        }
        return m;
    }

    void factor_into(Monomial& m) {
        const Token v = expect(Tok::Ident, "a variable");
        const auto idx = ring_->index_of(v.text);
        if (!idx)
            throw ParseError("unknown variable '" + v.text + "'", v.line, v.column);
        std::uint32_t e = 1;
        if (cur_.kind == Tok::Caret) {
            consume();
            const Token exp = expect(Tok::Integer, "an exponent");
            unsigned long value = 0;
            try {
                value = std::stoul(exp.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", exp.line, exp.column);
            }
            if (value == 0 || value > 1000000)
                throw ParseError("exponent out of range", exp.line, exp.column);
            e = static_cast<std::uint32_t>(value);
        }
        m.set_exponent(*idx, m.exponent(*idx) + e);
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 1, 1};
    RingPtr ring_;
};

}  // namespace

IdealPresentation parse_presentation(std::string_view text) {
    Parser p(text);
    return p.presentation();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    Parser p(text);
    return p.polynomial(ring);
}

// ===== Structure-constant documents =====

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

// One term of a structure-constant combination: coefficient and basis slot.
struct TableTerm {
    Rational coeff;
    std::size_t slot;  // 0 = unit, k = generator k
};

}  // namespace

AlgebraPtr parse_structure_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;

    auto next_meaningful = [&](std::string& out) -> bool {
        while (std::getline(in, raw)) {
            ++lineno;
            if (blank_or_comment(raw)) continue;
            out = strip_comment(raw);
            return true;
        }
        return false;
    };

    // --- dim line ---
    std::string line;
    if (!next_meaningful(line))
        throw ParseError("expected 'dim <n>'", lineno + 1, 1);
    std::size_t dim = 0;
    {
        Lexer lex(line, lineno, 1);
        Token t = lex.next();
        if (t.kind != Tok::Ident || t.text != "dim")
            throw ParseError("expected 'dim <n>'", t.line, t.column);
        t = lex.next();
        if (t.kind != Tok::Integer)
            throw ParseError("expected the algebra dimension", t.line, t.column);
        dim = static_cast<std::size_t>(std::stoul(t.text));
        if (dim == 0) throw ParseError("dimension must be positive", t.line, t.column);
        if (lex.next().kind != Tok::End)
            throw ParseError("trailing input after the dimension", t.line, t.column);
    }
    const std::size_t n = dim - 1;

    // --- basis line ---
    if (!next_meaningful(line))
        throw ParseError("expected 'basis 1 <labels>'", lineno + 1, 1);
    std::vector<std::string> labels;  // n generator labels (without the unit)
    {
        std::istringstream ls(line);
        std::string word;
        std::vector<std::string> words;
        while (ls >> word) words.push_back(word);
        if (words.empty() || words[0] != "basis")
            throw ParseError("expected 'basis 1 <labels>'", lineno, 1);
        if (words.size() != dim + 1 || words[1] != "1")
            throw ParseError("basis line must list the unit '1' and " +
                                 std::to_string(n) + " generator labels",
                             lineno, 1);
        for (std::size_t k = 2; k < words.size(); ++k) {
            const std::string& l = words[k];
            if (l == "1" || std::find(labels.begin(), labels.end(), l) != labels.end())
                throw ParseError("invalid or duplicate label '" + l + "'", lineno, 1);
            labels.push_back(l);
        }
    }

    auto slot_of = [&](const std::string& name) -> std::size_t {
        if (name == "1") return 0;
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == name) return k + 1;
        return dim;  // not found
    };

    // --- product lines ---
    LocalAlgebra::Table upper(n, std::vector<std::vector<Rational>>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            upper[i][j].assign(dim, Rational(0));

    while (next_meaningful(line)) {
        Lexer lex(line, lineno, 1);
        Token t = lex.next();

        auto label_token = [&](const Token& tok) -> std::string {
            if (tok.kind == Tok::Ident) return tok.text;
            if (tok.kind == Tok::Integer && tok.text == "1") return "1";
            throw ParseError("expected a basis label", tok.line, tok.column);
        };

        const std::string left = label_token(t);
        std::size_t li = slot_of(left);
        if (li == dim)
            throw ParseError("unknown label '" + left + "'", t.line, t.column);
        if (li == 0)
            throw ParseError("products with the unit are implied; list generator "
                             "pairs only", t.line, t.column);
        t = lex.next();
        if (t.kind != Tok::Star)
            throw ParseError("expected '*'", t.line, t.column);
        t = lex.next();
        const std::string right = label_token(t);
        std::size_t rj = slot_of(right);
        if (rj == dim)
            throw ParseError("unknown label '" + right + "'", t.line, t.column);
        if (rj == 0)
            throw ParseError("products with the unit are implied; list generator "
                             "pairs only", t.line, t.column);
        t = lex.next();
        if (t.kind != Tok::Equals)
            throw ParseError("expected '='", t.line, t.column);

        // normalize to the upper triangle
        std::size_t i = li - 1, j = rj - 1;
        if (i > j) std::swap(i, j);
        if (seen[i][j])
            throw ParseError("duplicate product line for " + left + "*" + right,
                             t.line, t.column);
        seen[i][j] = true;

        // rhs: 0 | [-] term (("+" | "-") term)*, term := [coef "*"] label | coef
        std::vector<Rational> coords(dim, Rational(0));
        t = lex.next();
        bool negative = false;
        if (t.kind == Tok::Minus) {
            negative = true;
            t = lex.next();
        }
        while (true) {
            Rational c(1);
            std::size_t slot = dim;
            if (t.kind == Tok::Integer) {
                // coefficient or the unit label
                const Token num = t;
                t = lex.next();
                if (t.kind == Tok::Slash) {
                    t = lex.next();
                    if (t.kind != Tok::Integer)
                        throw ParseError("expected a denominator", t.line, t.column);
                    const Rational::Int d{t.text};
                    if (d == 0) throw ParseError("zero denominator", t.line, t.column);
                    c = Rational(Rational::Int(num.text), d);
                    t = lex.next();
                } else {
                    c = Rational(Rational::Int(num.text));
                }
                if (t.kind == Tok::Star) {
                    t = lex.next();
                    const std::string lab = label_token(t);
                    slot = slot_of(lab);
                    if (slot == dim)
                        throw ParseError("unknown label '" + lab + "'", t.line, t.column);
                    t = lex.next();
                } else {
                    slot = 0;  // bare rational: a unit-coordinate contribution
                }
            } else if (t.kind == Tok::Ident) {
                slot = slot_of(t.text);
                if (slot == dim)
                    throw ParseError("unknown label '" + t.text + "'", t.line, t.column);
                t = lex.next();
            } else {
                throw ParseError("expected a term", t.line, t.column);
            }
            coords[slot] += negative ? -c : c;

            if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
                negative = (t.kind == Tok::Minus);
                t = lex.next();
                continue;
            }
            if (t.kind == Tok::End) break;
            throw ParseError("expected '+', '-' or end of line", t.line, t.column);
        }

        upper[i][j] = std::move(coords);
    }

    return LocalAlgebra::from_upper_triangle(std::move(labels), upper);
}

std::string format_structure_table(const LocalAlgebra& a) {
    const std::size_t n = a.mdim();
    std::string out = "dim " + std::to_string(a.dim()) + "\n";
    out += "basis";
    for (std::size_t k = 0; k < a.dim(); ++k) out += " " + a.label(k);
    out += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            out += a.label(i + 1) + "*" + a.label(j + 1) + " = ";
            const auto coords = a.product(i, j);
            std::string rhs;
            bool first = true;
            for (std::size_t k = 0; k < coords.size(); ++k) {
                const Rational& c = coords[k];
                if (c.is_zero()) continue;
                const bool neg = c.sign() < 0;
                if (first) {
                    if (neg) rhs += "-";
                    first = false;
                } else {
                    rhs += neg ? " - " : " + ";
                }
                const Rational abs = c.abs();
                if (k == 0) {
                    rhs += abs.str();
                } else {
                    if (!abs.is_one()) rhs += abs.str() + "*";
                    rhs += a.label(k);
                }
            }
            out += rhs.empty() ? "0" : rhs;
            out += "\n";
        }
    }
    return out;
}

}  // namespace addact
