#include "loopnt/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace loopnt {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
    KwWhile,
    Ident,
    Integer,
    LParen,
    RParen,
    LBrace,
    RBrace,
    AndAnd,
    Gt,
    Ge,
    Assign, // :=
    Semi,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            std::size_t line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = take_while([](char ch) {
                    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                });
                out.push_back({word == "while" ? Tok::KwWhile : Tok::Ident, word, line, col});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits = take_while(
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
                if (pos_ < src_.size() && src_[pos_] == '.')
                    throw SyntaxError("decimal literals are not supported; use a fraction", line,
                                      col);
                out.push_back({Tok::Integer, digits, line, col});
                continue;
            }
            switch (c) {
            case '(': single(out, Tok::LParen, line, col); break;
            case ')': single(out, Tok::RParen, line, col); break;
            case '{': single(out, Tok::LBrace, line, col); break;
            case '}': single(out, Tok::RBrace, line, col); break;
            case ';': single(out, Tok::Semi, line, col); break;
            case '+': single(out, Tok::Plus, line, col); break;
            case '-': single(out, Tok::Minus, line, col); break;
            case '*': single(out, Tok::Star, line, col); break;
            case '/': single(out, Tok::Slash, line, col); break;
            case '^': single(out, Tok::Caret, line, col); break;
            case '&':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '&') {
                    advance();
                    advance();
                    out.push_back({Tok::AndAnd, "&&", line, col});
                    break;
                }
                throw SyntaxError("stray '&'", line, col);
            case '>':
                advance();
                if (pos_ < src_.size() && src_[pos_] == '=') {
                    advance();
                    out.push_back({Tok::Ge, ">=", line, col});
                } else {
                    out.push_back({Tok::Gt, ">", line, col});
                }
                break;
            case ':':
                advance();
                if (pos_ < src_.size() && src_[pos_] == '=') {
                    advance();
                    out.push_back({Tok::Assign, ":=", line, col});
                    break;
                }
                throw SyntaxError("expected ':=' after ':'", line, col);
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
                advance();
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
                continue;
            }
            return;
        }
    }

    template <class Pred>
    std::string take_while(Pred pred) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && pred(src_[pos_]))
            advance();
        return std::string(src_.substr(start, pos_ - start));
    }

    void single(std::vector<Token>& out, Tok kind, std::size_t line, std::size_t col) {
        out.push_back({kind, std::string(1, src_[pos_]), line, col});
        advance();
    }
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

// A linear expression as collected coefficients plus a constant part.
struct LinExpr {
    std::map<std::string, Rational> coeffs;
    Rational constant;

    void add(const LinExpr& o, int sgn) {
        for (const auto& [v, c] : o.coeffs) {
            Rational& slot = coeffs[v];
            slot = sgn > 0 ? slot + c : slot - c;
        }
        constant = sgn > 0 ? constant + o.constant : constant - o.constant;
    }
};

struct VarUse {
    std::size_t line;
    std::size_t col;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    LoopSpec run() {
        expect(Tok::KwWhile, "expected 'while'");
        expect(Tok::LParen, "expected '(' after 'while'");
        parse_guard();
        expect(Tok::RParen, "expected ')' after the guard");
        expect(Tok::LBrace, "expected '{'");
        while (!at(Tok::RBrace))
            parse_assign();
        expect(Tok::RBrace, "expected '}'");
        if (!at(Tok::End))
            fail("trailing input after the loop body");
        return build();
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;

    std::vector<std::pair<LinExpr, bool>> guard_rows_;    // expr, strict
    std::vector<std::pair<std::string, LinExpr>> assigns_; // in source order
    std::map<std::string, Token> assign_tok_;              // for duplicate reporting
    std::vector<std::string> mention_order_;               // guard + LHS, first use
    std::map<std::string, VarUse> rhs_uses_;               // first RHS/guard-expr use per var

    const Token& cur() const { return toks_[idx_]; }
    bool at(Tok k) const { return cur().kind == k; }
    Token take() { return toks_[idx_++]; }

    Token expect(Tok k, const char* msg) {
        if (!at(k))
            fail(msg);
        return take();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg, cur().line, cur().col);
    }

    void note_mention(const std::string& name) {
        if (std::find(mention_order_.begin(), mention_order_.end(), name) ==
            mention_order_.end())
            mention_order_.push_back(name);
    }

    void parse_guard() {
        for (;;) {
            LinExpr lhs = parse_linexpr(/*in_guard=*/true);
            bool strict;
            if (at(Tok::Gt)) {
                strict = true;
                take();
            } else if (at(Tok::Ge)) {
                strict = false;
                take();
            } else {
                fail("expected '>' or '>=' in the guard");
            }
            LinExpr rhs = parse_linexpr(/*in_guard=*/true);
            lhs.add(rhs, -1);
            if (!lhs.constant.is_zero())
                fail_nonhomogeneous("guard has a constant term");
            guard_rows_.emplace_back(std::move(lhs), strict);
            if (at(Tok::AndAnd)) {
                take();
                continue;
            }
            return;
        }
    }

    [[noreturn]] void fail_nonhomogeneous(const std::string& msg) const {
        throw NonHomogeneous(msg, cur().line, cur().col);
    }

    void parse_assign() {
        Token name = expect(Tok::Ident, "expected a variable name or '}'");
        if (assign_tok_.count(name.text))
            throw DuplicateAssignment("variable '" + name.text + "' assigned twice", name.line,
                                      name.col);
        expect(Tok::Assign, "expected ':=' in assignment");
        LinExpr rhs = parse_linexpr(/*in_guard=*/false);
        Token semi = expect(Tok::Semi, "expected ';' after assignment");
        if (!rhs.constant.is_zero())
            throw NonHomogeneous("assignment to '" + name.text + "' has a constant term",
                                 semi.line, semi.col);
        assign_tok_.emplace(name.text, name);
        assigns_.emplace_back(name.text, std::move(rhs));
        note_mention(name.text);
    }

    LinExpr parse_linexpr(bool in_guard) {
        LinExpr e;
        int sgn = 1;
        if (at(Tok::Minus)) {
            take();
            sgn = -1;
        } else if (at(Tok::Plus)) {
            take();
        }
        parse_term(e, sgn, in_guard);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            sgn = at(Tok::Plus) ? 1 : -1;
            take();
            parse_term(e, sgn, in_guard);
        }
        return e;
    }

    // term := factor {'*' factor}; at most one variable factor is linear.
    void parse_term(LinExpr& e, int sgn, bool in_guard) {
        Rational coef(sgn);
        std::optional<std::string> var;
        for (;;) {
            if (at(Tok::Integer)) {
                coef = coef * parse_rat_literal();
            } else if (at(Tok::Ident)) {
                Token v = take();
                if (at(Tok::Caret))
                    throw NonLinearTerm("power of variable '" + v.text + "'", cur().line,
                                        cur().col);
                if (var)
                    throw NonLinearTerm("product of variables '" + *var + "' and '" + v.text +
                                            "'",
                                        v.line, v.col);
                var = v.text;
                if (in_guard)
                    note_mention(v.text);
                rhs_uses_.try_emplace(v.text, VarUse{v.line, v.col});
            } else {
                fail("expected a coefficient or variable");
            }
            if (at(Tok::Star)) {
                take();
                continue;
            }
            break;
        }
        if (var)
            e.coeffs[*var] += coef;
        else
            e.constant += coef;
    }

    Rational parse_rat_literal() {
        Token n = expect(Tok::Integer, "expected an integer");
        Int num(n.text);
        if (at(Tok::Slash)) {
            take();
            Token d = expect(Tok::Integer, "expected a denominator");
            Int den(d.text);
            if (den == 0)
                throw SyntaxError("denominator must be positive", d.line, d.col);
            return Rational(num, den);
        }
        return Rational(num);
    }

    // Variable order: numeric when every name is "x<digits>", otherwise
    // first-mention order (guard first, then assignment targets).
    std::vector<std::string> ordered_vars() const {
        std::vector<std::string> vars = mention_order_;
        bool all_indexed = std::all_of(vars.begin(), vars.end(), [](const std::string& v) {
            if (v.size() < 2 || v[0] != 'x')
                return false;
            return std::all_of(v.begin() + 1, v.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        });
        if (all_indexed)
            std::sort(vars.begin(), vars.end(), [](const std::string& a, const std::string& b) {
                if (a.size() != b.size())
                    return a.size() < b.size();
                return a < b;
            });
        return vars;
    }

    LoopSpec build() {
        // Program variables are those mentioned in the guard or assigned to.
        // Any other name on a right-hand side is unknown.
        for (const auto& [name, use] : rhs_uses_) {
            if (std::find(mention_order_.begin(), mention_order_.end(), name) ==
                mention_order_.end())
                throw UnknownVariable("unknown variable '" + name + "'", use.line, use.col);
        }

        LoopSpec spec;
        spec.var_names = ordered_vars();
        std::size_t n = spec.var_names.size();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < n; ++i)
            index[spec.var_names[i]] = i;

        spec.A = RatMat::identity(n);
        for (const auto& [name, expr] : assigns_) {
            std::size_t r = index.at(name);
            for (std::size_t c = 0; c < n; ++c)
                spec.A.at(r, c) = Rational(0);
            for (const auto& [v, coef] : expr.coeffs)
                spec.A.at(r, index.at(v)) = coef;
        }

        spec.B = RatMat(guard_rows_.size(), n);
        for (std::size_t r = 0; r < guard_rows_.size(); ++r) {
            for (const auto& [v, coef] : guard_rows_[r].first.coeffs)
                spec.B.at(r, index.at(v)) = coef;
            spec.guard_strict.push_back(guard_rows_[r].second);
        }
        return spec;
    }
};

std::string render_coef_term(const Rational& coef, const std::string& var, bool first) {
    std::string out;
    Rational a = coef.abs();
    if (first)
        out += coef.sign() < 0 ? "-" : "";
    else
        out += coef.sign() < 0 ? " - " : " + ";
    if (!(a == Rational(1)) || var.empty())
        out += a.str() + (var.empty() ? "" : "*");
    return out + var;
}

std::string render_linexpr(const RatVec& row, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero())
            continue;
        out += render_coef_term(row[i], names[i], first);
        first = false;
    }
    if (first)
        out = "0*" + names.at(0); // zero row: keep the text homogeneous
    return out;
}

} // namespace

LoopSpec parse_loop(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

std::string render_loop(const LoopSpec& spec) {
    std::ostringstream os;
    os << "while (";
    for (std::size_t r = 0; r < spec.guard_rows(); ++r) {
        if (r)
            os << " && ";
        os << render_linexpr(spec.B.row(r), spec.var_names)
           << (spec.guard_strict[r] ? " > 0" : " >= 0");
    }
    os << ") {\n";
    for (std::size_t r = 0; r < spec.dim(); ++r)
        os << "  " << spec.var_names[r] << " := " << render_linexpr(spec.A.row(r), spec.var_names)
           << ";\n";
    os << "}\n";
    return os.str();
}

void validate_for_analysis(const LoopSpec& spec) {
    if (spec.dim() != 2)
        throw UnsupportedDimension("analysis handles exactly two variables, loop has " +
                                   std::to_string(spec.dim()));
    for (std::size_t r = 0; r < spec.guard_rows(); ++r)
        if (!spec.guard_strict[r])
            throw UnsupportedGuard("analysis requires strict '>' guards; row " +
                                   std::to_string(r + 1) + " uses '>='");
}

} // namespace loopnt
