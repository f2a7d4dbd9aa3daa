#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace cqe {

/// Variables available to a center function.  Angles are in radians and
/// S is twice the triangle area (Conway convention).
template <class R>
struct ExprEnv {
    R a{}, b{}, c{};
    R A{}, B{}, C{};
    R S{}, SA{}, SB{}, SC{};
    R k{};        // optional bound family parameter
    bool has_k = false;
};

namespace ast {

enum class Sym { a, b, c, A, B, C, S, SA, SB, SC, k };

enum class Fun { sqrt_, cos_, sin_, tan_, sec_, csc_, cot_, abs_ };

struct Node;
using NodePtr = std::unique_ptr<Node>;

enum class Kind { num, sym, add, sub, mul, div, neg, pow, fun };

struct Node {
    Kind kind;
    double value = 0;       // num
    std::string lexeme;     // num: original spelling (stable printing)
    Sym sym{};              // sym
    Fun fun{};              // fun
    NodePtr lhs, rhs;       // children (rhs unused for neg/fun)
};

inline NodePtr make(Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

inline NodePtr clone(const Node& n) {
    auto m = std::make_unique<Node>();
    m->kind = n.kind;
    m->value = n.value;
    m->lexeme = n.lexeme;
    m->sym = n.sym;
    m->fun = n.fun;
    if (n.lhs) m->lhs = clone(*n.lhs);
    if (n.rhs) m->rhs = clone(*n.rhs);
    return m;
}

} // namespace ast

namespace detail {

struct Token {
    enum class T { num, ident, op, lparen, rparen, end } type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t')) ++i_;
        if (i_ >= src_.size()) return {Token::T::end, "", i_};
        const std::size_t start = i_;
        const char ch = src_[i_];
        if ((ch >= '0' && ch <= '9') || ch == '.') {
            std::size_t j = i_;
            bool seen_e = false;
            while (j < src_.size()) {
                const char d = src_[j];
                if ((d >= '0' && d <= '9') || d == '.') { ++j; continue; }
                if ((d == 'e' || d == 'E') && !seen_e) {
                    seen_e = true; ++j;
                    if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
                    continue;
                }
                break;
            }
            Token t{Token::T::num, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return t;
        }
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   ((src_[j] >= 'a' && src_[j] <= 'z') || (src_[j] >= 'A' && src_[j] <= 'Z') ||
                    (src_[j] >= '0' && src_[j] <= '9') || src_[j] == '_'))
                ++j;
            Token t{Token::T::ident, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (ch) {
            case '(': return {Token::T::lparen, "(", start};
            case ')': return {Token::T::rparen, ")", start};
            case '+': case '-': case '*': case '/': case '^':
                return {Token::T::op, std::string(1, ch), start};
            default:
                throw parse_error("unexpected character '" + std::string(1, ch) + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

} // namespace detail

/// Recursive-descent parser for the center-function grammar.  Implicit
/// multiplication is rejected; '^' requires a constant right operand
/// (number literal or the bound parameter k).
class ExprParser {
public:
    static ast::NodePtr parse(std::string_view src) {
        ExprParser p(src);
        auto e = p.expr();
        if (p.cur_.type != detail::Token::T::end)
            throw parse_error("trailing input", p.cur_.pos);
        return e;
    }

private:
    explicit ExprParser(std::string_view src) : lex_(src) { advance(); }

    void advance() { cur_ = lex_.next(); }

    bool is_op(const char* s) const {
        return cur_.type == detail::Token::T::op && cur_.text == s;
    }

    ast::NodePtr expr() {
        auto lhs = term();
        while (is_op("+") || is_op("-")) {
            const bool add = cur_.text == "+";
            advance();
            auto n = ast::make(add ? ast::Kind::add : ast::Kind::sub);
            n->lhs = std::move(lhs);
            n->rhs = term();
            lhs = std::move(n);
        }
        return lhs;
    }

    ast::NodePtr term() {
        auto lhs = factor();
        while (is_op("*") || is_op("/")) {
            const bool mul = cur_.text == "*";
            advance();
            auto n = ast::make(mul ? ast::Kind::mul : ast::Kind::div);
            n->lhs = std::move(lhs);
            n->rhs = factor();
            lhs = std::move(n);
        }
        return lhs;
    }

    ast::NodePtr factor() {
        auto base = atom();
        if (is_op("^")) {
            const std::size_t pos = cur_.pos;
            advance();
            bool neg = false;
            if (is_op("-")) { neg = true; advance(); }
            ast::NodePtr e;
            if (cur_.type == detail::Token::T::num) {
                e = ast::make(ast::Kind::num);
                e->lexeme = (neg ? "-" : "") + cur_.text;
                e->value = (neg ? -1.0 : 1.0) * std::stod(cur_.text);
                advance();
            } else if (cur_.type == detail::Token::T::ident && cur_.text == "k" && !neg) {
                e = ast::make(ast::Kind::sym);
                e->sym = ast::Sym::k;
                advance();
            } else {
                throw parse_error("exponent must be a constant", pos);
            }
            auto n = ast::make(ast::Kind::pow);
            n->lhs = std::move(base);
            n->rhs = std::move(e);
            return n;
        }
        return base;
    }

    ast::NodePtr atom() {
        using detail::Token;
        if (cur_.type == Token::T::num) {
            auto n = ast::make(ast::Kind::num);
            n->lexeme = cur_.text;
            n->value = std::stod(cur_.text);
            advance();
            return n;
        }
        if (is_op("-")) {
            advance();
            auto n = ast::make(ast::Kind::neg);
            n->lhs = atom();
            return n;
        }
        if (cur_.type == Token::T::lparen) {
            advance();
            auto e = expr();
            expect_rparen();
            return e;
        }
        if (cur_.type == Token::T::ident) {
            const std::string id = cur_.text;
            const std::size_t pos = cur_.pos;
            advance();
            if (cur_.type == Token::T::lparen) {
                ast::Fun f;
                if (id == "sqrt") f = ast::Fun::sqrt_;
                else if (id == "cos") f = ast::Fun::cos_;
                else if (id == "sin") f = ast::Fun::sin_;
                else if (id == "tan") f = ast::Fun::tan_;
                else if (id == "sec") f = ast::Fun::sec_;
                else if (id == "csc") f = ast::Fun::csc_;
                else if (id == "cot") f = ast::Fun::cot_;
                else if (id == "abs") f = ast::Fun::abs_;
                else throw parse_error("unknown function '" + id + "'", pos);
                advance();
                auto n = ast::make(ast::Kind::fun);
                n->fun = f;
                n->lhs = expr();
                expect_rparen();
                return n;
            }
            auto n = ast::make(ast::Kind::sym);
            if (id == "a") n->sym = ast::Sym::a;
            else if (id == "b") n->sym = ast::Sym::b;
            else if (id == "c") n->sym = ast::Sym::c;
            else if (id == "A") n->sym = ast::Sym::A;
            else if (id == "B") n->sym = ast::Sym::B;
            else if (id == "C") n->sym = ast::Sym::C;
            else if (id == "S") n->sym = ast::Sym::S;
            else if (id == "SA") n->sym = ast::Sym::SA;
            else if (id == "SB") n->sym = ast::Sym::SB;
            else if (id == "SC") n->sym = ast::Sym::SC;
            else if (id == "k") n->sym = ast::Sym::k;
            else throw parse_error("unknown symbol '" + id + "'", pos);
            return n;
        }
        throw parse_error("expected value", cur_.pos);
    }

    void expect_rparen() {
        if (cur_.type != detail::Token::T::rparen)
            throw parse_error("expected ')'", cur_.pos);
        advance();
    }

    detail::Lexer lex_;
    detail::Token cur_{};
};

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
R ipow(R base, long e) {
    if (e < 0) return R(1) / ipow(base, -e);
    R r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace detail

template <class R>
R eval_expr(const ast::Node& n, const ExprEnv<R>& env) {
    using std::cos; using std::sin; using std::tan; using std::sqrt; using std::pow;
    switch (n.kind) {
        case ast::Kind::num: return R(n.value);
        case ast::Kind::sym:
            switch (n.sym) {
                case ast::Sym::a: return env.a;
                case ast::Sym::b: return env.b;
                case ast::Sym::c: return env.c;
                case ast::Sym::A: return env.A;
                case ast::Sym::B: return env.B;
                case ast::Sym::C: return env.C;
                case ast::Sym::S: return env.S;
                case ast::Sym::SA: return env.SA;
                case ast::Sym::SB: return env.SB;
                case ast::Sym::SC: return env.SC;
                case ast::Sym::k:
                    if (!env.has_k) throw domain_error("unbound parameter k");
                    return env.k;
            }
            throw domain_error("bad symbol");
        case ast::Kind::add: return eval_expr(*n.lhs, env) + eval_expr(*n.rhs, env);
        case ast::Kind::sub: return eval_expr(*n.lhs, env) - eval_expr(*n.rhs, env);
        case ast::Kind::mul: return eval_expr(*n.lhs, env) * eval_expr(*n.rhs, env);
        case ast::Kind::div: {
            const R d = eval_expr(*n.rhs, env);
            if (d == R(0)) throw undefined_center("division by zero");
            return eval_expr(*n.lhs, env) / d;
        }
        case ast::Kind::neg: return -eval_expr(*n.lhs, env);
        case ast::Kind::pow: {
            const R base = eval_expr(*n.lhs, env);
            R e;
            if (n.rhs->kind == ast::Kind::num) e = R(n.rhs->value);
            else e = eval_expr(*n.rhs, env);
            const double ed = n.rhs->kind == ast::Kind::num ? n.rhs->value
                                                            : double(env.k);
            if (ed == std::floor(ed) && std::fabs(ed) <= 16)
                return detail::ipow(base, long(ed));
            if (base < R(0)) throw undefined_center("negative base with real exponent");
            if (base == R(0)) return R(0);
            return pow(base, e);
        }
        case ast::Kind::fun: {
            const R x = eval_expr(*n.lhs, env);
            switch (n.fun) {
                case ast::Fun::sqrt_:
                    if (x < R(0)) throw undefined_center("sqrt of negative");
                    return sqrt(x);
                case ast::Fun::cos_: return cos(x);
                case ast::Fun::sin_: return sin(x);
                case ast::Fun::tan_: {
                    const R cx = cos(x);
                    if (cx == R(0)) throw undefined_center("tan at pole");
                    return sin(x) / cx;
                }
                case ast::Fun::sec_: {
                    const R cx = cos(x);
                    if (cx == R(0)) throw undefined_center("sec at pole");
                    return R(1) / cx;
                }
                case ast::Fun::csc_: {
                    const R sx = sin(x);
                    if (sx == R(0)) throw undefined_center("csc at pole");
                    return R(1) / sx;
                }
                case ast::Fun::cot_: {
                    const R sx = sin(x);
                    if (sx == R(0)) throw undefined_center("cot at pole");
                    return cos(x) / sx;
                }
                case ast::Fun::abs_: return x < R(0) ? -x : x;
            }
            throw domain_error("bad function");
        }
    }
    throw domain_error("bad node");
}

// ---------------------------------------------------------------------------
// printing (deterministic; parse . print is a fixpoint)
// ---------------------------------------------------------------------------

namespace detail {

inline int precedence(ast::Kind k) {
    switch (k) {
        case ast::Kind::add: case ast::Kind::sub: return 1;
        case ast::Kind::mul: case ast::Kind::div: return 2;
        case ast::Kind::neg: return 3;
        case ast::Kind::pow: return 4;
        default: return 5;
    }
}

inline void print_node(const ast::Node& n, std::string& out, int parent_prec,
                       bool right_side) {
    const int prec = precedence(n.kind);
    const bool need_paren =
        prec < parent_prec || (prec == parent_prec && right_side &&
                               (n.kind == ast::Kind::add || n.kind == ast::Kind::sub ||
                                n.kind == ast::Kind::mul || n.kind == ast::Kind::div));
    if (need_paren) out += '(';
    switch (n.kind) {
        case ast::Kind::num: out += n.lexeme; break;
        case ast::Kind::sym:
            switch (n.sym) {
                case ast::Sym::a: out += 'a'; break;
                case ast::Sym::b: out += 'b'; break;
                case ast::Sym::c: out += 'c'; break;
                case ast::Sym::A: out += 'A'; break;
                case ast::Sym::B: out += 'B'; break;
                case ast::Sym::C: out += 'C'; break;
                case ast::Sym::S: out += 'S'; break;
                case ast::Sym::SA: out += "SA"; break;
                case ast::Sym::SB: out += "SB"; break;
                case ast::Sym::SC: out += "SC"; break;
                case ast::Sym::k: out += 'k'; break;
            }
            break;
        case ast::Kind::add:
            print_node(*n.lhs, out, prec, false); out += " + ";
            print_node(*n.rhs, out, prec, true); break;
        case ast::Kind::sub:
            print_node(*n.lhs, out, prec, false); out += " - ";
            print_node(*n.rhs, out, prec, true); break;
        case ast::Kind::mul:
            print_node(*n.lhs, out, prec, false); out += "*";
            print_node(*n.rhs, out, prec, true); break;
        case ast::Kind::div:
            print_node(*n.lhs, out, prec, false); out += "/";
            print_node(*n.rhs, out, prec, true); break;
        case ast::Kind::neg:
            out += '-'; print_node(*n.lhs, out, prec + 1, false); break;
        case ast::Kind::pow:
            print_node(*n.lhs, out, prec + 1, false); out += '^';
            // negative exponents print bare (the parser accepts "a^-2")
            print_node(*n.rhs, out, 0, true);
            break;
        case ast::Kind::fun:
            switch (n.fun) {
                case ast::Fun::sqrt_: out += "sqrt"; break;
                case ast::Fun::cos_: out += "cos"; break;
                case ast::Fun::sin_: out += "sin"; break;
                case ast::Fun::tan_: out += "tan"; break;
                case ast::Fun::sec_: out += "sec"; break;
                case ast::Fun::csc_: out += "csc"; break;
                case ast::Fun::cot_: out += "cot"; break;
                case ast::Fun::abs_: out += "abs"; break;
            }
            out += '(';
            print_node(*n.lhs, out, 0, false);
            out += ')';
            break;
    }
    if (need_paren) out += ')';
}

} // namespace detail

inline std::string print_expr(const ast::Node& n) {
    std::string out;
    detail::print_node(n, out, 0, false);
    return out;
}

} // namespace cqe
