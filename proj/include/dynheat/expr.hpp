#ifndef DYNHEAT_EXPR_HPP
#define DYNHEAT_EXPR_HPP

#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "dynheat/errors.hpp"
#include "dynheat/spectral.hpp"

namespace dynheat {

// Small expression grammar for inline function descriptors:
//
//   expr    := term  (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := unary ('^' factor)?
//   unary   := '-' unary | primary
//   primary := number | 'x' | 't' | 'pi' | fn '(' expr ')'
//            | 'eig' '(' integer ')' | '(' expr ')'
//   fn      := 'sin' | 'cos' | 'exp' | 'sinh'
//
// eig(n) is the n-th eigenfunction of the configured spectral problem,
// which lets manufactured problems state exact eigenmode data without
// tabulating it. Expressions can be differentiated in x symbolically
// (nullopt when the exponent of '^' depends on x).
class Expression {
    enum class Op {
        constant, var_x, var_t,
        add, sub, mul, div, pow, neg,
        fn_sin, fn_cos, fn_exp, fn_sinh, fn_cosh,
        eig, eig_dx
    };

    struct Node {
        Op op;
        double value = 0.0;  // constant
        int index = 0;       // eig
        std::shared_ptr<const Node> a, b;
    };
    using NodePtr = std::shared_ptr<const Node>;

public:
    Expression() = default;

    static Expression parse(const std::string& src) {
        Parser p{src, 0};
        Expression e;
        e.root_ = p.parse_expr();
        p.skip_ws();
        if (p.pos != src.size())
            throw ParseError("expression: unexpected trailing input at offset " +
                             std::to_string(p.pos) + " in '" + src + "'");
        return e;
    }

    bool valid() const { return static_cast<bool>(root_); }

    double eval(double x, double t, const SpectralBasis* basis = nullptr) const {
        if (!root_) throw ParseError("expression: evaluating an empty expression");
        return eval_node(*root_, x, t, basis);
    }

    bool uses_t() const { return root_ && uses(*root_, Op::var_t); }
    bool uses_x() const { return root_ && uses(*root_, Op::var_x); }

    int max_eig_index() const { return root_ ? max_eig(*root_) : -1; }

    // d/dx; nullopt when a '^' exponent depends on x.
    std::optional<Expression> deriv_x() const {
        if (!root_) return std::nullopt;
        NodePtr d = diff(root_);
        if (!d) return std::nullopt;
        Expression e;
        e.root_ = std::move(d);
        return e;
    }

private:
    NodePtr root_;

    static NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
    static NodePtr make_const(double v) {
        auto n = std::make_shared<Node>();
        n->op = Op::constant;
        n->value = v;
        return n;
    }
    static NodePtr make_eig(Op op, int index) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->index = index;
        return n;
    }

    static double eval_node(const Node& n, double x, double t,
                            const SpectralBasis* basis) {
        switch (n.op) {
        case Op::constant: return n.value;
        case Op::var_x: return x;
        case Op::var_t: return t;
        case Op::add: return eval_node(*n.a, x, t, basis) + eval_node(*n.b, x, t, basis);
        case Op::sub: return eval_node(*n.a, x, t, basis) - eval_node(*n.b, x, t, basis);
        case Op::mul: return eval_node(*n.a, x, t, basis) * eval_node(*n.b, x, t, basis);
        case Op::div: return eval_node(*n.a, x, t, basis) / eval_node(*n.b, x, t, basis);
        case Op::pow: return std::pow(eval_node(*n.a, x, t, basis), eval_node(*n.b, x, t, basis));
        case Op::neg: return -eval_node(*n.a, x, t, basis);
        case Op::fn_sin: return std::sin(eval_node(*n.a, x, t, basis));
        case Op::fn_cos: return std::cos(eval_node(*n.a, x, t, basis));
        case Op::fn_exp: return std::exp(eval_node(*n.a, x, t, basis));
        case Op::fn_sinh: return std::sinh(eval_node(*n.a, x, t, basis));
        case Op::fn_cosh: return std::cosh(eval_node(*n.a, x, t, basis));
        case Op::eig:
        case Op::eig_dx: {
            if (!basis)
                throw DomainError("expression: eig(n) needs a spectral basis");
            if (n.index < 0 || n.index >= basis->size())
                throw DomainError("expression: eig(" + std::to_string(n.index) +
                                  ") outside the computed mode range");
            const EigenMode& m = basis->mode(n.index);
            return n.op == Op::eig ? eval_eigenfunction(m, x)
                                   : eval_eigenfunction_deriv(m, x);
        }
        }
        return 0.0;
    }

    static bool uses(const Node& n, Op what) {
        if (n.op == what) return true;
        if ((n.op == Op::eig || n.op == Op::eig_dx) && what == Op::var_x) return true;
        if (n.a && uses(*n.a, what)) return true;
        if (n.b && uses(*n.b, what)) return true;
        return false;
    }

    static int max_eig(const Node& n) {
        int r = (n.op == Op::eig || n.op == Op::eig_dx) ? n.index : -1;
        if (n.a) r = std::max(r, max_eig(*n.a));
        if (n.b) r = std::max(r, max_eig(*n.b));
        return r;
    }

    // Symbolic x-derivative. Returns nullptr on unsupported shapes.
    static NodePtr diff(const NodePtr& n) {
        switch (n->op) {
        case Op::constant:
        case Op::var_t:
            return make_const(0.0);
        case Op::var_x:
            return make_const(1.0);
        case Op::add: {
            auto da = diff(n->a), db = diff(n->b);
            if (!da || !db) return nullptr;
            return make(Op::add, da, db);
        }
        case Op::sub: {
            auto da = diff(n->a), db = diff(n->b);
            if (!da || !db) return nullptr;
            return make(Op::sub, da, db);
        }
        case Op::mul: {
            auto da = diff(n->a), db = diff(n->b);
            if (!da || !db) return nullptr;
            return make(Op::add, make(Op::mul, da, n->b), make(Op::mul, n->a, db));
        }
        case Op::div: {
            auto da = diff(n->a), db = diff(n->b);
            if (!da || !db) return nullptr;
            auto num = make(Op::sub, make(Op::mul, da, n->b), make(Op::mul, n->a, db));
            return make(Op::div, num, make(Op::mul, n->b, n->b));
        }
        case Op::pow: {
            if (uses(*n->b, Op::var_x)) return nullptr;
            auto da = diff(n->a);
            if (!da) return nullptr;
            // v * u^(v-1) * u'
            auto vm1 = make(Op::sub, n->b, make_const(1.0));
            auto p = make(Op::pow, n->a, vm1);
            return make(Op::mul, make(Op::mul, n->b, p), da);
        }
        case Op::neg: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::neg, da);
        }
        case Op::fn_sin: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::mul, make(Op::fn_cos, n->a), da);
        }
        case Op::fn_cos: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::neg, make(Op::mul, make(Op::fn_sin, n->a), da));
        }
        case Op::fn_exp: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::mul, n, da);
        }
        case Op::fn_sinh: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::mul, make(Op::fn_cosh, n->a), da);
        }
        case Op::fn_cosh: {
            auto da = diff(n->a);
            if (!da) return nullptr;
            return make(Op::mul, make(Op::fn_sinh, n->a), da);
        }
        case Op::eig:
            return make_eig(Op::eig_dx, n->index);
        case Op::eig_dx:
            return nullptr; // second derivatives handled at a higher level
        }
        return nullptr;
    }

    struct Parser {
        const std::string& src;
        size_t pos;

        void skip_ws() {
            while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        bool eat(char c) {
            skip_ws();
            if (pos < src.size() && src[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        char peek() {
            skip_ws();
            return pos < src.size() ? src[pos] : '\0';
        }
        [[noreturn]] void fail(const std::string& msg) {
            throw ParseError("expression: " + msg + " at offset " + std::to_string(pos) +
                             " in '" + src + "'");
        }

        NodePtr parse_expr() {
            NodePtr lhs = parse_term();
            for (;;) {
                if (eat('+')) lhs = make(Op::add, lhs, parse_term());
                else if (eat('-')) lhs = make(Op::sub, lhs, parse_term());
                else return lhs;
            }
        }

        NodePtr parse_term() {
            NodePtr lhs = parse_factor();
            for (;;) {
                if (eat('*')) lhs = make(Op::mul, lhs, parse_factor());
                else if (eat('/')) lhs = make(Op::div, lhs, parse_factor());
                else return lhs;
            }
        }

        NodePtr parse_factor() {
            NodePtr base = parse_unary();
            if (eat('^')) return make(Op::pow, base, parse_factor()); // right assoc
            return base;
        }

        NodePtr parse_unary() {
            if (eat('-')) return make(Op::neg, parse_unary());
            return parse_primary();
        }

        NodePtr parse_primary() {
            skip_ws();
            if (pos >= src.size()) fail("unexpected end of input");
            const char c = src[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
            if (c == '(') {
                ++pos;
                NodePtr e = parse_expr();
                if (!eat(')')) fail("expected ')'");
                return e;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
            fail(std::string("unexpected character '") + c + "'");
        }

        NodePtr parse_number() {
            size_t end = pos;
            while (end < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == '.'))
                ++end;
            // exponent part
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                size_t e = end + 1;
                if (e < src.size() && (src[e] == '+' || src[e] == '-')) ++e;
                if (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) {
                    ++e;
                    while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
                    end = e;
                }
            }
            try {
                size_t used = 0;
                const double v = std::stod(src.substr(pos, end - pos), &used);
                if (used != end - pos) fail("malformed number");
                pos = end;
                return make_const(v);
            } catch (const std::exception&) {
                fail("malformed number");
            }
        }

        NodePtr parse_ident() {
            size_t end = pos;
            while (end < src.size() && std::isalpha(static_cast<unsigned char>(src[end]))) ++end;
            const std::string name = src.substr(pos, end - pos);
            pos = end;
            if (name == "x") return make(Op::var_x);
            if (name == "t") return make(Op::var_t);
            if (name == "pi") return make_const(std::numbers::pi);
            if (name == "sin" || name == "cos" || name == "exp" || name == "sinh") {
                if (!eat('(')) fail("expected '(' after '" + name + "'");
                NodePtr arg = parse_expr();
                if (!eat(')')) fail("expected ')'");
                if (name == "sin") return make(Op::fn_sin, arg);
                if (name == "cos") return make(Op::fn_cos, arg);
                if (name == "exp") return make(Op::fn_exp, arg);
                return make(Op::fn_sinh, arg);
            }
            if (name == "eig") {
                if (!eat('(')) fail("expected '(' after 'eig'");
                skip_ws();
                size_t d = pos;
                while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d]))) ++d;
                if (d == pos) fail("eig() expects a nonnegative integer index");
                const int index = std::stoi(src.substr(pos, d - pos));
                pos = d;
                if (!eat(')')) fail("expected ')'");
                return make_eig(Op::eig, index);
            }
            fail("unknown identifier '" + name + "'");
        }
    };
};

} // namespace dynheat

#endif // DYNHEAT_EXPR_HPP
