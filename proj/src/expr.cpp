#include "pvkit/expr.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cctype>
#include <utility>
#include <vector>

namespace pvkit::expr {

const char* func_name(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
        case Func::Sqrt: return "sqrt";
        case Func::Ln: return "ln";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Node

NodePtr Node::make_literal(Complex value, Span span) {
    auto n = std::shared_ptr<Node>(new Node());
    n->kind_ = NodeKind::Literal;
    n->literal_ = value;
    n->span_ = span;
    return n;
}

NodePtr Node::make_variable(Span span) {
    auto n = std::shared_ptr<Node>(new Node());
    n->kind_ = NodeKind::Variable;
    n->span_ = span;
    return n;
}

NodePtr Node::make_negate(NodePtr child, Span span) {
    assert(child);
    auto n = std::shared_ptr<Node>(new Node());
    n->kind_ = NodeKind::Negate;
    n->children_[0] = std::move(child);
    n->span_ = span;
    return n;
}

NodePtr Node::make_binary(NodeKind op, NodePtr lhs, NodePtr rhs, Span span) {
    assert(op == NodeKind::Add || op == NodeKind::Sub || op == NodeKind::Mul ||
           op == NodeKind::Div || op == NodeKind::Pow);
    assert(lhs && rhs);
    auto n = std::shared_ptr<Node>(new Node());
    n->kind_ = op;
    n->children_[0] = std::move(lhs);
    n->children_[1] = std::move(rhs);
    n->span_ = span;
    return n;
}

NodePtr Node::make_call(Func func, NodePtr arg, Span span) {
    assert(arg);
    auto n = std::shared_ptr<Node>(new Node());
    n->kind_ = NodeKind::Call;
    n->func_ = func;
    n->children_[0] = std::move(arg);
    n->span_ = span;
    return n;
}

int Node::arity() const noexcept {
    switch (kind_) {
        case NodeKind::Literal:
        case NodeKind::Variable: return 0;
        case NodeKind::Negate:
        case NodeKind::Call: return 1;
        default: return 2;
    }
}

const NodePtr& Node::child(int i) const {
    assert(i >= 0 && i < arity());
    return children_[i];
}

ExprAst::ExprAst(NodePtr root, std::string variable_name)
    : root_(std::move(root)), variable_name_(std::move(variable_name)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok type = Tok::End;
    double number = 0.0;
    std::string text;
    int begin = 0; // 0-based
    int end = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        Token t;
        t.begin = static_cast<int>(pos_);
        if (pos_ >= src_.size()) {
            t.type = Tok::End;
            t.end = t.begin;
            return t;
        }
        char c = src_[pos_];
        switch (c) {
            case '+': t.type = Tok::Plus; ++pos_; break;
            case '-': t.type = Tok::Minus; ++pos_; break;
            case '*': t.type = Tok::Star; ++pos_; break;
            case '/': t.type = Tok::Slash; ++pos_; break;
            case '^': t.type = Tok::Caret; ++pos_; break;
            case '(': t.type = Tok::LParen; ++pos_; break;
            case ')': t.type = Tok::RParen; ++pos_; break;
            default:
                if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                    lex_number(t);
                } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    while (pos_ < src_.size() &&
                           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                        ++pos_;
                    t.type = Tok::Ident;
                    t.text = std::string(src_.substr(t.begin, pos_ - t.begin));
                } else {
                    throw ParseError(t.begin + 1, std::string("unexpected character '") + c + "'");
                }
        }
        t.end = static_cast<int>(pos_);
        return t;
    }

private:
    void lex_number(Token& t) {
        size_t start = pos_;
        bool any_digit = false;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
            any_digit = true;
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                any_digit = true;
            }
        }
        if (!any_digit) throw ParseError(static_cast<int>(start) + 1, "malformed number");
        // exponent is consumed only when digits follow, so "2e" lexes as 2, e
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                ++p;
                while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
                pos_ = p;
            }
        }
        t.type = Tok::Number;
        std::string_view num = src_.substr(start, pos_ - start);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw ParseError(static_cast<int>(start) + 1, "malformed number");
        t.number = v;
    }

    std::string_view src_;
    size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Parser (recursive descent)

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ExprAst run() {
        NodePtr root = parse_expression();
        if (cur_.type != Tok::End)
            throw ParseError(cur_.begin + 1, "unexpected " + describe(cur_) + "; expected operator or end of input");
        return ExprAst(std::move(root), var_name_);
    }

private:
    void advance() { cur_ = lexer_.next(); }

    static std::string describe(const Token& t) {
        switch (t.type) {
            case Tok::Number: return "number";
            case Tok::Ident: return "identifier '" + t.text + "'";
            case Tok::Plus: return "'+'";
            case Tok::Minus: return "'-'";
            case Tok::Star: return "'*'";
            case Tok::Slash: return "'/'";
            case Tok::Caret: return "'^'";
            case Tok::LParen: return "'('";
            case Tok::RParen: return "')'";
            case Tok::End: return "end of input";
        }
        return "?";
    }

    static Span join(const NodePtr& a, const NodePtr& b) {
        return {a->span().begin, b->span().end};
    }

    NodePtr parse_expression() {
        NodePtr lhs = parse_term();
        while (cur_.type == Tok::Plus || cur_.type == Tok::Minus) {
            NodeKind op = cur_.type == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
            advance();
            NodePtr rhs = parse_term();
            Span s = join(lhs, rhs);
            lhs = Node::make_binary(op, std::move(lhs), std::move(rhs), s);
        }
        return lhs;
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        while (cur_.type == Tok::Star || cur_.type == Tok::Slash) {
            NodeKind op = cur_.type == Tok::Star ? NodeKind::Mul : NodeKind::Div;
            advance();
            NodePtr rhs = parse_unary();
            Span s = join(lhs, rhs);
            lhs = Node::make_binary(op, std::move(lhs), std::move(rhs), s);
        }
        return lhs;
    }

    NodePtr parse_unary() {
        if (cur_.type == Tok::Minus) {
            int begin = cur_.begin;
            advance();
            NodePtr child = parse_unary();
            Span s{begin, child->span().end};
            return Node::make_negate(std::move(child), s);
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (cur_.type == Tok::Caret) {
            advance();
            NodePtr exponent = parse_unary(); // right-associative; allows 2^-3
            Span s = join(base, exponent);
            return Node::make_binary(NodeKind::Pow, std::move(base), std::move(exponent), s);
        }
        return base;
    }

    NodePtr parse_atom() {
        switch (cur_.type) {
            case Tok::Number: {
                Token t = cur_;
                advance();
                return Node::make_literal(Complex(t.number, 0.0), {t.begin, t.end});
            }
            case Tok::LParen: {
                Token open = cur_;
                advance();
                NodePtr inner = parse_expression();
                if (cur_.type != Tok::RParen)
                    throw ParseError(cur_.begin + 1,
                                     "expected ')' to close '(' at position " +
                                         std::to_string(open.begin + 1) + " (unbalanced parenthesis)");
                advance();
                return inner;
            }
            case Tok::Ident:
                return parse_ident();
            default:
                throw ParseError(cur_.begin + 1, "expected expression, found " + describe(cur_));
        }
    }

    NodePtr parse_ident() {
        Token t = cur_;
        advance();
        Span s{t.begin, t.end};
        if (t.text == "i") return Node::make_literal(Complex(0.0, 1.0), s);
        if (t.text == "pi") return Node::make_literal(Complex(M_PI, 0.0), s);
        if (t.text == "e") return Node::make_literal(Complex(M_E, 0.0), s);

        static const std::pair<const char*, Func> kFuncs[] = {
            {"exp", Func::Exp}, {"sin", Func::Sin},   {"cos", Func::Cos}, {"sinh", Func::Sinh},
            {"cosh", Func::Cosh}, {"sqrt", Func::Sqrt}, {"ln", Func::Ln},
        };
        for (const auto& [name, func] : kFuncs) {
            if (t.text == name) {
                if (cur_.type != Tok::LParen)
                    throw ParseError(cur_.begin + 1,
                                     "expected '(' after function '" + t.text + "'");
                Token open = cur_;
                advance();
                NodePtr arg = parse_expression();
                if (cur_.type != Tok::RParen)
                    throw ParseError(cur_.begin + 1,
                                     "expected ')' to close '(' at position " +
                                         std::to_string(open.begin + 1) + " (unbalanced parenthesis)");
                Span span{t.begin, cur_.end};
                advance();
                return Node::make_call(func, std::move(arg), span);
            }
        }

        if (t.text == "x" || t.text == "z") {
            if (var_name_.empty()) {
                var_name_ = t.text;
            } else if (var_name_ != t.text) {
                throw ParseError(t.begin + 1,
                                 "more than one distinct free variable: '" + var_name_ +
                                     "' and '" + t.text + "'");
            }
            return Node::make_variable(s);
        }
        throw ParseError(t.begin + 1, "unknown identifier '" + t.text + "'");
    }

    Lexer lexer_;
    Token cur_;
    std::string var_name_;
};

} // namespace

ExprAst parse(std::string_view source) {
    if (source.empty()) throw ParseError(1, "empty expression");
    return Parser(source).run();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

void check_finite(const Complex& v, const Node& at) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw EvalError(EvalErrorKind::NonFinite, at.span().begin, at.span().end,
                        "non-finite intermediate value");
}

Complex eval_node(const Node& n, Complex point) {
    switch (n.kind()) {
        case NodeKind::Literal: return n.literal_value();
        case NodeKind::Variable: return point;
        case NodeKind::Negate: return -eval_node(*n.child(0), point);
        case NodeKind::Add: {
            Complex v = eval_node(*n.child(0), point) + eval_node(*n.child(1), point);
            check_finite(v, n);
            return v;
        }
        case NodeKind::Sub: {
            Complex v = eval_node(*n.child(0), point) - eval_node(*n.child(1), point);
            check_finite(v, n);
            return v;
        }
        case NodeKind::Mul: {
            Complex v = eval_node(*n.child(0), point) * eval_node(*n.child(1), point);
            check_finite(v, n);
            return v;
        }
        case NodeKind::Div: {
            Complex num = eval_node(*n.child(0), point);
            Complex den = eval_node(*n.child(1), point);
            if (den.real() == 0.0 && den.imag() == 0.0)
                throw EvalError(EvalErrorKind::DivisionByZero, n.span().begin, n.span().end,
                                "division by zero");
            Complex v = num / den;
            check_finite(v, n);
            return v;
        }
        case NodeKind::Pow: {
            Complex base = eval_node(*n.child(0), point);
            Complex expo = eval_node(*n.child(1), point);
            Complex v;
            if (base.real() == 0.0 && base.imag() == 0.0) {
                if (expo.real() == 0.0 && expo.imag() == 0.0) {
                    v = Complex(1.0, 0.0);
                } else if (expo.real() > 0.0) {
                    v = Complex(0.0, 0.0);
                } else {
                    throw EvalError(EvalErrorKind::Domain, n.span().begin, n.span().end,
                                    "zero base raised to nonpositive power");
                }
            } else {
                v = std::pow(base, expo);
            }
            check_finite(v, n);
            return v;
        }
        case NodeKind::Call: {
            Complex a = eval_node(*n.child(0), point);
            Complex v;
            switch (n.func()) {
                case Func::Exp: v = std::exp(a); break;
                case Func::Sin: v = std::sin(a); break;
                case Func::Cos: v = std::cos(a); break;
                case Func::Sinh: v = std::sinh(a); break;
                case Func::Cosh: v = std::cosh(a); break;
                case Func::Sqrt: v = std::sqrt(a); break; // principal branch
                case Func::Ln:
                    if (a.real() == 0.0 && a.imag() == 0.0)
                        throw EvalError(EvalErrorKind::LogOfZero, n.span().begin, n.span().end,
                                        "ln of zero");
                    v = std::log(a); // principal branch, cut on the negative real axis
                    break;
            }
            check_finite(v, n);
            return v;
        }
    }
    throw Error("corrupt expression node");
}

} // namespace

Complex eval(const ExprAst& ast, Complex point) {
    if (!ast.root()) throw Error("empty expression");
    return eval_node(*ast.root(), point);
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

// Keeps derivative trees printable: synthesized constants are built from
// the parser-producible pieces (nonnegative reals, i) so that
// print/reparse preserves structure.
NodePtr parseable_literal(Complex v) {
    double a = v.real() == 0.0 ? 0.0 : v.real(); // normalize -0
    double b = v.imag() == 0.0 ? 0.0 : v.imag();
    auto real_lit = [](double x) {
        if (x < 0.0) return Node::make_negate(Node::make_literal(Complex(-x, 0.0)));
        return Node::make_literal(Complex(x, 0.0));
    };
    if (b == 0.0) return real_lit(a);
    NodePtr unit = Node::make_literal(Complex(0.0, 1.0));
    NodePtr imag_mag = std::abs(b) == 1.0
                           ? unit
                           : Node::make_binary(NodeKind::Mul,
                                               Node::make_literal(Complex(std::abs(b), 0.0)), unit);
    if (a == 0.0)
        return b > 0.0 ? imag_mag : Node::make_negate(std::move(imag_mag));
    return Node::make_binary(b > 0.0 ? NodeKind::Add : NodeKind::Sub, real_lit(a),
                             std::move(imag_mag));
}

NodePtr diff_node(const NodePtr& n); // forward

NodePtr d_mul(NodePtr u, NodePtr v) { return Node::make_binary(NodeKind::Mul, std::move(u), std::move(v)); }
NodePtr d_add(NodePtr u, NodePtr v) { return Node::make_binary(NodeKind::Add, std::move(u), std::move(v)); }
NodePtr d_sub(NodePtr u, NodePtr v) { return Node::make_binary(NodeKind::Sub, std::move(u), std::move(v)); }
NodePtr d_div(NodePtr u, NodePtr v) { return Node::make_binary(NodeKind::Div, std::move(u), std::move(v)); }

NodePtr diff_node(const NodePtr& n) {
    switch (n->kind()) {
        case NodeKind::Literal: return Node::make_literal(Complex(0.0, 0.0));
        case NodeKind::Variable: return Node::make_literal(Complex(1.0, 0.0));
        case NodeKind::Negate: return Node::make_negate(diff_node(n->child(0)));
        case NodeKind::Add: return d_add(diff_node(n->child(0)), diff_node(n->child(1)));
        case NodeKind::Sub: return d_sub(diff_node(n->child(0)), diff_node(n->child(1)));
        case NodeKind::Mul: {
            const NodePtr& u = n->child(0);
            const NodePtr& v = n->child(1);
            return d_add(d_mul(diff_node(u), v), d_mul(u, diff_node(v)));
        }
        case NodeKind::Div: {
            const NodePtr& u = n->child(0);
            const NodePtr& v = n->child(1);
            return d_div(d_sub(d_mul(diff_node(u), v), d_mul(u, diff_node(v))), d_mul(v, v));
        }
        case NodeKind::Pow: {
            const NodePtr& u = n->child(0);
            const NodePtr& v = n->child(1);
            if (v->kind() == NodeKind::Literal) {
                // d(u^c) = c * u^(c-1) * u'
                Complex c = v->literal_value();
                NodePtr power =
                    Node::make_binary(NodeKind::Pow, u, parseable_literal(c - Complex(1.0, 0.0)));
                return d_mul(d_mul(v, std::move(power)), diff_node(u));
            }
            // d(u^v) = u^v * (v' ln u + v u'/u), principal branch
            NodePtr lhs = Node::make_binary(NodeKind::Pow, u, v);
            NodePtr term1 = d_mul(diff_node(v), Node::make_call(Func::Ln, u));
            NodePtr term2 = d_mul(v, d_div(diff_node(u), u));
            return d_mul(std::move(lhs), d_add(std::move(term1), std::move(term2)));
        }
        case NodeKind::Call: {
            const NodePtr& u = n->child(0);
            NodePtr du = diff_node(u);
            switch (n->func()) {
                case Func::Exp: return d_mul(Node::make_call(Func::Exp, u), std::move(du));
                case Func::Sin: return d_mul(Node::make_call(Func::Cos, u), std::move(du));
                case Func::Cos:
                    return d_mul(Node::make_negate(Node::make_call(Func::Sin, u)), std::move(du));
                case Func::Sinh: return d_mul(Node::make_call(Func::Cosh, u), std::move(du));
                case Func::Cosh: return d_mul(Node::make_call(Func::Sinh, u), std::move(du));
                case Func::Sqrt:
                    return d_div(std::move(du),
                                 d_mul(Node::make_literal(Complex(2.0, 0.0)),
                                       Node::make_call(Func::Sqrt, u)));
                case Func::Ln: return d_div(std::move(du), u);
            }
            break;
        }
    }
    throw Error("corrupt expression node");
}

} // namespace

ExprAst differentiate(const ExprAst& ast) {
    if (!ast.root()) throw Error("empty expression");
    return ExprAst(diff_node(ast.root()), ast.variable_name());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence for parenthesization: Add/Sub 1, Mul/Div 2, Negate sits
// between Mul and Pow, Pow 4, atoms 5.
int print_prec(const Node& n) {
    switch (n.kind()) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Negate: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

std::string fmt_shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string print_literal(Complex v) {
    if (v.imag() == 0.0) return fmt_shortest(v.real());
    if (v.real() == 0.0 && v.imag() == 1.0) return "i";
    // General complex constants are not parser-producible; render them as
    // an arithmetic form that evaluates identically.
    std::string s = "(" + fmt_shortest(v.real());
    s += v.imag() < 0.0 ? "-" : "+";
    s += fmt_shortest(std::abs(v.imag()));
    s += "*i)";
    return s;
}

void print_node(const Node& n, const std::string& var, std::string& out);

void print_child(const Node& child, const std::string& var, std::string& out, bool parens) {
    if (parens) {
        out += '(';
        print_node(child, var, out);
        out += ')';
    } else {
        print_node(child, var, out);
    }
}

void print_node(const Node& n, const std::string& var, std::string& out) {
    switch (n.kind()) {
        case NodeKind::Literal:
            out += print_literal(n.literal_value());
            return;
        case NodeKind::Variable:
            out += var;
            return;
        case NodeKind::Negate: {
            out += '-';
            const Node& c = *n.child(0);
            print_child(c, var, out, print_prec(c) < print_prec(n));
            return;
        }
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: {
            int p = print_prec(n);
            const Node& l = *n.child(0);
            const Node& r = *n.child(1);
            print_child(l, var, out, print_prec(l) < p);
            switch (n.kind()) {
                case NodeKind::Add: out += '+'; break;
                case NodeKind::Sub: out += '-'; break;
                case NodeKind::Mul: out += '*'; break;
                default: out += '/'; break;
            }
            // Left-associative grammar: a right child at the same level
            // must keep its parentheses to round-trip structurally.
            print_child(r, var, out, print_prec(r) <= p);
            return;
        }
        case NodeKind::Pow: {
            const Node& l = *n.child(0);
            const Node& r = *n.child(1);
            print_child(l, var, out, print_prec(l) <= 4);
            out += '^';
            // Exponent parses as a unary, so Pow/Negate/atoms stand bare.
            print_child(r, var, out, print_prec(r) < 3);
            return;
        }
        case NodeKind::Call: {
            out += func_name(n.func());
            out += '(';
            print_node(*n.child(0), var, out);
            out += ')';
            return;
        }
    }
}

} // namespace

std::string to_string(const ExprAst& ast) {
    if (!ast.root()) return "";
    std::string var = ast.variable_name().empty() ? "z" : ast.variable_name();
    std::string out;
    print_node(*ast.root(), var, out);
    return out;
}

// ---------------------------------------------------------------------------
// Structural equality and substitution

namespace {

bool equal_nodes(const Node& a, const Node& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case NodeKind::Literal:
            return a.literal_value().real() == b.literal_value().real() &&
                   a.literal_value().imag() == b.literal_value().imag();
        case NodeKind::Variable: return true;
        case NodeKind::Call:
            if (a.func() != b.func()) return false;
            break;
        default: break;
    }
    for (int i = 0; i < a.arity(); ++i)
        if (!equal_nodes(*a.child(i), *b.child(i))) return false;
    return true;
}

NodePtr substitute_node(const NodePtr& n, const NodePtr& replacement) {
    switch (n->kind()) {
        case NodeKind::Variable: return replacement;
        case NodeKind::Literal: return n;
        case NodeKind::Negate: {
            NodePtr c = substitute_node(n->child(0), replacement);
            return c == n->child(0) ? n : Node::make_negate(std::move(c), n->span());
        }
        case NodeKind::Call: {
            NodePtr c = substitute_node(n->child(0), replacement);
            return c == n->child(0) ? n : Node::make_call(n->func(), std::move(c), n->span());
        }
        default: {
            NodePtr l = substitute_node(n->child(0), replacement);
            NodePtr r = substitute_node(n->child(1), replacement);
            if (l == n->child(0) && r == n->child(1)) return n;
            return Node::make_binary(n->kind(), std::move(l), std::move(r), n->span());
        }
    }
}

} // namespace

bool structurally_equal(const ExprAst& a, const ExprAst& b) {
    if (!a.root() || !b.root()) return !a.root() && !b.root();
    return equal_nodes(*a.root(), *b.root());
}

ExprAst substitute_variable(const ExprAst& ast, const ExprAst& replacement) {
    if (!ast.root() || !replacement.root()) throw Error("empty expression");
    std::string name = replacement.variable_name().empty() ? ast.variable_name()
                                                           : replacement.variable_name();
    return ExprAst(substitute_node(ast.root(), replacement.root()), std::move(name));
}

// ---------------------------------------------------------------------------
// Builders

namespace build {

ExprAst literal(Complex value) { return ExprAst(Node::make_literal(value)); }
ExprAst variable() { return ExprAst(Node::make_variable()); }
ExprAst negate(const ExprAst& a) { return ExprAst(Node::make_negate(a.root()), a.variable_name()); }

namespace {
ExprAst binary(NodeKind op, const ExprAst& a, const ExprAst& b) {
    std::string name = a.variable_name().empty() ? b.variable_name() : a.variable_name();
    return ExprAst(Node::make_binary(op, a.root(), b.root()), std::move(name));
}
} // namespace

ExprAst add(const ExprAst& a, const ExprAst& b) { return binary(NodeKind::Add, a, b); }
ExprAst sub(const ExprAst& a, const ExprAst& b) { return binary(NodeKind::Sub, a, b); }
ExprAst mul(const ExprAst& a, const ExprAst& b) { return binary(NodeKind::Mul, a, b); }
ExprAst div(const ExprAst& a, const ExprAst& b) { return binary(NodeKind::Div, a, b); }
ExprAst pow(const ExprAst& a, const ExprAst& b) { return binary(NodeKind::Pow, a, b); }
ExprAst call(Func func, const ExprAst& a) {
    return ExprAst(Node::make_call(func, a.root()), a.variable_name());
}

} // namespace build

} // namespace pvkit::expr
