#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>

#include "pvkit/errors.hpp"

namespace pvkit::expr {

using Complex = std::complex<double>;

enum class NodeKind {
    Literal,  // complex constant
    Variable, // the single free variable
    Negate,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Call,
};

enum class Func { Exp, Sin, Cos, Sinh, Cosh, Sqrt, Ln };

const char* func_name(Func f);

/// Character range [begin, end) in the original source, 0-based.
/// Synthesized nodes (builders, derivatives) carry {0, 0}.
struct Span {
    int begin = 0;
    int end = 0;
};

class Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression node. Trees are shared freely across threads.
class Node {
public:
    static NodePtr make_literal(Complex value, Span span = {});
    static NodePtr make_variable(Span span = {});
    static NodePtr make_negate(NodePtr child, Span span = {});
    static NodePtr make_binary(NodeKind op, NodePtr lhs, NodePtr rhs, Span span = {});
    static NodePtr make_call(Func func, NodePtr arg, Span span = {});

    NodeKind kind() const noexcept { return kind_; }
    Complex literal_value() const noexcept { return literal_; }
    Func func() const noexcept { return func_; }
    Span span() const noexcept { return span_; }

    /// 0 for literals/variables, 1 for negate/call, 2 for binary ops.
    int arity() const noexcept;
    const NodePtr& child(int i) const;

private:
    Node() = default;

    NodeKind kind_ = NodeKind::Literal;
    Complex literal_{0.0, 0.0};
    Func func_ = Func::Exp;
    NodePtr children_[2];
    Span span_{};
};

/// A parsed expression in one free variable. "x" and "z" are aliases for
/// the same variable; mixing both names in one source is rejected.
class ExprAst {
public:
    ExprAst() = default;
    explicit ExprAst(NodePtr root, std::string variable_name = "z");

    const NodePtr& root() const noexcept { return root_; }

    /// Variable name as written in the source ("z" for built ASTs,
    /// empty for constant expressions).
    const std::string& variable_name() const noexcept { return variable_name_; }

private:
    NodePtr root_;
    std::string variable_name_;
};

/// Parse an expression. Grammar: ^ binds tighter than * and /, which bind
/// tighter than + and -; ^ is right-associative; unary minus binds looser
/// than ^. `i`, `pi`, `e` are reserved constants. Implicit multiplication
/// is rejected. Throws ParseError with a 1-based position.
ExprAst parse(std::string_view source);

/// Evaluate at a point. Principal branches for sqrt and ln; division by
/// exact zero, ln(0) and non-finite intermediates throw EvalError.
Complex eval(const ExprAst& ast, Complex point);

/// Symbolic derivative with respect to the free variable. No
/// simplification beyond well-formedness.
ExprAst differentiate(const ExprAst& ast);

/// Unparse. Reparsing the result yields a structurally identical tree for
/// any AST whose literals are parser-producible (nonnegative reals or i).
std::string to_string(const ExprAst& ast);

bool structurally_equal(const ExprAst& a, const ExprAst& b);

/// Replace every occurrence of the free variable with `replacement`.
ExprAst substitute_variable(const ExprAst& ast, const ExprAst& replacement);

/// Builders for programmatic ASTs.
namespace build {

ExprAst literal(Complex value);
ExprAst variable();
ExprAst negate(const ExprAst& a);
ExprAst add(const ExprAst& a, const ExprAst& b);
ExprAst sub(const ExprAst& a, const ExprAst& b);
ExprAst mul(const ExprAst& a, const ExprAst& b);
ExprAst div(const ExprAst& a, const ExprAst& b);
ExprAst pow(const ExprAst& a, const ExprAst& b);
ExprAst call(Func func, const ExprAst& a);

} // namespace build

} // namespace pvkit::expr
