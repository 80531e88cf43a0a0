#ifndef HOG_EXPR_HH
#define HOG_EXPR_HH

#include <hog/invariants.hh>
#include <hog/rational.hh>

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hog
{
    enum class TriBool
    {
        false_,
        true_,
        unknown
    };

    auto tribool_name(TriBool t) -> std::string_view;
    auto tri_and(TriBool a, TriBool b) -> TriBool;
    auto tri_or(TriBool a, TriBool b) -> TriBool;
    auto tri_not(TriBool a) -> TriBool;

    enum class ArithmeticOp
    {
        add,
        subtract,
        multiply,
        divide
    };

    enum class ComparisonOp
    {
        less_equal,
        less,
        equal,
        not_equal,
        greater,
        greater_equal
    };

    enum class LogicOp
    {
        conjunction,
        disjunction
    };

    struct ExprNode;
    using ExprPtr = std::shared_ptr<const ExprNode>;

    /// Immutable expression tree. Numeric nodes: Literal, Atom (numeric invariant),
    /// Negate, Arithmetic. Boolean nodes: BoolLiteral, Atom (boolean invariant), Not,
    /// Comparison, Logic.
    struct ExprNode
    {
        struct Literal
        {
            Rational value;
        };
        struct BoolLiteral
        {
            bool value;
        };
        struct Atom
        {
            InvariantId invariant;
        };
        struct Negate
        {
            ExprPtr operand;
        };
        struct Arithmetic
        {
            ArithmeticOp op;
            ExprPtr lhs, rhs;
        };
        struct Comparison
        {
            ComparisonOp op;
            ExprPtr lhs, rhs;
        };
        struct Not
        {
            ExprPtr operand;
        };
        struct Logic
        {
            LogicOp op;
            ExprPtr lhs, rhs;
        };

        std::variant<Literal, BoolLiteral, Atom, Negate, Arithmetic, Comparison, Not, Logic> node;

        auto is_boolean() const -> bool;
    };

    /// A parsed, type-checked expression whose value is boolean.
    class Expression
    {
    public:
        explicit Expression(ExprPtr root);

        auto root() const -> const ExprNode & { return *_root; }
        auto root_ptr() const -> const ExprPtr & { return _root; }

        /// Every invariant the expression reads.
        auto invariants() const -> std::vector<InvariantId>;

        /// Fully parenthesised; parse(to_string()) evaluates identically.
        auto to_string() const -> std::string;

    private:
        ExprPtr _root;
    };

    /// Grammar (see docs/EXPRESSIONS.md):
    ///   or   := and ("or" and)*          and  := not ("and" not)*
    ///   not  := "not" not | cmp          cmp  := sum (relop sum)?
    ///   sum  := term (("+"|"-") term)*   term := unary (("*"|"/") unary)*
    ///   unary := "-" unary | primary
    ///   primary := number | name | name "(G)" | "|V(G)|" | "|E(G)|" | "true" | "false" | "(" or ")"
    /// relop also accepts ≤ ≥ ≠ and \le \ge \ne. "m(G)" denotes the matching number;
    /// bare "m" is the edge count.
    /// Throws hog::Error (bad_query) with the 1-based column in offset().
    auto parse_expression(std::string_view text) -> Expression;

    /// Kleene evaluation. Anything that is not a computed rational or boolean (pending,
    /// unknown, undefined) reads as UNKNOWN, as does division by zero.
    auto evaluate(const Expression & e, const InvariantMap & values) -> TriBool;
}

#endif
