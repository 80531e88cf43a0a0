#include <hog/error.hh>
#include <hog/expr.hh>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace hog
{
    namespace
    {
        enum class TokenKind
        {
            number,
            name,
            op,
            lparen,
            rparen,
            end
        };

        struct Token
        {
            TokenKind kind;
            std::string text;
            std::size_t column; // 1-based
        };

        auto syntax_error(const std::string & message, std::size_t column) -> Error
        {
            return Error{ErrorCode::bad_query, "syntax error at column " + std::to_string(column) + ": " + message, column};
        }

        auto tokenize(std::string_view text) -> std::vector<Token>
        {
            std::vector<Token> tokens;
            std::size_t i = 0;
            while (i < text.size()) {
                char c = text[i];
                std::size_t column = i + 1;
                if (std::isspace(static_cast<unsigned char>(c))) {
                    ++i;
                    continue;
                }
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    std::size_t j = i;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                        ++j;
                    if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                        ++j;
                        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                            ++j;
                    }
                    tokens.push_back({TokenKind::number, std::string{text.substr(i, j - i)}, column});
                    i = j;
                    continue;
                }
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    std::size_t j = i;
                    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                        ++j;
                    tokens.push_back({TokenKind::name, std::string{text.substr(i, j - i)}, column});
                    i = j;
                    continue;
                }
                if (text.substr(i).starts_with("|V(G)|") || text.substr(i).starts_with("|E(G)|")) {
                    tokens.push_back({TokenKind::name, text[i + 1] == 'V' ? "n" : "m", column});
                    i += 6;
                    continue;
                }
                static constexpr std::string_view two_char[] = {"<=", ">=", "!=", "=="};
                static constexpr std::pair<std::string_view, std::string_view> unicode[] = {
                    {"≤", "<="}, {"≥", ">="}, {"≠", "!="}, {"−", "-"}, {"\\leq", "<="}, {"\\geq", ">="}, {"\\neq", "!="},
                    {"\\le", "<="}, {"\\ge", ">="}, {"\\ne", "!="}};
                bool matched = false;
                for (auto op : two_char)
                    if (text.substr(i).starts_with(op)) {
                        tokens.push_back({TokenKind::op, std::string{op == "==" ? "=" : op}, column});
                        i += 2;
                        matched = true;
                        break;
                    }
                if (! matched)
                    for (auto [glyph, op] : unicode)
                        if (text.substr(i).starts_with(glyph)) {
                            tokens.push_back({TokenKind::op, std::string{op}, column});
                            i += glyph.size();
                            matched = true;
                            break;
                        }
                if (matched)
                    continue;
                switch (c) {
                case '<':
                case '>':
                case '=':
                case '+':
                case '-':
                case '*':
                case '/': tokens.push_back({TokenKind::op, std::string(1, c), column}); break;
                case '(': tokens.push_back({TokenKind::lparen, "(", column}); break;
                case ')': tokens.push_back({TokenKind::rparen, ")", column}); break;
                default: throw syntax_error("unexpected character '" + std::string(1, c) + "'", column);
                }
                ++i;
            }
            tokens.push_back({TokenKind::end, "", text.size() + 1});
            return tokens;
        }

        template <typename N_>
        auto make(N_ n) -> ExprPtr
        {
            return std::make_shared<ExprNode>(ExprNode{std::move(n)});
        }

        class Parser
        {
        public:
            explicit Parser(std::string_view text) : _tokens(tokenize(text)) {}

            auto parse() -> ExprPtr
            {
                auto root = parse_or();
                if (peek().kind != TokenKind::end)
                    throw syntax_error("unexpected '" + peek().text + "'", peek().column);
                if (! root->is_boolean())
                    throw syntax_error("expression is numeric, expected a condition", 1);
                return root;
            }

        private:
            auto peek() const -> const Token & { return _tokens[_pos]; }
            auto take() -> const Token & { return _tokens[_pos++]; }

            auto peek_word(std::string_view word) const -> bool
            {
                return peek().kind == TokenKind::name && peek().text == word;
            }

            auto peek_op(std::string_view op) const -> bool { return peek().kind == TokenKind::op && peek().text == op; }

            static void require_boolean(const ExprPtr & e, const Token & at)
            {
                if (! e->is_boolean())
                    throw syntax_error("'" + at.text + "' needs a condition operand", at.column);
            }

            static void require_numeric(const ExprPtr & e, const Token & at)
            {
                if (e->is_boolean())
                    throw syntax_error("'" + at.text + "' needs a numeric operand", at.column);
            }

            auto parse_or() -> ExprPtr
            {
                auto lhs = parse_and();
                while (peek_word("or")) {
                    auto op = take();
                    auto rhs = parse_and();
                    require_boolean(lhs, op);
                    require_boolean(rhs, op);
                    lhs = make(ExprNode::Logic{LogicOp::disjunction, lhs, rhs});
                }
                return lhs;
            }

            auto parse_and() -> ExprPtr
            {
                auto lhs = parse_not();
                while (peek_word("and")) {
                    auto op = take();
                    auto rhs = parse_not();
                    require_boolean(lhs, op);
                    require_boolean(rhs, op);
                    lhs = make(ExprNode::Logic{LogicOp::conjunction, lhs, rhs});
                }
                return lhs;
            }

            auto parse_not() -> ExprPtr
            {
                if (peek_word("not")) {
                    auto op = take();
                    auto operand = parse_not();
                    require_boolean(operand, op);
                    return make(ExprNode::Not{operand});
                }
                return parse_comparison();
            }

            auto parse_comparison() -> ExprPtr
            {
                auto lhs = parse_sum();
                static constexpr std::pair<std::string_view, ComparisonOp> ops[] = {{"<=", ComparisonOp::less_equal},
                    {"<", ComparisonOp::less}, {"=", ComparisonOp::equal}, {"!=", ComparisonOp::not_equal},
                    {">", ComparisonOp::greater}, {">=", ComparisonOp::greater_equal}};
                if (peek().kind != TokenKind::op)
                    return lhs;
                for (auto [text, op] : ops)
                    if (peek().text == text) {
                        auto at = take();
                        auto rhs = parse_sum();
                        bool equality = op == ComparisonOp::equal || op == ComparisonOp::not_equal;
                        if (lhs->is_boolean() != rhs->is_boolean() || (lhs->is_boolean() && ! equality))
                            throw syntax_error("'" + at.text + "' compares incompatible operands", at.column);
                        return make(ExprNode::Comparison{op, lhs, rhs});
                    }
                return lhs;
            }

            auto parse_sum() -> ExprPtr
            {
                auto lhs = parse_term();
                while (peek_op("+") || peek_op("-")) {
                    auto op = take();
                    auto rhs = parse_term();
                    require_numeric(lhs, op);
                    require_numeric(rhs, op);
                    lhs = make(
                        ExprNode::Arithmetic{op.text == "+" ? ArithmeticOp::add : ArithmeticOp::subtract, lhs, rhs});
                }
                return lhs;
            }

            auto parse_term() -> ExprPtr
            {
                auto lhs = parse_unary();
                while (peek_op("*") || peek_op("/")) {
                    auto op = take();
                    auto rhs = parse_unary();
                    require_numeric(lhs, op);
                    require_numeric(rhs, op);
                    lhs = make(
                        ExprNode::Arithmetic{op.text == "*" ? ArithmeticOp::multiply : ArithmeticOp::divide, lhs, rhs});
                }
                return lhs;
            }

            auto parse_unary() -> ExprPtr
            {
                if (peek_op("-")) {
                    auto op = take();
                    auto operand = parse_unary();
                    require_numeric(operand, op);
                    return make(ExprNode::Negate{operand});
                }
                return parse_primary();
            }

            auto parse_primary() -> ExprPtr
            {
                const auto & token = peek();
                switch (token.kind) {
                case TokenKind::number: {
                    auto value = Rational::parse(token.text);
                    if (! value)
                        throw syntax_error("number out of range", token.column);
                    take();
                    return make(ExprNode::Literal{*value});
                }
                case TokenKind::lparen: {
                    take();
                    auto inner = parse_or();
                    if (peek().kind != TokenKind::rparen)
                        throw syntax_error("expected ')'", peek().column);
                    take();
                    return inner;
                }
                case TokenKind::name: return parse_name();
                case TokenKind::end: throw syntax_error("unexpected end of expression", token.column);
                default: throw syntax_error("unexpected '" + token.text + "'", token.column);
                }
            }

            auto parse_name() -> ExprPtr
            {
                auto token = take();
                if (token.text == "true" || token.text == "false")
                    return make(ExprNode::BoolLiteral{token.text == "true"});
                if (token.text == "and" || token.text == "or" || token.text == "not")
                    throw syntax_error("unexpected '" + token.text + "'", token.column);

                std::string name = token.text;
                if (peek().kind == TokenKind::lparen && _pos + 2 < _tokens.size()
                    && _tokens[_pos + 1].kind == TokenKind::name && _tokens[_pos + 1].text == "G"
                    && _tokens[_pos + 2].kind == TokenKind::rparen) {
                    _pos += 3;
                    if (name == "m")
                        name = "mu";
                }

                auto id = find_invariant(name);
                if (! id)
                    throw Error{ErrorCode::bad_query,
                        "unknown identifier '" + token.text + "' at column " + std::to_string(token.column), token.column};
                return make(ExprNode::Atom{*id});
            }

            std::vector<Token> _tokens;
            std::size_t _pos = 0;
        };

        auto arithmetic_symbol(ArithmeticOp op) -> std::string_view
        {
            switch (op) {
            case ArithmeticOp::add: return "+";
            case ArithmeticOp::subtract: return "-";
            case ArithmeticOp::multiply: return "*";
            case ArithmeticOp::divide: return "/";
            }
            return "?";
        }

        auto comparison_symbol(ComparisonOp op) -> std::string_view
        {
            switch (op) {
            case ComparisonOp::less_equal: return "<=";
            case ComparisonOp::less: return "<";
            case ComparisonOp::equal: return "=";
            case ComparisonOp::not_equal: return "!=";
            case ComparisonOp::greater: return ">";
            case ComparisonOp::greater_equal: return ">=";
            }
            return "?";
        }

        auto print(const ExprNode & e) -> std::string
        {
            return std::visit(
                [](const auto & n) -> std::string {
                    using N = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<N, ExprNode::Literal>) {
                        if (n.value.is_integer() && n.value.num() >= 0)
                            return n.value.to_string();
                        if (n.value.is_integer())
                            return "(-" + std::to_string(-n.value.num()) + ")";
                        auto num = n.value.num();
                        auto body = std::to_string(num < 0 ? -num : num) + "/" + std::to_string(n.value.den());
                        return num < 0 ? "(-(" + body + "))" : "(" + body + ")";
                    }
                    else if constexpr (std::is_same_v<N, ExprNode::BoolLiteral>)
                        return n.value ? "true" : "false";
                    else if constexpr (std::is_same_v<N, ExprNode::Atom>)
                        return std::string{short_name(n.invariant)};
                    else if constexpr (std::is_same_v<N, ExprNode::Negate>)
                        return "(-" + print(*n.operand) + ")";
                    else if constexpr (std::is_same_v<N, ExprNode::Arithmetic>)
                        return "(" + print(*n.lhs) + " " + std::string{arithmetic_symbol(n.op)} + " " + print(*n.rhs) + ")";
                    else if constexpr (std::is_same_v<N, ExprNode::Comparison>)
                        return "(" + print(*n.lhs) + " " + std::string{comparison_symbol(n.op)} + " " + print(*n.rhs) + ")";
                    else if constexpr (std::is_same_v<N, ExprNode::Not>)
                        return "(not " + print(*n.operand) + ")";
                    else
                        return "(" + print(*n.lhs) + (n.op == LogicOp::conjunction ? " and " : " or ") + print(*n.rhs)
                            + ")";
                },
                e.node);
        }

        void collect(const ExprNode & e, std::set<InvariantId> & out)
        {
            std::visit(
                [&](const auto & n) {
                    using N = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<N, ExprNode::Atom>)
                        out.insert(n.invariant);
                    else if constexpr (std::is_same_v<N, ExprNode::Negate> || std::is_same_v<N, ExprNode::Not>)
                        collect(*n.operand, out);
                    else if constexpr (std::is_same_v<N, ExprNode::Arithmetic> || std::is_same_v<N, ExprNode::Comparison>
                        || std::is_same_v<N, ExprNode::Logic>) {
                        collect(*n.lhs, out);
                        collect(*n.rhs, out);
                    }
                },
                e.node);
        }

        auto evaluate_number(const ExprNode & e, const InvariantMap & values) -> std::optional<Rational>;
        auto evaluate_condition(const ExprNode & e, const InvariantMap & values) -> TriBool;

        auto lookup(const InvariantMap & values, InvariantId id) -> InvariantValue
        {
            auto it = values.find(id);
            return it == values.end() ? InvariantValue::pending() : it->second;
        }

        auto evaluate_number(const ExprNode & e, const InvariantMap & values) -> std::optional<Rational>
        {
            if (auto literal = std::get_if<ExprNode::Literal>(&e.node))
                return literal->value;
            if (auto atom = std::get_if<ExprNode::Atom>(&e.node))
                return lookup(values, atom->invariant).rational();
            if (auto negate = std::get_if<ExprNode::Negate>(&e.node)) {
                auto v = evaluate_number(*negate->operand, values);
                if (! v)
                    return std::nullopt;
                try {
                    return -*v;
                }
                catch (const std::overflow_error &) {
                    return std::nullopt;
                }
            }
            const auto & a = std::get<ExprNode::Arithmetic>(e.node);
            auto lhs = evaluate_number(*a.lhs, values);
            auto rhs = evaluate_number(*a.rhs, values);
            if (! lhs || ! rhs)
                return std::nullopt;
            try {
                switch (a.op) {
                case ArithmeticOp::add: return *lhs + *rhs;
                case ArithmeticOp::subtract: return *lhs - *rhs;
                case ArithmeticOp::multiply: return *lhs * *rhs;
                case ArithmeticOp::divide:
                    if (rhs->num() == 0)
                        return std::nullopt;
                    return *lhs / *rhs;
                }
            }
            catch (const std::overflow_error &) {
            }
            return std::nullopt;
        }

        auto from_bool(bool b) -> TriBool { return b ? TriBool::true_ : TriBool::false_; }

        auto evaluate_condition(const ExprNode & e, const InvariantMap & values) -> TriBool
        {
            return std::visit(
                [&](const auto & n) -> TriBool {
                    using N = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<N, ExprNode::BoolLiteral>)
                        return from_bool(n.value);
                    else if constexpr (std::is_same_v<N, ExprNode::Atom>) {
                        auto b = lookup(values, n.invariant).boolean();
                        return b ? from_bool(*b) : TriBool::unknown;
                    }
                    else if constexpr (std::is_same_v<N, ExprNode::Not>)
                        return tri_not(evaluate_condition(*n.operand, values));
                    else if constexpr (std::is_same_v<N, ExprNode::Logic>) {
                        auto lhs = evaluate_condition(*n.lhs, values);
                        auto rhs = evaluate_condition(*n.rhs, values);
                        return n.op == LogicOp::conjunction ? tri_and(lhs, rhs) : tri_or(lhs, rhs);
                    }
                    else if constexpr (std::is_same_v<N, ExprNode::Comparison>) {
                        if (n.lhs->is_boolean()) {
                            auto lhs = evaluate_condition(*n.lhs, values);
                            auto rhs = evaluate_condition(*n.rhs, values);
                            if (lhs == TriBool::unknown || rhs == TriBool::unknown)
                                return TriBool::unknown;
                            return from_bool((lhs == rhs) == (n.op == ComparisonOp::equal));
                        }
                        auto lhs = evaluate_number(*n.lhs, values);
                        auto rhs = evaluate_number(*n.rhs, values);
                        if (! lhs || ! rhs)
                            return TriBool::unknown;
                        switch (n.op) {
                        case ComparisonOp::less_equal: return from_bool(*lhs <= *rhs);
                        case ComparisonOp::less: return from_bool(*lhs < *rhs);
                        case ComparisonOp::equal: return from_bool(*lhs == *rhs);
                        case ComparisonOp::not_equal: return from_bool(*lhs != *rhs);
                        case ComparisonOp::greater: return from_bool(*lhs > *rhs);
                        case ComparisonOp::greater_equal: return from_bool(*lhs >= *rhs);
                        }
                        return TriBool::unknown;
                    }
                    else
                        return TriBool::unknown;
                },
                e.node);
        }
    }

    auto tribool_name(TriBool t) -> std::string_view
    {
        switch (t) {
        case TriBool::true_: return "TRUE";
        case TriBool::false_: return "FALSE";
        case TriBool::unknown: return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    auto tri_and(TriBool a, TriBool b) -> TriBool
    {
        if (a == TriBool::false_ || b == TriBool::false_)
            return TriBool::false_;
        if (a == TriBool::true_ && b == TriBool::true_)
            return TriBool::true_;
        return TriBool::unknown;
    }

    auto tri_or(TriBool a, TriBool b) -> TriBool
    {
        if (a == TriBool::true_ || b == TriBool::true_)
            return TriBool::true_;
        if (a == TriBool::false_ && b == TriBool::false_)
            return TriBool::false_;
        return TriBool::unknown;
    }

    auto tri_not(TriBool a) -> TriBool
    {
        if (a == TriBool::unknown)
            return a;
        return a == TriBool::true_ ? TriBool::false_ : TriBool::true_;
    }

    auto ExprNode::is_boolean() const -> bool
    {
        return std::visit(
            [](const auto & n) -> bool {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Atom>)
                    return invariant_info(n.invariant).boolean_valued;
                else
                    return std::is_same_v<N, BoolLiteral> || std::is_same_v<N, Comparison> || std::is_same_v<N, Not>
                        || std::is_same_v<N, Logic>;
            },
            node);
    }

    Expression::Expression(ExprPtr root) : _root(std::move(root))
    {
        if (! _root || ! _root->is_boolean())
            throw Error{ErrorCode::bad_query, "expression must be a condition"};
    }

    auto Expression::invariants() const -> std::vector<InvariantId>
    {
        std::set<InvariantId> ids;
        collect(*_root, ids);
        return {ids.begin(), ids.end()};
    }

    auto Expression::to_string() const -> std::string { return print(*_root); }

    auto parse_expression(std::string_view text) -> Expression { return Expression{Parser{text}.parse()}; }

    auto evaluate(const Expression & e, const InvariantMap & values) -> TriBool
    {
        return evaluate_condition(e.root(), values);
    }
}
