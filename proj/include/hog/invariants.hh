#ifndef HOG_INVARIANTS_HH
#define HOG_INVARIANTS_HH

#include <hog/graph.hh>
#include <hog/rational.hh>

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hog
{
    enum class InvariantId
    {
        n,
        m,
        mindeg,
        maxdeg,
        avgdeg,
        regular,
        bipartite,
        connected,
        components,
        girth,
        diameter,
        radius,
        chi,
        omega,
        alpha,
        mu,
        triangle_free
    };

    enum class CostClass
    {
        poly,
        exp
    };

    struct InvariantInfo
    {
        InvariantId id;
        std::string_view short_name;
        std::string_view display_name;
        CostClass cost;
        bool boolean_valued;
    };

    /// The closed registry, in InvariantId order.
    auto invariant_registry() -> std::span<const InvariantInfo>;
    auto invariant_info(InvariantId id) -> const InvariantInfo &;
    auto find_invariant(std::string_view short_name) -> std::optional<InvariantId>;
    inline auto short_name(InvariantId id) -> std::string_view { return invariant_info(id).short_name; }

    enum class ValueStatus
    {
        pending,
        computed,
        unknown
    };

    enum class ValueKind
    {
        rational,
        boolean,
        undefined
    };

    auto value_status_name(ValueStatus status) -> std::string_view;

    /// A value is present only when the status is computed. Undefined (the girth of a
    /// forest) is a computed outcome; unknown means the solver ran out of budget.
    class InvariantValue
    {
    public:
        InvariantValue() = default;

        static auto pending() -> InvariantValue { return InvariantValue{ValueStatus::pending}; }
        static auto unknown() -> InvariantValue { return InvariantValue{ValueStatus::unknown}; }
        static auto undefined() -> InvariantValue;
        static auto of(Rational value) -> InvariantValue;
        static auto of(bool value) -> InvariantValue;
        static auto of(int value) -> InvariantValue { return of(Rational{value}); }

        auto status() const noexcept -> ValueStatus { return _status; }
        auto computed() const noexcept -> bool { return _status == ValueStatus::computed; }
        auto kind() const noexcept -> std::optional<ValueKind>;
        auto rational() const noexcept -> std::optional<Rational>;
        auto boolean() const noexcept -> std::optional<bool>;
        auto is_undefined() const noexcept -> bool;

        /// "3", "4/3", "true", "undefined", "pending", "unknown".
        auto to_string() const -> std::string;

        friend auto operator==(const InvariantValue &, const InvariantValue &) -> bool = default;

    private:
        explicit InvariantValue(ValueStatus status) : _status(status) {}

        ValueStatus _status = ValueStatus::pending;
        ValueKind _kind = ValueKind::undefined;
        Rational _rational;
        bool _boolean = false;
    };

    using InvariantMap = std::map<InvariantId, InvariantValue>;

    using Budget = std::chrono::nanoseconds;

    inline constexpr Budget default_exp_budget = std::chrono::seconds{60};

    /// Thrown from inside a solver when its deadline passes.
    struct BudgetExceeded
    {
    };

    /// Wall-clock deadline polled by the exponential solvers. Polls are amortised,
    /// a solver notices expiry within a few thousand search nodes.
    class Deadline
    {
    public:
        explicit Deadline(Budget budget);
        static auto unlimited() -> Deadline;

        /// Throws BudgetExceeded once the deadline has passed.
        void poll();
        auto expired() const -> bool;

    private:
        Deadline() = default;

        std::optional<std::chrono::steady_clock::time_point> _at;
        unsigned _ticks = 0;
    };

    /// Exact value of one invariant; unknown when the budget runs out first. The budget
    /// applies to the exponential cost class only.
    auto compute(const Graph & g, InvariantId id, Budget budget = default_exp_budget) -> InvariantValue;

    /// Throws hog::Error (bad_query) for a name outside the registry.
    auto compute(const Graph & g, std::string_view short_name, Budget budget = default_exp_budget) -> InvariantValue;

    struct DegreeStats
    {
        int mindeg;
        int maxdeg;
        Rational avgdeg;
        bool regular;
    };

    /// nullopt for the empty graph.
    auto degree_stats(const Graph & g) -> std::optional<DegreeStats>;

    /// nullopt when acyclic.
    auto girth(const Graph & g) -> std::optional<int>;

    struct Eccentricities
    {
        int diameter;
        int radius;
    };

    /// nullopt when disconnected or empty.
    auto diameter_radius(const Graph & g) -> std::optional<Eccentricities>;

    struct Connectivity
    {
        bool connected;
        int components;
    };

    auto connectivity_stats(const Graph & g) -> Connectivity;
    auto bipartite(const Graph & g) -> bool;
    auto triangle_free(const Graph & g) -> bool;

    /// Exact, throws BudgetExceeded through the deadline.
    auto chromatic_number(const Graph & g, Deadline & deadline) -> int;
    auto clique_number(const Graph & g, Deadline & deadline) -> int;
    auto independence_number(const Graph & g, Deadline & deadline) -> int;
    auto matching_number(const Graph & g, Deadline & deadline) -> int;

    auto chromatic_number(const Graph & g, Budget budget) -> InvariantValue;
    auto clique_number(const Graph & g, Budget budget) -> InvariantValue;
    auto independence_number(const Graph & g, Budget budget) -> InvariantValue;
    auto matching_number(const Graph & g, Budget budget) -> InvariantValue;

    /// Parses "60s", "250ms", "1us", "500ns", "2m", "1h"; a bare number means seconds.
    auto parse_budget(std::string_view text) -> std::optional<Budget>;
}

#endif
