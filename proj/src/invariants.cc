#include <hog/error.hh>
#include <hog/invariants.hh>

#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <queue>

namespace hog
{
    namespace
    {
        constexpr std::array<InvariantInfo, 17> registry{{
            {InvariantId::n, "n", "number of vertices", CostClass::poly, false},
            {InvariantId::m, "m", "number of edges", CostClass::poly, false},
            {InvariantId::mindeg, "mindeg", "minimum degree", CostClass::poly, false},
            {InvariantId::maxdeg, "maxdeg", "maximum degree", CostClass::poly, false},
            {InvariantId::avgdeg, "avgdeg", "average degree", CostClass::poly, false},
            {InvariantId::regular, "regular", "regular", CostClass::poly, true},
            {InvariantId::bipartite, "bipartite", "bipartite", CostClass::poly, true},
            {InvariantId::connected, "connected", "connected", CostClass::poly, true},
            {InvariantId::components, "components", "number of components", CostClass::poly, false},
            {InvariantId::girth, "girth", "girth", CostClass::poly, false},
            {InvariantId::diameter, "diameter", "diameter", CostClass::poly, false},
            {InvariantId::radius, "radius", "radius", CostClass::poly, false},
            {InvariantId::chi, "chi", "chromatic number", CostClass::exp, false},
            {InvariantId::omega, "omega", "clique number", CostClass::exp, false},
            {InvariantId::alpha, "alpha", "independence number", CostClass::exp, false},
            {InvariantId::mu, "mu", "matching number", CostClass::poly, false},
            {InvariantId::triangle_free, "triangle_free", "triangle free", CostClass::poly, true},
        }};

        template <typename T_>
        auto value_or_undefined(const std::optional<T_> & v) -> InvariantValue
        {
            return v ? InvariantValue::of(*v) : InvariantValue::undefined();
        }

        auto run_budgeted(Budget budget, auto && solver) -> InvariantValue
        {
            Deadline deadline{budget};
            try {
                int value = solver(deadline);
                if (deadline.expired())
                    return InvariantValue::unknown();
                return InvariantValue::of(value);
            }
            catch (const BudgetExceeded &) {
                return InvariantValue::unknown();
            }
        }

        auto bfs_distances(const Graph & g, Vertex source, std::vector<int> & dist) -> int
        {
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<Vertex> queue;
            queue.reserve(g.order());
            dist[source] = 0;
            queue.push_back(source);
            int eccentricity = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto u = queue[head];
                eccentricity = std::max(eccentricity, dist[u]);
                for (auto w : g.neighbours(u))
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
            }
            return static_cast<int>(queue.size()) == g.order() ? eccentricity : -1;
        }
    }

    auto invariant_registry() -> std::span<const InvariantInfo> { return registry; }

    auto invariant_info(InvariantId id) -> const InvariantInfo & { return registry[static_cast<std::size_t>(id)]; }

    auto find_invariant(std::string_view name) -> std::optional<InvariantId>
    {
        for (const auto & info : registry)
            if (info.short_name == name)
                return info.id;
        return std::nullopt;
    }

    auto value_status_name(ValueStatus status) -> std::string_view
    {
        switch (status) {
        case ValueStatus::pending: return "PENDING";
        case ValueStatus::computed: return "COMPUTED";
        case ValueStatus::unknown: return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    auto InvariantValue::undefined() -> InvariantValue
    {
        InvariantValue v{ValueStatus::computed};
        v._kind = ValueKind::undefined;
        return v;
    }

    auto InvariantValue::of(Rational value) -> InvariantValue
    {
        InvariantValue v{ValueStatus::computed};
        v._kind = ValueKind::rational;
        v._rational = value;
        return v;
    }

    auto InvariantValue::of(bool value) -> InvariantValue
    {
        InvariantValue v{ValueStatus::computed};
        v._kind = ValueKind::boolean;
        v._boolean = value;
        return v;
    }

    auto InvariantValue::kind() const noexcept -> std::optional<ValueKind>
    {
        if (! computed())
            return std::nullopt;
        return _kind;
    }

    auto InvariantValue::rational() const noexcept -> std::optional<Rational>
    {
        if (computed() && _kind == ValueKind::rational)
            return _rational;
        return std::nullopt;
    }

    auto InvariantValue::boolean() const noexcept -> std::optional<bool>
    {
        if (computed() && _kind == ValueKind::boolean)
            return _boolean;
        return std::nullopt;
    }

    auto InvariantValue::is_undefined() const noexcept -> bool { return computed() && _kind == ValueKind::undefined; }

    auto InvariantValue::to_string() const -> std::string
    {
        switch (_status) {
        case ValueStatus::pending: return "pending";
        case ValueStatus::unknown: return "unknown";
        case ValueStatus::computed: break;
        }
        switch (_kind) {
        case ValueKind::rational: return _rational.to_string();
        case ValueKind::boolean: return _boolean ? "true" : "false";
        case ValueKind::undefined: break;
        }
        return "undefined";
    }

    Deadline::Deadline(Budget budget) : _at(std::chrono::steady_clock::now() + budget) {}

    auto Deadline::unlimited() -> Deadline { return Deadline{}; }

    void Deadline::poll()
    {
        if (! _at || (++_ticks & 1023) != 0)
            return;
        if (std::chrono::steady_clock::now() >= *_at)
            throw BudgetExceeded{};
    }

    auto Deadline::expired() const -> bool { return _at && std::chrono::steady_clock::now() >= *_at; }

    auto degree_stats(const Graph & g) -> std::optional<DegreeStats>
    {
        if (g.order() == 0)
            return std::nullopt;
        int lo = std::numeric_limits<int>::max(), hi = 0;
        for (int v = 0; v < g.order(); ++v) {
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        return DegreeStats{lo, hi, Rational{static_cast<std::int64_t>(2 * g.size()), g.order()}, lo == hi};
    }

    auto girth(const Graph & g) -> std::optional<int>
    {
        int n = g.order();
        int best = std::numeric_limits<int>::max();
        std::vector<int> dist(n), parent(n);
        std::vector<Vertex> queue;
        queue.reserve(n);
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            dist[s] = 0;
            parent[s] = -1;
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto u = queue[head];
                if (2 * dist[u] + 1 >= best)
                    break;
                for (auto w : g.neighbours(u)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    else if (parent[u] != w)
                        best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        if (best == std::numeric_limits<int>::max())
            return std::nullopt;
        return best;
    }

    auto diameter_radius(const Graph & g) -> std::optional<Eccentricities>
    {
        int n = g.order();
        if (n == 0)
            return std::nullopt;
        std::vector<int> dist(n);
        int diameter = 0, radius = std::numeric_limits<int>::max();
        for (int s = 0; s < n; ++s) {
            int e = bfs_distances(g, s, dist);
            if (e < 0)
                return std::nullopt;
            diameter = std::max(diameter, e);
            radius = std::min(radius, e);
        }
        return Eccentricities{diameter, radius};
    }

    auto connectivity_stats(const Graph & g) -> Connectivity
    {
        int n = g.order();
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack;
        int components = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s])
                continue;
            ++components;
            seen[s] = 1;
            stack.push_back(s);
            while (! stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                for (auto w : g.neighbours(u))
                    if (! seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return Connectivity{components == 1, components};
    }

    auto bipartite(const Graph & g) -> bool
    {
        int n = g.order();
        std::vector<int> side(n, -1);
        std::vector<Vertex> queue;
        for (int s = 0; s < n; ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto u = queue[head];
                for (auto w : g.neighbours(u)) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[u])
                        return false;
                }
            }
        }
        return true;
    }

    auto triangle_free(const Graph & g) -> bool
    {
        for (int u = 0; u < g.order(); ++u)
            for (auto v : g.neighbours(u)) {
                if (v <= u)
                    continue;
                // Sorted neighbour lists: intersect above v.
                auto a = g.neighbours(u), b = g.neighbours(v);
                auto i = a.begin(), j = b.begin();
                while (i != a.end() && j != b.end()) {
                    if (*i < *j)
                        ++i;
                    else if (*j < *i)
                        ++j;
                    else
                        return false;
                }
            }
        return true;
    }

    auto chromatic_number(const Graph & g, Budget budget) -> InvariantValue
    {
        return run_budgeted(budget, [&](Deadline & d) { return chromatic_number(g, d); });
    }

    auto clique_number(const Graph & g, Budget budget) -> InvariantValue
    {
        return run_budgeted(budget, [&](Deadline & d) { return clique_number(g, d); });
    }

    auto independence_number(const Graph & g, Budget budget) -> InvariantValue
    {
        return run_budgeted(budget, [&](Deadline & d) { return independence_number(g, d); });
    }

    auto matching_number(const Graph & g, Budget budget) -> InvariantValue
    {
        return run_budgeted(budget, [&](Deadline & d) { return matching_number(g, d); });
    }

    auto compute(const Graph & g, InvariantId id, Budget budget) -> InvariantValue
    {
        switch (id) {
        case InvariantId::n: return InvariantValue::of(g.order());
        case InvariantId::m: return InvariantValue::of(Rational{static_cast<std::int64_t>(g.size())});
        case InvariantId::mindeg: {
            auto s = degree_stats(g);
            return s ? InvariantValue::of(s->mindeg) : InvariantValue::undefined();
        }
        case InvariantId::maxdeg: {
            auto s = degree_stats(g);
            return s ? InvariantValue::of(s->maxdeg) : InvariantValue::undefined();
        }
        case InvariantId::avgdeg: {
            auto s = degree_stats(g);
            return s ? InvariantValue::of(s->avgdeg) : InvariantValue::undefined();
        }
        case InvariantId::regular: {
            auto s = degree_stats(g);
            return s ? InvariantValue::of(s->regular) : InvariantValue::undefined();
        }
        case InvariantId::bipartite: return InvariantValue::of(bipartite(g));
        case InvariantId::connected:
            if (g.order() == 0)
                return InvariantValue::undefined();
            return InvariantValue::of(connectivity_stats(g).connected);
        case InvariantId::components: return InvariantValue::of(connectivity_stats(g).components);
        case InvariantId::girth: return value_or_undefined(girth(g));
        case InvariantId::diameter: {
            auto e = diameter_radius(g);
            return e ? InvariantValue::of(e->diameter) : InvariantValue::undefined();
        }
        case InvariantId::radius: {
            auto e = diameter_radius(g);
            return e ? InvariantValue::of(e->radius) : InvariantValue::undefined();
        }
        case InvariantId::chi: return chromatic_number(g, budget);
        case InvariantId::omega: return clique_number(g, budget);
        case InvariantId::alpha: return independence_number(g, budget);
        case InvariantId::mu: {
            auto d = Deadline::unlimited();
            return InvariantValue::of(matching_number(g, d));
        }
        case InvariantId::triangle_free: return InvariantValue::of(triangle_free(g));
        }
        throw Error{ErrorCode::bad_query, "unknown invariant"};
    }

    auto compute(const Graph & g, std::string_view name, Budget budget) -> InvariantValue
    {
        auto id = find_invariant(name);
        if (! id)
            throw Error{ErrorCode::bad_query, "unknown invariant '" + std::string{name} + "'"};
        return compute(g, *id, budget);
    }

    auto parse_budget(std::string_view text) -> std::optional<Budget>
    {
        std::size_t split = 0;
        while (split < text.size() && (std::isdigit(static_cast<unsigned char>(text[split])) || text[split] == '.'))
            ++split;
        auto number = text.substr(0, split);
        auto unit = text.substr(split);
        auto value = Rational::parse(number);
        if (! value || *value <= Rational{0})
            return std::nullopt;

        std::int64_t scale = 0;
        if (unit.empty() || unit == "s")
            scale = 1'000'000'000;
        else if (unit == "ms")
            scale = 1'000'000;
        else if (unit == "us")
            scale = 1'000;
        else if (unit == "ns")
            scale = 1;
        else if (unit == "m" || unit == "min")
            scale = 60'000'000'000;
        else if (unit == "h")
            scale = 3'600'000'000'000;
        else
            return std::nullopt;

        try {
            auto ns = *value * Rational{scale};
            auto count = ns.num() / ns.den();
            if (count <= 0)
                return std::nullopt;
            return Budget{count};
        }
        catch (const std::overflow_error &) {
            return std::nullopt;
        }
    }
}
