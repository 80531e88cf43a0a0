#include "oracles.hh"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace oracle
{
    auto masks(const hog::Graph & g) -> Masks
    {
        Masks a(g.order(), 0);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                if (g.adjacent(u, v))
                    a[u] |= 1U << v;
        return a;
    }

    namespace
    {
        auto pairs(int n) -> std::vector<std::pair<int, int>>
        {
            std::vector<std::pair<int, int>> p;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    p.emplace_back(i, j);
            return p;
        }

        auto to_masks(int n, std::uint32_t bits, const std::vector<std::pair<int, int>> & p) -> Masks
        {
            Masks a(n, 0);
            for (std::size_t e = 0; e < p.size(); ++e)
                if (bits >> e & 1) {
                    a[p[e].first] |= 1U << p[e].second;
                    a[p[e].second] |= 1U << p[e].first;
                }
            return a;
        }
    }

    auto class_count(int n, bool connected_only) -> long
    {
        auto p = pairs(n);
        std::map<std::pair<int, int>, int> index;
        for (std::size_t e = 0; e < p.size(); ++e)
            index[p[e]] = static_cast<int>(e);

        std::vector<std::vector<int>> perms;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::uint32_t total = 1U << p.size();
        std::vector<char> seen(total, 0);
        long classes = 0;
        for (std::uint32_t bits = 0; bits < total; ++bits) {
            if (seen[bits])
                continue;
            if (! connected_only || components(to_masks(n, bits, p)) == 1)
                ++classes;
            for (const auto & q : perms) {
                std::uint32_t image = 0;
                for (std::size_t e = 0; e < p.size(); ++e)
                    if (bits >> e & 1) {
                        int a = q[p[e].first], b = q[p[e].second];
                        image |= 1U << index[{std::min(a, b), std::max(a, b)}];
                    }
                seen[image] = 1;
            }
        }
        return classes;
    }

    auto isomorphic(const hog::Graph & g, const hog::Graph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        auto a = masks(g), b = masks(h);
        int n = g.order();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v)
                    ok = ((a[u] >> v) & 1) == ((b[perm[u]] >> perm[v]) & 1);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    namespace
    {
        auto independent(const Masks & a, std::uint32_t s) -> bool
        {
            for (std::size_t v = 0; v < a.size(); ++v)
                if ((s >> v & 1) && (a[v] & s))
                    return false;
            return true;
        }

        auto clique(const Masks & a, std::uint32_t s) -> bool
        {
            for (std::size_t v = 0; v < a.size(); ++v)
                if ((s >> v & 1) && (s & ~(1U << v) & ~a[v]))
                    return false;
            return true;
        }
    }

    auto chromatic_number(const Masks & a) -> int
    {
        int n = static_cast<int>(a.size());
        std::uint32_t full = (1U << n) - 1;
        std::vector<int> best(full + 1, 1 << 20);
        best[0] = 0;
        for (std::uint32_t s = 1; s <= full; ++s) {
            // The colour class of the lowest vertex of s is some independent subset of s containing it.
            std::uint32_t low = s & -s;
            std::uint32_t rest = s & ~low;
            for (std::uint32_t t = rest;; t = (t - 1) & rest) {
                std::uint32_t cls = t | low;
                if (independent(a, cls))
                    best[s] = std::min(best[s], 1 + best[s & ~cls]);
                if (t == 0)
                    break;
            }
        }
        return best[full];
    }

    auto clique_number(const Masks & a) -> int
    {
        int best = 0;
        for (std::uint32_t s = 0; s < (1U << a.size()); ++s)
            if (clique(a, s))
                best = std::max(best, std::popcount(s));
        return best;
    }

    auto independence_number(const Masks & a) -> int
    {
        int best = 0;
        for (std::uint32_t s = 0; s < (1U << a.size()); ++s)
            if (independent(a, s))
                best = std::max(best, std::popcount(s));
        return best;
    }

    auto matching_number(const Masks & a) -> int
    {
        std::map<std::uint32_t, int> memo;
        auto solve = [&](auto & self, std::uint32_t s) -> int {
            if (s == 0)
                return 0;
            if (auto it = memo.find(s); it != memo.end())
                return it->second;
            int v = std::countr_zero(s);
            std::uint32_t without = s & ~(1U << v);
            int best = self(self, without);
            for (std::uint32_t nb = a[v] & without; nb; nb &= nb - 1) {
                int u = std::countr_zero(nb);
                best = std::max(best, 1 + self(self, without & ~(1U << u)));
            }
            return memo[s] = best;
        };
        return solve(solve, (1U << a.size()) - 1);
    }

    namespace
    {
        auto floyd(const Masks & a) -> std::vector<std::vector<int>>
        {
            int n = static_cast<int>(a.size());
            constexpr int inf = 1 << 20;
            std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
            for (int u = 0; u < n; ++u) {
                d[u][u] = 0;
                for (int v = 0; v < n; ++v)
                    if (a[u] >> v & 1)
                        d[u][v] = 1;
            }
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            return d;
        }
    }

    // An edge uv lies on a shortest cycle of length d(u, v) + 1 in G - uv.
    auto girth(const Masks & a) -> std::optional<int>
    {
        std::optional<int> best;
        int n = static_cast<int>(a.size());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (! (a[u] >> v & 1))
                    continue;
                auto b = a;
                b[u] &= ~(1U << v);
                b[v] &= ~(1U << u);
                int d = floyd(b)[u][v];
                if (d < (1 << 20) && (! best || d + 1 < *best))
                    best = d + 1;
            }
        return best;
    }

    auto diameter_radius(const Masks & a) -> std::optional<std::pair<int, int>>
    {
        if (a.empty())
            return std::nullopt;
        auto d = floyd(a);
        int diameter = 0, radius = 1 << 20;
        for (const auto & row : d) {
            int ecc = *std::max_element(row.begin(), row.end());
            if (ecc >= (1 << 20))
                return std::nullopt;
            diameter = std::max(diameter, ecc);
            radius = std::min(radius, ecc);
        }
        return std::pair{diameter, radius};
    }

    auto components(const Masks & a) -> int
    {
        int n = static_cast<int>(a.size());
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x];
            return x;
        };
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (a[u] >> v & 1)
                    parent[find(u)] = find(v);
        int count = 0;
        for (int v = 0; v < n; ++v)
            count += find(v) == v;
        return count;
    }

    auto bipartite(const Masks & a) -> bool
    {
        for (std::uint32_t side = 0; side < (1U << a.size()); ++side)
            if (independent(a, side) && independent(a, ((1U << a.size()) - 1) & ~side))
                return true;
        return a.empty();
    }

    auto triangle_free(const Masks & a) -> bool
    {
        int n = static_cast<int>(a.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if ((a[i] >> j & 1) && (a[j] >> k & 1) && (a[i] >> k & 1))
                        return false;
        return true;
    }

    auto value(const hog::Graph & g, hog::InvariantId id) -> hog::InvariantValue
    {
        using hog::InvariantId;
        using hog::InvariantValue;
        auto a = masks(g);
        int n = static_cast<int>(a.size());
        std::vector<int> deg(n);
        long twice_m = 0;
        for (int v = 0; v < n; ++v) {
            deg[v] = std::popcount(a[v]);
            twice_m += deg[v];
        }
        auto undefined_if_empty = [&](auto make) { return n == 0 ? InvariantValue::undefined() : make(); };

        switch (id) {
        case InvariantId::n: return InvariantValue::of(n);
        case InvariantId::m: return InvariantValue::of(static_cast<int>(twice_m / 2));
        case InvariantId::mindeg:
            return undefined_if_empty([&] { return InvariantValue::of(*std::min_element(deg.begin(), deg.end())); });
        case InvariantId::maxdeg:
            return undefined_if_empty([&] { return InvariantValue::of(*std::max_element(deg.begin(), deg.end())); });
        case InvariantId::avgdeg:
            return undefined_if_empty([&] { return InvariantValue::of(hog::Rational{twice_m, n}); });
        case InvariantId::regular:
            return undefined_if_empty(
                [&] { return InvariantValue::of(std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; })); });
        case InvariantId::bipartite: return InvariantValue::of(bipartite(a));
        case InvariantId::connected:
            return undefined_if_empty([&] { return InvariantValue::of(components(a) == 1); });
        case InvariantId::components: return InvariantValue::of(components(a));
        case InvariantId::girth: {
            auto gi = girth(a);
            return gi ? InvariantValue::of(*gi) : InvariantValue::undefined();
        }
        case InvariantId::diameter: {
            auto dr = diameter_radius(a);
            return dr ? InvariantValue::of(dr->first) : InvariantValue::undefined();
        }
        case InvariantId::radius: {
            auto dr = diameter_radius(a);
            return dr ? InvariantValue::of(dr->second) : InvariantValue::undefined();
        }
        case InvariantId::chi: return InvariantValue::of(chromatic_number(a));
        case InvariantId::omega: return InvariantValue::of(clique_number(a));
        case InvariantId::alpha: return InvariantValue::of(independence_number(a));
        case InvariantId::mu: return InvariantValue::of(matching_number(a));
        case InvariantId::triangle_free: return InvariantValue::of(triangle_free(a));
        }
        return InvariantValue::unknown();
    }

    auto set_cover_optimum(const std::vector<hog::Conglomerate> & cs) -> std::size_t
    {
        std::set<hog::RecordId> universe;
        for (const auto & c : cs)
            universe.insert(c.members.begin(), c.members.end());
        std::vector<hog::RecordId> ids(universe.begin(), universe.end());
        std::size_t best = ids.size();
        for (std::uint32_t s = 0; s < (1U << ids.size()); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) >= best)
                continue;
            bool ok = std::all_of(cs.begin(), cs.end(), [&](const hog::Conglomerate & c) {
                return std::any_of(c.members.begin(), c.members.end(), [&](hog::RecordId id) {
                    auto pos = std::lower_bound(ids.begin(), ids.end(), id) - ids.begin();
                    return (s >> pos) & 1;
                });
            });
            if (ok)
                best = static_cast<std::size_t>(std::popcount(s));
        }
        return best;
    }

    auto harmonic(int k) -> double
    {
        double h = 0;
        for (int i = 1; i <= k; ++i)
            h += 1.0 / i;
        return h;
    }
}
