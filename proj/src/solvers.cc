#include <hog/invariants.hh>

#include "bitset.hh"

#include <algorithm>
#include <numeric>

namespace hog
{
    namespace
    {
        using detail::Bitset;

        // Maximum clique by branch and bound, pruning with a greedy colouring of the
        // candidate set (each colour class contributes at most one clique vertex).
        class CliqueSearch
        {
        public:
            CliqueSearch(const Graph & g, Deadline & deadline) : _deadline(deadline)
            {
                int n = g.order();
                _order.resize(n);
                std::iota(_order.begin(), _order.end(), 0);
                std::stable_sort(_order.begin(), _order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
                std::vector<int> position(n);
                for (int i = 0; i < n; ++i)
                    position[_order[i]] = i;

                _adj.assign(n, Bitset{n});
                for (int u = 0; u < n; ++u)
                    for (auto v : g.neighbours(u))
                        _adj[position[u]].set(position[v]);
                _n = n;
            }

            auto run() -> int
            {
                if (_n == 0)
                    return 0;
                Bitset all{_n};
                for (int i = 0; i < _n; ++i)
                    all.set(i);
                _best = 1;
                expand(0, all);
                return _best;
            }

        private:
            void expand(int size, Bitset candidates)
            {
                _deadline.poll();

                std::vector<int> vertices, bounds;
                vertices.reserve(candidates.count());
                bounds.reserve(vertices.capacity());
                Bitset uncoloured = candidates;
                int colour = 0;
                while (! uncoloured.empty()) {
                    ++colour;
                    Bitset available = uncoloured;
                    while (! available.empty()) {
                        int v = available.first();
                        available.reset(v);
                        available.subtract(_adj[v]);
                        uncoloured.reset(v);
                        vertices.push_back(v);
                        bounds.push_back(colour);
                    }
                }

                for (int i = static_cast<int>(vertices.size()) - 1; i >= 0; --i) {
                    if (size + bounds[i] <= _best)
                        return;
                    int v = vertices[i];
                    Bitset next = candidates;
                    next.intersect_with(_adj[v]);
                    if (next.empty())
                        _best = std::max(_best, size + 1);
                    else
                        expand(size + 1, next);
                    candidates.reset(v);
                }
            }

            Deadline & _deadline;
            int _n = 0;
            int _best = 0;
            std::vector<int> _order;
            std::vector<Bitset> _adj;
        };

        // k-colourability by backtracking. Vertices are picked by saturation degree and
        // a vertex may open at most one new colour, which removes colour permutations.
        class Colouring
        {
        public:
            Colouring(const Graph & g, Deadline & deadline) : _g(g), _deadline(deadline), _n(g.order()) {}

            auto greedy_upper_bound() -> int
            {
                std::vector<int> colour(_n, -1);
                std::vector<std::vector<char>> used(_n);
                int colours = 0;
                for (int step = 0; step < _n; ++step) {
                    int pick = -1, pick_sat = -1, pick_deg = -1;
                    for (int v = 0; v < _n; ++v) {
                        if (colour[v] >= 0)
                            continue;
                        int sat = 0;
                        std::vector<char> seen(colours + 1, 0);
                        for (auto w : _g.neighbours(v))
                            if (colour[w] >= 0 && ! seen[colour[w]]) {
                                seen[colour[w]] = 1;
                                ++sat;
                            }
                        if (sat > pick_sat || (sat == pick_sat && _g.degree(v) > pick_deg)) {
                            pick = v;
                            pick_sat = sat;
                            pick_deg = _g.degree(v);
                        }
                    }
                    std::vector<char> seen(colours + 1, 0);
                    for (auto w : _g.neighbours(pick))
                        if (colour[w] >= 0)
                            seen[colour[w]] = 1;
                    int c = 0;
                    while (c < colours && seen[c])
                        ++c;
                    colour[pick] = c;
                    colours = std::max(colours, c + 1);
                }
                return colours;
            }

            auto colourable(int k) -> bool
            {
                _k = k;
                _colour.assign(_n, -1);
                _conflicts.assign(static_cast<std::size_t>(_n) * k, 0);
                _saturation.assign(_n, 0);
                return assign(0, 0);
            }

        private:
            auto conflicts(int v, int c) -> int & { return _conflicts[static_cast<std::size_t>(v) * _k + c]; }

            auto assign(int coloured, int colours_used) -> bool
            {
                if (coloured == _n)
                    return true;
                _deadline.poll();

                int pick = -1, pick_sat = -1, pick_deg = -1;
                for (int v = 0; v < _n; ++v) {
                    if (_colour[v] >= 0)
                        continue;
                    if (_saturation[v] > pick_sat || (_saturation[v] == pick_sat && _g.degree(v) > pick_deg)) {
                        pick = v;
                        pick_sat = _saturation[v];
                        pick_deg = _g.degree(v);
                    }
                }
                if (pick_sat >= _k)
                    return false;

                int limit = std::min(colours_used + 1, _k);
                for (int c = 0; c < limit; ++c) {
                    if (conflicts(pick, c) > 0)
                        continue;
                    _colour[pick] = c;
                    for (auto w : _g.neighbours(pick))
                        if (++conflicts(w, c) == 1)
                            ++_saturation[w];
                    if (assign(coloured + 1, std::max(colours_used, c + 1)))
                        return true;
                    for (auto w : _g.neighbours(pick))
                        if (--conflicts(w, c) == 0)
                            --_saturation[w];
                    _colour[pick] = -1;
                }
                return false;
            }

            const Graph & _g;
            Deadline & _deadline;
            int _n;
            int _k = 0;
            std::vector<int> _colour;
            std::vector<int> _conflicts;
            std::vector<int> _saturation;
        };

        // Edmonds' blossom algorithm, augmenting from each exposed vertex in turn.
        class Blossom
        {
        public:
            Blossom(const Graph & g, Deadline & deadline) :
                _g(g),
                _deadline(deadline),
                _n(g.order()),
                _match(_n, -1),
                _parent(_n),
                _base(_n),
                _used(_n),
                _blossom(_n)
            {
            }

            auto run() -> int
            {
                int size = 0;
                for (int v = 0; v < _n; ++v)
                    if (_match[v] < 0)
                        for (auto w : _g.neighbours(v))
                            if (_match[w] < 0) {
                                _match[v] = w;
                                _match[w] = v;
                                ++size;
                                break;
                            }
                for (int v = 0; v < _n; ++v)
                    if (_match[v] < 0) {
                        int end = find_path(v);
                        if (end < 0)
                            continue;
                        ++size;
                        while (end >= 0) {
                            int pv = _parent[end], ppv = _match[pv];
                            _match[end] = pv;
                            _match[pv] = end;
                            end = ppv;
                        }
                    }
                return size;
            }

        private:
            auto lca(int a, int b) -> int
            {
                std::vector<char> seen(_n, 0);
                while (true) {
                    a = _base[a];
                    seen[a] = 1;
                    if (_match[a] < 0)
                        break;
                    a = _parent[_match[a]];
                }
                while (true) {
                    b = _base[b];
                    if (seen[b])
                        return b;
                    b = _parent[_match[b]];
                }
            }

            void mark_path(int v, int b, int child)
            {
                while (_base[v] != b) {
                    _blossom[_base[v]] = _blossom[_base[_match[v]]] = 1;
                    _parent[v] = child;
                    child = _match[v];
                    v = _parent[_match[v]];
                }
            }

            auto find_path(int root) -> int
            {
                std::fill(_used.begin(), _used.end(), 0);
                std::fill(_parent.begin(), _parent.end(), -1);
                std::iota(_base.begin(), _base.end(), 0);
                _used[root] = 1;
                std::vector<int> queue{root};
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    _deadline.poll();
                    int v = queue[head];
                    for (auto to : _g.neighbours(v)) {
                        if (_base[v] == _base[to] || _match[v] == to)
                            continue;
                        if (to == root || (_match[to] >= 0 && _parent[_match[to]] >= 0)) {
                            int current = lca(v, to);
                            std::fill(_blossom.begin(), _blossom.end(), 0);
                            mark_path(v, current, to);
                            mark_path(to, current, v);
                            for (int i = 0; i < _n; ++i)
                                if (_blossom[_base[i]]) {
                                    _base[i] = current;
                                    if (! _used[i]) {
                                        _used[i] = 1;
                                        queue.push_back(i);
                                    }
                                }
                        }
                        else if (_parent[to] < 0) {
                            _parent[to] = v;
                            if (_match[to] < 0)
                                return to;
                            _used[_match[to]] = 1;
                            queue.push_back(_match[to]);
                        }
                    }
                }
                return -1;
            }

            const Graph & _g;
            Deadline & _deadline;
            int _n;
            std::vector<int> _match, _parent, _base;
            std::vector<char> _used, _blossom;
        };
    }

    auto clique_number(const Graph & g, Deadline & deadline) -> int
    {
        return CliqueSearch{g, deadline}.run();
    }

    auto independence_number(const Graph & g, Deadline & deadline) -> int
    {
        return CliqueSearch{g.complement(), deadline}.run();
    }

    auto chromatic_number(const Graph & g, Deadline & deadline) -> int
    {
        if (g.order() == 0)
            return 0;
        if (g.size() == 0)
            return 1;
        int lower = clique_number(g, deadline);
        Colouring colouring{g, deadline};
        int upper = colouring.greedy_upper_bound();
        for (int k = lower; k < upper; ++k)
            if (colouring.colourable(k))
                return k;
        return upper;
    }

    auto matching_number(const Graph & g, Deadline & deadline) -> int
    {
        return Blossom{g, deadline}.run();
    }
}
