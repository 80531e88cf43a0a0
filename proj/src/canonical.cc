#include <hog/canonical.hh>
#include <hog/codecs.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace hog
{
    namespace
    {
        // Ordered partition of the vertex set. Cells are contiguous ranges of `order`;
        // `cell_end[s]` is meaningful only when s is the start of a cell.
        struct Partition
        {
            std::vector<int> order;
            std::vector<int> cell_end;
            int cells = 0;

            auto discrete() const -> bool { return cells == static_cast<int>(order.size()); }
        };

        // A root-to-leaf branch of the search tree, plus the graph6 body it produces.
        struct Leaf
        {
            std::vector<int> path;
            std::vector<int> order;
            std::string body;
        };

        class CanonicalSearch
        {
        public:
            explicit CanonicalSearch(const Graph & g) :
                _g(g),
                _n(g.order()),
                _words((g.order() + 63) / 64),
                _bits(static_cast<std::size_t>(_n) * _words, 0),
                _count(_n, 0),
                _marked(_n, 0)
            {
                for (int u = 0; u < _n; ++u)
                    for (auto v : g.neighbours(u))
                        _bits[static_cast<std::size_t>(u) * _words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
            }

            auto run() -> CanonicalForm
            {
                Partition root;
                root.order.resize(_n);
                std::iota(root.order.begin(), root.order.end(), 0);
                std::stable_sort(root.order.begin(), root.order.end(),
                    [&](int a, int b) { return _g.degree(a) < _g.degree(b); });
                root.cell_end.assign(_n, 0);
                for (int s = 0; s < _n;) {
                    int e = s + 1;
                    while (e < _n && _g.degree(root.order[e]) == _g.degree(root.order[s]))
                        ++e;
                    root.cell_end[s] = e;
                    _marked[s] = 1;
                    ++root.cells;
                    s = e;
                }
                refine(root);

                std::vector<int> path;
                search(root, path);

                std::vector<Vertex> image(_n);
                for (int i = 0; i < _n; ++i)
                    image[_best.order[i]] = i;
                return CanonicalForm{Permutation{std::move(image)}, CanonicalKey{graph6_size_prefix(_n) + _best.body}};
            }

        private:
            auto adjacent(int u, int v) const -> bool
            {
                return (_bits[static_cast<std::size_t>(u) * _words + (v >> 6)] >> (v & 63)) & 1;
            }

            // Refine to an equitable partition. Splitters are processed in order of
            // cell position, so the result depends only on the graph and the input
            // partition, never on vertex names.
            void refine(Partition & p)
            {
                while (true) {
                    int splitter = -1;
                    for (int s = 0; s < _n; s = p.cell_end[s])
                        if (_marked[s]) {
                            splitter = s;
                            break;
                        }
                    if (splitter < 0)
                        return;
                    _marked[splitter] = 0;

                    int splitter_end = p.cell_end[splitter];
                    for (int i = splitter; i < splitter_end; ++i)
                        for (auto x : _g.neighbours(p.order[i]))
                            ++_count[x];

                    for (int s = 0; s < _n;) {
                        int e = p.cell_end[s];
                        if (e - s > 1) {
                            bool uniform = true;
                            int c0 = _count[p.order[s]];
                            for (int i = s + 1; i < e && uniform; ++i)
                                uniform = _count[p.order[i]] == c0;
                            if (! uniform) {
                                std::sort(p.order.begin() + s, p.order.begin() + e,
                                    [&](int a, int b) { return _count[a] < _count[b]; });
                                int piece = s;
                                for (int i = s + 1; i <= e; ++i)
                                    if (i == e || _count[p.order[i]] != _count[p.order[piece]]) {
                                        p.cell_end[piece] = i;
                                        _marked[piece] = 1;
                                        if (piece != s)
                                            ++p.cells;
                                        piece = i;
                                    }
                            }
                        }
                        s = e;
                    }

                    for (int i = splitter; i < splitter_end; ++i)
                        for (auto x : _g.neighbours(p.order[i]))
                            _count[x] = 0;

                    if (p.discrete()) {
                        for (int s = 0; s < _n; ++s)
                            _marked[s] = 0;
                        return;
                    }
                }
            }

            auto leaf_body(const std::vector<int> & order) const -> std::string
            {
                std::string body;
                body.reserve((static_cast<std::size_t>(_n) * (_n - 1) / 2 + 5) / 6);
                int acc = 0, used = 0;
                for (int j = 1; j < _n; ++j)
                    for (int i = 0; i < j; ++i) {
                        acc = (acc << 1) | (adjacent(order[i], order[j]) ? 1 : 0);
                        if (++used == 6) {
                            body.push_back(static_cast<char>(acc + 63));
                            acc = 0;
                            used = 0;
                        }
                    }
                if (used > 0)
                    body.push_back(static_cast<char>((acc << (6 - used)) + 63));
                return body;
            }

            // Automorphism sending the vertex at each position of `from` to the vertex
            // at the same position of `to`.
            void record_automorphism(const std::vector<int> & from, const std::vector<int> & to)
            {
                if (_automorphisms.size() >= max_automorphisms)
                    return;
                std::vector<int> gamma(_n);
                for (int i = 0; i < _n; ++i)
                    gamma[from[i]] = to[i];
                _automorphisms.push_back(std::move(gamma));
            }

            static auto common_prefix(const std::vector<int> & a, const std::vector<int> & b) -> int
            {
                std::size_t i = 0;
                while (i < a.size() && i < b.size() && a[i] == b[i])
                    ++i;
                return static_cast<int>(i);
            }

            void visit_leaf(const Partition & p, const std::vector<int> & path)
            {
                auto body = leaf_body(p.order);
                if (! _have_leaf) {
                    _have_leaf = true;
                    _first = Leaf{path, p.order, body};
                    _best = _first;
                    return;
                }

                if (body == _first.body) {
                    record_automorphism(_first.order, p.order);
                    _unwind_to = common_prefix(path, _first.path);
                    return;
                }

                if (body == _best.body) {
                    record_automorphism(_best.order, p.order);
                    _unwind_to = common_prefix(path, _best.path);
                    return;
                }

                if (body < _best.body)
                    _best = Leaf{path, p.order, std::move(body)};
            }

            auto find(std::vector<int> & parent, int x) -> int
            {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            }

            // Orbit partition of the group generated by the known automorphisms that
            // fix every vertex of `path`.
            auto stabiliser_orbits(const std::vector<int> & path) -> std::vector<int>
            {
                std::vector<int> parent(_n);
                std::iota(parent.begin(), parent.end(), 0);
                for (const auto & gamma : _automorphisms) {
                    bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return gamma[v] == v; });
                    if (! fixes)
                        continue;
                    for (int v = 0; v < _n; ++v) {
                        int a = find(parent, v), b = find(parent, gamma[v]);
                        if (a != b)
                            parent[std::max(a, b)] = std::min(a, b);
                    }
                }
                return parent;
            }

            void search(const Partition & p, std::vector<int> & path)
            {
                if (p.discrete()) {
                    visit_leaf(p, path);
                    return;
                }

                int target = 0;
                while (p.cell_end[target] - target == 1)
                    target = p.cell_end[target];
                int target_end = p.cell_end[target];

                std::vector<int> candidates(p.order.begin() + target, p.order.begin() + target_end);
                std::sort(candidates.begin(), candidates.end());

                int depth = static_cast<int>(path.size());
                std::vector<int> explored;
                std::size_t automorphisms_seen = 0;
                std::vector<int> orbits;

                for (auto v : candidates) {
                    if (! explored.empty()) {
                        if (_automorphisms.size() != automorphisms_seen || orbits.empty()) {
                            orbits = stabiliser_orbits(path);
                            automorphisms_seen = _automorphisms.size();
                        }
                        int root = find(orbits, v);
                        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return find(orbits, u) == root; }))
                            continue;
                    }
                    explored.push_back(v);

                    Partition child = p;
                    auto where = std::find(child.order.begin() + target, child.order.begin() + target_end, v);
                    std::iter_swap(child.order.begin() + target, where);
                    child.cell_end[target] = target + 1;
                    child.cell_end[target + 1] = target_end;
                    ++child.cells;
                    _marked[target] = 1;
                    _marked[target + 1] = 1;
                    refine(child);

                    path.push_back(v);
                    search(child, path);
                    path.pop_back();

                    if (_unwind_to) {
                        if (*_unwind_to < depth)
                            return;
                        _unwind_to.reset();
                    }
                }
            }

            static constexpr std::size_t max_automorphisms = 256;

            const Graph & _g;
            int _n;
            int _words;
            std::vector<std::uint64_t> _bits;
            std::vector<int> _count;
            std::vector<char> _marked;

            bool _have_leaf = false;
            Leaf _first, _best;
            std::vector<std::vector<int>> _automorphisms;
            std::optional<int> _unwind_to;
        };
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        if (g.order() == 0)
            return CanonicalForm{Permutation::identity(0), CanonicalKey{graph6_size_prefix(0)}};
        return CanonicalSearch{g}.run();
    }

    auto is_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        return canonical_form(g).key == canonical_form(h).key;
    }

    auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<Permutation>
    {
        if (g.order() != h.order() || g.size() != h.size())
            return std::nullopt;
        auto cg = canonical_form(g), ch = canonical_form(h);
        if (cg.key != ch.key)
            return std::nullopt;
        return ch.labelling.inverse().compose(cg.labelling);
    }
}
