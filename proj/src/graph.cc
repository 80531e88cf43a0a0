#include <hog/error.hh>
#include <hog/graph.hh>

#include <stdexcept>
#include <string>

namespace hog
{
    Permutation::Permutation(std::vector<Vertex> image) : _image(std::move(image))
    {
        std::vector<char> seen(_image.size(), 0);
        for (auto v : _image) {
            if (v < 0 || static_cast<std::size_t>(v) >= _image.size() || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = 1;
        }
    }

    auto Permutation::identity(int n) -> Permutation
    {
        Permutation p;
        p._image.resize(n);
        for (int i = 0; i < n; ++i)
            p._image[i] = i;
        return p;
    }

    auto Permutation::inverse() const -> Permutation
    {
        Permutation p;
        p._image.resize(_image.size());
        for (std::size_t i = 0; i < _image.size(); ++i)
            p._image[_image[i]] = static_cast<Vertex>(i);
        return p;
    }

    auto Permutation::compose(const Permutation & other) const -> Permutation
    {
        if (other.size() != size())
            throw std::invalid_argument("permutation length mismatch");
        Permutation p;
        p._image.resize(_image.size());
        for (std::size_t i = 0; i < _image.size(); ++i)
            p._image[i] = _image[other._image[i]];
        return p;
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        if (n < 0)
            throw format_error("negative vertex count " + std::to_string(n));

        Graph g;
        g._adj.resize(n);
        for (auto [u, v] : edges) {
            auto pair_text = "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw format_error("edge " + pair_text + " has an endpoint outside [0, " + std::to_string(n) + ")");
            if (u == v)
                throw format_error("edge " + pair_text + " is a self-loop");
            g._adj[u].push_back(v);
            g._adj[v].push_back(u);
        }
        for (auto & row : g._adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            g._m += row.size();
        }
        g._m /= 2;
        return g;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        const auto & row = _adj[u].size() <= _adj[v].size() ? _adj[u] : _adj[v];
        auto other = _adj[u].size() <= _adj[v].size() ? v : u;
        return std::binary_search(row.begin(), row.end(), other);
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_m);
        for (int u = 0; u < order(); ++u)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::complement() const -> Graph
    {
        int n = order();
        Graph g;
        g._adj.resize(n);
        for (int u = 0; u < n; ++u) {
            auto it = _adj[u].begin();
            for (int v = 0; v < n; ++v) {
                while (it != _adj[u].end() && *it < v)
                    ++it;
                if (v != u && (it == _adj[u].end() || *it != v))
                    g._adj[u].push_back(v);
            }
            g._m += g._adj[u].size();
        }
        g._m /= 2;
        return g;
    }

    auto permute(const Graph & g, const Permutation & p) -> Graph
    {
        if (p.size() != g.order())
            throw std::invalid_argument("permutation length " + std::to_string(p.size()) + " does not match "
                + std::to_string(g.order()) + " vertices");
        std::vector<Edge> edges;
        edges.reserve(g.size());
        for (auto [u, v] : g.edges())
            edges.emplace_back(p(u), p(v));
        return Graph::from_edges(g.order(), edges);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + a.order(), v + a.order());
        return Graph::from_edges(a.order() + b.order(), edges);
    }

    auto complete_graph(int n) -> Graph
    {
        return Graph::from_predicate(n, [](int, int) { return true; });
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph::from_predicate(n, [](int, int) { return false; });
    }

    auto cycle_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(n, edges);
    }

    auto path_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(n, edges);
    }

    auto star_graph(int leaves) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return Graph::from_edges(leaves + 1, edges);
    }

    auto complete_bipartite_graph(int a, int b) -> Graph
    {
        return Graph::from_predicate(a + b, [a](int u, int v) { return (u < a) != (v < a); });
    }

    auto lcf_graph(std::span<const int> jumps, int repeats) -> Graph
    {
        int n = static_cast<int>(jumps.size()) * repeats;
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
            int j = ((i + jumps[i % jumps.size()]) % n + n) % n;
            edges.emplace_back(i, j);
        }
        return Graph::from_edges(n, edges);
    }
}
