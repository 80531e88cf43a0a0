#ifndef HOG_GRAPH_HH
#define HOG_GRAPH_HH

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hog
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// A bijection on [0, n), stored as the image of each index.
    class Permutation
    {
    public:
        Permutation() = default;

        /// Throws std::invalid_argument unless image is a bijection on [0, image.size()).
        explicit Permutation(std::vector<Vertex> image);

        static auto identity(int n) -> Permutation;

        auto size() const noexcept -> int { return static_cast<int>(_image.size()); }
        auto operator()(Vertex v) const -> Vertex { return _image[v]; }
        auto image() const noexcept -> const std::vector<Vertex> & { return _image; }

        auto inverse() const -> Permutation;

        /// (this ∘ other)(v) = this(other(v)).
        auto compose(const Permutation & other) const -> Permutation;

        friend auto operator==(const Permutation &, const Permutation &) -> bool = default;

    private:
        std::vector<Vertex> _image;
    };

    /// Simple undirected graph on vertices 0..n-1. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;

        /// Duplicates collapse. Throws hog::Error (bad_format) naming the offending
        /// pair for out-of-range endpoints and self-loops.
        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        /// Builds from an adjacency bit test; adjacent(u, v) is consulted for u < v only.
        template <typename Adjacent_>
        static auto from_predicate(int n, Adjacent_ && adjacent) -> Graph
        {
            Graph g;
            g._adj.resize(n);
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (adjacent(u, v)) {
                        g._adj[u].push_back(v);
                        g._adj[v].push_back(u);
                    }
            for (auto & row : g._adj)
                std::sort(row.begin(), row.end());
            for (auto & row : g._adj)
                g._m += row.size();
            g._m /= 2;
            return g;
        }

        auto order() const noexcept -> int { return static_cast<int>(_adj.size()); }
        auto size() const noexcept -> std::size_t { return _m; }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }
        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adj[v]; }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        /// Edges (u, v) with u < v, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto complement() const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<std::vector<Vertex>> _adj;
        std::size_t _m = 0;
    };

    inline auto graph_from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        return Graph::from_edges(n, edges);
    }

    /// Vertex v of g becomes vertex p(v) of the result. Throws std::invalid_argument
    /// when p.size() != g.order().
    auto permute(const Graph & g, const Permutation & p) -> Graph;

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto complete_bipartite_graph(int a, int b) -> Graph;
    auto empty_graph(int n) -> Graph;

    /// Cubic Hamiltonian graph from LCF notation: the jumps are repeated `repeats` times
    /// around a cycle of length jumps.size() * repeats.
    auto lcf_graph(std::span<const int> jumps, int repeats) -> Graph;
}

#endif
