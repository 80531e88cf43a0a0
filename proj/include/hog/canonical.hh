#ifndef HOG_CANONICAL_HH
#define HOG_CANONICAL_HH

#include <hog/graph.hh>

#include <compare>
#include <optional>
#include <string>

namespace hog
{
    /// graph6 string of the canonically relabelled graph. Equal keys iff isomorphic.
    struct CanonicalKey
    {
        std::string text;

        friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
    };

    struct CanonicalForm
    {
        /// Vertex v of the input graph is vertex labelling(v) in the canonical graph.
        Permutation labelling;
        CanonicalKey key;
    };

    /// Partition refinement followed by a search over individualised vertices,
    /// keeping the lexicographically smallest graph6 string over all leaves. The
    /// search prunes with automorphisms discovered at the leaves.
    auto canonical_form(const Graph & g) -> CanonicalForm;

    inline auto canonical_key(const Graph & g) -> CanonicalKey { return canonical_form(g).key; }

    auto is_isomorphic(const Graph & g, const Graph & h) -> bool;

    /// A permutation p with permute(g, p) == h, if the graphs are isomorphic.
    auto find_isomorphism(const Graph & g, const Graph & h) -> std::optional<Permutation>;
}

#endif
