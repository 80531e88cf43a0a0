#include <hog/canonical.hh>
#include <hog/enumerate.hh>

#include <map>
#include <stdexcept>

namespace hog
{
    auto enumerate_graph_classes(int n) -> std::vector<Graph>
    {
        if (n < 0 || n > 10)
            throw std::invalid_argument{"enumerate_graph_classes supports 0 <= n <= 10"};

        std::vector<Graph> level{Graph{}};
        for (int k = 1; k <= n; ++k) {
            // Every graph on k vertices is some (k-1)-vertex graph plus one vertex.
            std::map<CanonicalKey, Graph> next;
            for (const auto & g : level) {
                auto base = g.edges();
                for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
                    auto edges = base;
                    for (int u = 0; u < k - 1; ++u)
                        if (mask >> u & 1)
                            edges.emplace_back(u, k - 1);
                    auto h = Graph::from_edges(k, edges);
                    auto form = canonical_form(h);
                    if (! next.contains(form.key))
                        next.emplace(form.key, permute(h, form.labelling));
                }
            }
            level.clear();
            for (auto & [key, g] : next)
                level.push_back(std::move(g));
        }
        return level;
    }
}
