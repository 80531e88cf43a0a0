#ifndef HOG_ENUMERATE_HH
#define HOG_ENUMERATE_HH

#include <hog/graph.hh>

#include <vector>

namespace hog
{
    /// One graph per isomorphism class on n vertices, each in canonical labelling,
    /// sorted by canonical key. Built by vertex augmentation with canonical-key
    /// deduplication; practical up to n = 8.
    auto enumerate_graph_classes(int n) -> std::vector<Graph>;
}

#endif
