#include <hog/codecs.hh>
#include <hog/record.hh>

namespace hog
{
    auto write_readable(const GraphRecord & record) -> std::string
    {
        const auto & g = record.graph;
        std::string out;
        out += "Graph " + std::to_string(record.id) + ": " + record.name.value_or("(unnamed)") + "\n";
        if (record.provenance)
            out += "Notes: " + *record.provenance + "\n";
        out += "Vertices: " + std::to_string(g.order()) + "\n";
        out += "Edges: " + std::to_string(g.size()) + "\n";
        out += "Adjacency:\n";
        for (int v = 0; v < g.order(); ++v) {
            out += std::to_string(v + 1) + ": ";
            bool first = true;
            for (auto w : g.neighbours(v)) {
                if (! first)
                    out += ' ';
                out += std::to_string(w + 1);
                first = false;
            }
            out += '\n';
        }

        std::string values;
        for (const auto & info : invariant_registry()) {
            auto v = record.value(info.id);
            if (v.computed())
                values += std::string{info.display_name} + " = " + v.to_string() + "\n";
        }
        if (! values.empty())
            out += "Invariants:\n" + values;
        return out;
    }
}
