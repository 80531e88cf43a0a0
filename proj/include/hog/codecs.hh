#ifndef HOG_CODECS_HH
#define HOG_CODECS_HH

#include <hog/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hog
{
    struct GraphRecord;

    inline constexpr int graph6_max_order = 258047;
    inline constexpr int multicode_max_order = 255;

    /// The N(n) prefix of a graph6 string. Throws hog::Error for n outside [0, 258047].
    auto graph6_size_prefix(int n) -> std::string;

    /// One graph6 string without a trailing newline.
    auto encode_graph6(const Graph & g) -> std::string;

    /// Accepts an optional ">>graph6<<" header and a trailing newline. Errors carry the
    /// byte offset of the first offending byte.
    auto decode_graph6(std::string_view line) -> Graph;

    /// Newline-terminated graph6 lines, in order.
    auto encode_graph6_stream(std::span<const Graph> graphs) -> std::string;

    /// Blank lines are skipped. Errors carry the 1-based line number and the byte
    /// offset within the whole stream.
    auto decode_graph6_stream(std::string_view text) -> std::vector<Graph>;

    using Bytes = std::vector<std::uint8_t>;

    auto encode_multicode(std::span<const Graph> graphs) -> Bytes;
    auto decode_multicode(std::span<const std::uint8_t> bytes) -> std::vector<Graph>;

    /// Edge-text grammar: optional "n=<count>" line, then "<u> <v>" lines with
    /// 1-based labels; '#' starts a comment. Without "n=", n is the largest label.
    auto parse_edge_text(std::string_view text) -> Graph;
    auto write_edge_text(const Graph & g) -> std::string;

    /// Concatenated edge-text graphs; every "n=" line starts a new graph.
    auto encode_edge_text_stream(std::span<const Graph> graphs) -> std::string;
    auto decode_edge_text_stream(std::string_view text) -> std::vector<Graph>;

    /// Human-readable dump of a record: header, adjacency, computed invariants.
    auto write_readable(const GraphRecord & record) -> std::string;

    enum class GraphFormat
    {
        graph6,
        multicode,
        edge_text,
        readable
    };

    /// "g6"/"graph6", "mc"/"multicode", "txt"/"edge-text", "readable".
    auto parse_graph_format(std::string_view name) -> std::optional<GraphFormat>;
    auto graph_format_name(GraphFormat format) -> std::string_view;

    /// Decodes a whole file in the given format.
    /// Throws hog::Error for the readable format, which is export-only.
    auto decode_graphs(GraphFormat format, std::string_view data) -> std::vector<Graph>;
}

#endif
