#include <hog/codecs.hh>
#include <hog/error.hh>

#include <algorithm>
#include <charconv>
#include <string>

namespace hog
{
    namespace
    {
        constexpr std::string_view graph6_header = ">>graph6<<";

        auto edge_bytes(std::size_t n) -> std::size_t
        {
            return (n * (n > 0 ? n - 1 : 0) / 2 + 5) / 6;
        }

        auto strip_newline(std::string_view line) -> std::string_view
        {
            if (! line.empty() && line.back() == '\n')
                line.remove_suffix(1);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            return line;
        }
    }

    auto graph6_size_prefix(int n) -> std::string
    {
        if (n < 0 || n > graph6_max_order)
            throw format_error("graph6 supports 0 to " + std::to_string(graph6_max_order) + " vertices, got "
                + std::to_string(n));
        if (n <= 62)
            return std::string(1, static_cast<char>(n + 63));
        std::string result(1, static_cast<char>(126));
        result.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        result.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        result.push_back(static_cast<char>((n & 63) + 63));
        return result;
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        int n = g.order();
        std::string result = graph6_size_prefix(n);
        result.reserve(result.size() + edge_bytes(n));
        int acc = 0, used = 0;
        for (int j = 1; j < n; ++j) {
            auto row = g.neighbours(j);
            auto it = row.begin();
            for (int i = 0; i < j; ++i) {
                while (it != row.end() && *it < i)
                    ++it;
                acc = (acc << 1) | (it != row.end() && *it == i ? 1 : 0);
                if (++used == 6) {
                    result.push_back(static_cast<char>(acc + 63));
                    acc = 0;
                    used = 0;
                }
            }
        }
        if (used > 0)
            result.push_back(static_cast<char>((acc << (6 - used)) + 63));
        return result;
    }

    auto decode_graph6(std::string_view line) -> Graph
    {
        line = strip_newline(line);
        std::size_t base = 0;
        if (line.starts_with(graph6_header)) {
            line.remove_prefix(graph6_header.size());
            base = graph6_header.size();
        }

        for (std::size_t i = 0; i < line.size(); ++i) {
            auto b = static_cast<unsigned char>(line[i]);
            if (b < 63 || b > 126)
                throw format_error("illegal graph6 byte " + std::to_string(b) + " at offset " + std::to_string(base + i),
                    base + i);
        }
        if (line.empty())
            throw format_error("empty graph6 string at offset " + std::to_string(base), base);

        std::size_t pos = 0;
        std::size_t n = 0;
        if (static_cast<unsigned char>(line[0]) < 126) {
            n = static_cast<unsigned char>(line[0]) - 63;
            pos = 1;
        }
        else {
            if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126)
                throw format_error("graph6 orders above " + std::to_string(graph6_max_order)
                        + " are not supported (offset " + std::to_string(base + 1) + ")",
                    base + 1);
            if (line.size() < 4)
                throw format_error("truncated graph6 vertex count at offset " + std::to_string(base + line.size()),
                    base + line.size());
            for (std::size_t i = 1; i < 4; ++i)
                n = (n << 6) | (static_cast<unsigned char>(line[i]) - 63);
            pos = 4;
        }

        std::size_t expected = edge_bytes(n);
        if (line.size() - pos < expected)
            throw format_error("truncated graph6 edge bits at offset " + std::to_string(base + line.size()),
                base + line.size());
        if (line.size() - pos > expected)
            throw format_error("unexpected trailing graph6 byte at offset " + std::to_string(base + pos + expected),
                base + pos + expected);

        std::size_t total_bits = n * (n > 0 ? n - 1 : 0) / 2;
        if (total_bits % 6 != 0) {
            int padding = static_cast<int>(6 - total_bits % 6);
            int last = static_cast<unsigned char>(line.back()) - 63;
            if ((last & ((1 << padding) - 1)) != 0)
                throw format_error("nonzero graph6 padding bits at offset " + std::to_string(base + line.size() - 1),
                    base + line.size() - 1);
        }

        std::vector<Edge> edges;
        std::size_t bit = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i, ++bit) {
                int byte = static_cast<unsigned char>(line[pos + bit / 6]) - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    auto encode_graph6_stream(std::span<const Graph> graphs) -> std::string
    {
        std::string result;
        for (const auto & g : graphs) {
            result += encode_graph6(g);
            result.push_back('\n');
        }
        return result;
    }

    auto decode_graph6_stream(std::string_view text) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::size_t start = 0, line_number = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_number;
            auto line = strip_newline(text.substr(start, end - start));
            if (! line.empty()) {
                try {
                    result.push_back(decode_graph6(line));
                }
                catch (const Error & e) {
                    auto offset = start + e.offset().value_or(0);
                    throw format_error("line " + std::to_string(line_number) + ": " + e.what(), offset, line_number);
                }
            }
            start = end + 1;
        }
        return result;
    }

    auto encode_multicode(std::span<const Graph> graphs) -> Bytes
    {
        Bytes result;
        for (const auto & g : graphs) {
            int n = g.order();
            if (n < 1 || n > multicode_max_order)
                throw format_error("multicode supports 1 to 255 vertices, got " + std::to_string(n));
            result.push_back(static_cast<std::uint8_t>(n));
            for (int i = 0; i + 1 < n; ++i) {
                for (auto j : g.neighbours(i))
                    if (j > i)
                        result.push_back(static_cast<std::uint8_t>(j + 1));
                result.push_back(0);
            }
        }
        return result;
    }

    auto decode_multicode(std::span<const std::uint8_t> bytes) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::size_t pos = 0;
        while (pos < bytes.size()) {
            std::size_t graph_start = pos;
            int n = bytes[pos++];
            if (n == 0)
                throw format_error("multicode vertex count 0 at offset " + std::to_string(graph_start), graph_start);

            std::vector<Edge> edges;
            std::vector<char> seen(n + 1, 0);
            for (int i = 1; i < n; ++i) {
                std::fill(seen.begin(), seen.end(), 0);
                while (true) {
                    if (pos >= bytes.size())
                        throw format_error("multicode stream truncated inside graph starting at offset "
                                + std::to_string(graph_start) + " (offset " + std::to_string(pos) + ")",
                            pos);
                    int j = bytes[pos];
                    if (j == 0) {
                        ++pos;
                        break;
                    }
                    if (j <= i || j > n)
                        throw format_error("multicode neighbour " + std::to_string(j) + " of vertex " + std::to_string(i)
                                + " out of range at offset " + std::to_string(pos),
                            pos);
                    if (seen[j])
                        throw format_error("multicode parallel edge " + std::to_string(i) + "-" + std::to_string(j)
                                + " at offset " + std::to_string(pos),
                            pos);
                    seen[j] = 1;
                    edges.emplace_back(i - 1, j - 1);
                    ++pos;
                }
            }
            result.push_back(Graph::from_edges(n, edges));
        }
        return result;
    }

    auto parse_edge_text(std::string_view text) -> Graph
    {
        auto trim = [](std::string_view s) {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        };

        auto parse_label = [](std::string_view token, std::size_t line_number) -> long long {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw format_error("line " + std::to_string(line_number) + ": malformed label '" + std::string{token} + "'",
                    std::nullopt, line_number);
            return value;
        };

        std::optional<long long> declared;
        std::vector<std::pair<long long, long long>> pairs;
        std::vector<std::size_t> pair_lines;
        bool seen_content = false;

        std::size_t start = 0, line_number = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_number;
            auto line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            start = end + 1;
            if (line.empty())
                continue;

            if (line.starts_with("n=") || line.starts_with("n =")) {
                if (seen_content)
                    throw format_error("line " + std::to_string(line_number) + ": vertex count must come first",
                        std::nullopt, line_number);
                auto value = trim(line.substr(line.find('=') + 1));
                auto n = parse_label(value, line_number);
                if (n < 0 || n > graph6_max_order)
                    throw format_error("line " + std::to_string(line_number) + ": vertex count out of range",
                        std::nullopt, line_number);
                declared = n;
                seen_content = true;
                continue;
            }
            seen_content = true;

            auto space = line.find_first_of(" \t");
            if (space == std::string_view::npos)
                throw format_error("line " + std::to_string(line_number) + ": expected '<u> <v>'", std::nullopt,
                    line_number);
            auto first = trim(line.substr(0, space));
            auto second = trim(line.substr(space + 1));
            if (second.find_first_of(" \t") != std::string_view::npos)
                throw format_error("line " + std::to_string(line_number) + ": expected exactly two labels",
                    std::nullopt, line_number);
            auto u = parse_label(first, line_number), v = parse_label(second, line_number);
            if (u < 1 || v < 1 || u > graph6_max_order || v > graph6_max_order)
                throw format_error("line " + std::to_string(line_number) + ": label out of range", std::nullopt,
                    line_number);
            if (u == v)
                throw format_error("line " + std::to_string(line_number) + ": self-loop " + std::to_string(u),
                    std::nullopt, line_number);
            pairs.emplace_back(u, v);
            pair_lines.push_back(line_number);
        }

        long long n = 0;
        if (declared)
            n = *declared;
        else
            for (auto [u, v] : pairs)
                n = std::max({n, u, v});

        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = pairs[i];
            if (u > n || v > n)
                throw format_error("line " + std::to_string(pair_lines[i]) + ": label out of range 1.." + std::to_string(n),
                    std::nullopt, pair_lines[i]);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    auto write_edge_text(const Graph & g) -> std::string
    {
        std::string result = "n=" + std::to_string(g.order()) + "\n";
        for (auto [u, v] : g.edges())
            result += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
        return result;
    }

    auto encode_edge_text_stream(std::span<const Graph> graphs) -> std::string
    {
        std::string result;
        for (const auto & g : graphs)
            result += write_edge_text(g);
        return result;
    }

    auto decode_edge_text_stream(std::string_view text) -> std::vector<Graph>
    {
        // Each "n=" line opens a new graph; text before the first one belongs to it.
        std::vector<std::size_t> starts{0};
        bool content = false;
        for (std::size_t pos = 0; pos < text.size();) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            auto first = line.find_first_not_of(" \t\r");
            if (first != std::string_view::npos && line[first] != '#') {
                auto body = line.substr(first);
                if (body.starts_with("n=") || body.starts_with("n =")) {
                    if (content)
                        starts.push_back(pos);
                }
                content = true;
            }
            pos = end + 1;
        }
        if (! content)
            return {};

        std::vector<Graph> result;
        std::size_t line_base = 0;
        for (std::size_t i = 0; i < starts.size(); ++i) {
            auto end = i + 1 < starts.size() ? starts[i + 1] : text.size();
            auto chunk = text.substr(starts[i], end - starts[i]);
            try {
                result.push_back(parse_edge_text(chunk));
            }
            catch (const Error & e) {
                auto line = line_base + e.line().value_or(0);
                throw format_error("graph " + std::to_string(i + 1) + ", " + e.what(), std::nullopt, line);
            }
            line_base += static_cast<std::size_t>(std::count(chunk.begin(), chunk.end(), '\n'));
        }
        return result;
    }

    auto parse_graph_format(std::string_view name) -> std::optional<GraphFormat>
    {
        if (name == "g6" || name == "graph6")
            return GraphFormat::graph6;
        if (name == "mc" || name == "multicode")
            return GraphFormat::multicode;
        if (name == "txt" || name == "edge-text")
            return GraphFormat::edge_text;
        if (name == "readable")
            return GraphFormat::readable;
        return std::nullopt;
    }

    auto graph_format_name(GraphFormat format) -> std::string_view
    {
        switch (format) {
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::multicode: return "multicode";
        case GraphFormat::edge_text: return "edge-text";
        case GraphFormat::readable: return "readable";
        }
        return "unknown";
    }

    auto decode_graphs(GraphFormat format, std::string_view data) -> std::vector<Graph>
    {
        switch (format) {
        case GraphFormat::graph6: return decode_graph6_stream(data);
        case GraphFormat::multicode:
            return decode_multicode(
                std::span<const std::uint8_t>{reinterpret_cast<const std::uint8_t *>(data.data()), data.size()});
        case GraphFormat::edge_text: return decode_edge_text_stream(data);
        case GraphFormat::readable: break;
        }
        throw format_error("the readable format is export-only");
    }
}
