#ifndef ARROWLAB_GUARD_ARROWLAB_GRAPH_IO_HH
#define ARROWLAB_GUARD_ARROWLAB_GRAPH_IO_HH 1

#include <arrowlab/graph.hh>

#include <filesystem>
#include <string>
#include <string_view>

namespace arrowlab
{
    // Text format, 0-indexed, whitespace separated, '#' starts a comment:
    //
    //   g <n>            d <n>
    //   e <u> <v>        r <root>     (optional, at most once)
    //   ...              a <u> <v>
    //
    // The writers emit the header, the root line if any, then one line per
    // edge/arc in sorted order. Parsing writer output and writing it again is
    // byte-identical.

    [[nodiscard]] auto parse_graph_text(std::string_view text) -> AnyGraph;

    [[nodiscard]] auto to_text(const Graph & g) -> std::string;
    [[nodiscard]] auto to_text(const OrientedGraph & d) -> std::string;
    [[nodiscard]] auto to_text(const AnyGraph & g) -> std::string;

    [[nodiscard]] auto read_graph_file(const std::filesystem::path & path) -> AnyGraph;
    [[nodiscard]] auto read_undirected_file(const std::filesystem::path & path) -> Graph;
    [[nodiscard]] auto read_oriented_file(const std::filesystem::path & path) -> OrientedGraph;
    auto write_graph_file(const std::filesystem::path & path, const AnyGraph & g) -> void;
}

#endif
