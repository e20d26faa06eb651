#include <arrowlab/graph_io.hh>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace arrowlab
{
    namespace
    {
        auto split_words(string_view line) -> vector<string_view>
        {
            vector<string_view> words;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i > start)
                    words.push_back(line.substr(start, i - start));
            }
            return words;
        }

        auto parse_int(string_view word, int line_no) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
            if (ec != std::errc{} || ptr != word.data() + word.size())
                throw MalformedInput{"line " + to_string(line_no) + ": expected an integer, got '" + string{word} + "'"};
            return value;
        }
    }

    auto parse_graph_text(string_view text) -> AnyGraph
    {
        optional<char> kind;
        int n = 0;
        optional<int> root;
        vector<std::pair<int, int>> pairs;
        vector<int> pair_lines;

        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;

            if (auto hash = line.find('#'); hash != string_view::npos)
                line = line.substr(0, hash);
            auto words = split_words(line);
            if (words.empty())
                continue;

            auto expect_args = [&](std::size_t count) {
                if (words.size() != count + 1)
                    throw MalformedInput{"line " + to_string(line_no) + ": '" + string{words[0]} + "' takes " +
                        to_string(count) + " argument(s)"};
            };

            auto tag = words[0];
            if (tag == "g" || tag == "d") {
                if (kind)
                    throw MalformedInput{"line " + to_string(line_no) + ": duplicate header"};
                expect_args(1);
                kind = tag[0];
                n = parse_int(words[1], line_no);
                if (n < 0 || n > max_vertices)
                    throw MalformedInput{"line " + to_string(line_no) + ": vertex count out of range"};
            }
            else if (! kind)
                throw MalformedInput{"line " + to_string(line_no) + ": expected 'g <n>' or 'd <n>' header first"};
            else if (tag == "r") {
                if (*kind != 'd')
                    throw MalformedInput{"line " + to_string(line_no) + ": roots are only allowed on oriented graphs"};
                if (root)
                    throw MalformedInput{"line " + to_string(line_no) + ": duplicate root"};
                expect_args(1);
                root = parse_int(words[1], line_no);
                if (*root < 0 || *root >= n)
                    throw MalformedInput{"line " + to_string(line_no) + ": root out of range"};
            }
            else if ((tag == "e" && *kind == 'g') || (tag == "a" && *kind == 'd')) {
                expect_args(2);
                pairs.emplace_back(parse_int(words[1], line_no), parse_int(words[2], line_no));
                pair_lines.push_back(line_no);
            }
            else
                throw MalformedInput{"line " + to_string(line_no) + ": unexpected '" + string{tag} + "'"};
        }

        if (! kind)
            throw MalformedInput{"missing 'g <n>' or 'd <n>' header"};

        std::size_t i = 0;
        try {
            if (*kind == 'g') {
                Graph g(n);
                for (; i < pairs.size(); ++i)
                    g.add_edge(pairs[i].first, pairs[i].second);
                return g;
            }
            OrientedGraph d(n, root);
            for (; i < pairs.size(); ++i)
                d.add_arc(pairs[i].first, pairs[i].second);
            return d;
        }
        catch (const InvalidInput & e) {
            throw MalformedInput{"line " + to_string(pair_lines.at(i)) + ": " + e.what()};
        }
    }

    auto to_text(const Graph & g) -> string
    {
        string out = "g " + to_string(g.size()) + "\n";
        for (auto [u, v] : g.edges())
            out += "e " + to_string(u) + " " + to_string(v) + "\n";
        return out;
    }

    auto to_text(const OrientedGraph & d) -> string
    {
        string out = "d " + to_string(d.size()) + "\n";
        if (d.root())
            out += "r " + to_string(*d.root()) + "\n";
        for (auto [u, v] : d.arcs())
            out += "a " + to_string(u) + " " + to_string(v) + "\n";
        return out;
    }

    auto to_text(const AnyGraph & g) -> string
    {
        return std::visit([](const auto & x) { return to_text(x); }, g);
    }

    auto read_graph_file(const std::filesystem::path & path) -> AnyGraph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw MalformedInput{"cannot open '" + path.string() + "'"};
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graph_text(buffer.str());
    }

    auto read_undirected_file(const std::filesystem::path & path) -> Graph
    {
        auto g = read_graph_file(path);
        if (auto * u = std::get_if<Graph>(&g))
            return *u;
        // An oriented file is accepted as its underlying graph.
        return underlying(std::get<OrientedGraph>(g));
    }

    auto read_oriented_file(const std::filesystem::path & path) -> OrientedGraph
    {
        auto g = read_graph_file(path);
        if (auto * d = std::get_if<OrientedGraph>(&g))
            return *d;
        throw MalformedInput{"'" + path.string() + "' holds an undirected graph; an oriented graph ('d' header) is required"};
    }

    auto write_graph_file(const std::filesystem::path & path, const AnyGraph & g) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InvalidInput{"cannot write '" + path.string() + "'"};
        out << to_text(g);
    }
}
