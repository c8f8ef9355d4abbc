#include <bondlab/graph_io.hpp>
#include <bondlab/error.hpp>

#include <cctype>
#include <sstream>

namespace bondlab {

namespace {
    constexpr std::string_view header = ">>graph6<<";
    constexpr int bias = 63;

    auto strip(std::string_view text) -> std::string_view
    {
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        return text;
    }

    auto sextet(char c) -> int
    {
        int value = static_cast<unsigned char>(c) - bias;
        if (value < 0 || value > 63)
            throw Error(ErrorCode::ParseError, "byte " + std::to_string(static_cast<unsigned char>(c)) + " outside graph6 range");
        return value;
    }
}

auto parse_graph6(std::string_view text) -> Graph
{
    text = strip(text);
    if (text.empty())
        throw Error(ErrorCode::ParseError, "empty graph6 line");

    std::size_t pos = 0;
    int n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() < 4)
            throw Error(ErrorCode::ParseError, "truncated long-form order");
        if (static_cast<unsigned char>(text[1]) == 126)
            throw Error(ErrorCode::SizeLimit, "graph6 order beyond 258047 is far above 64");
        n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        pos = 4;
    }
    else {
        n = sextet(text[0]);
        pos = 1;
    }
    if (n == 0)
        throw Error(ErrorCode::ParseError, "graph6 encodes an empty graph");
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "graph6 order " + std::to_string(n) + " exceeds 64");

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(bytes) + " payload bytes, found "
                + std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++k) {
            int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

auto write_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + bias));
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + bias));
        out.push_back(static_cast<char>((n & 63) + bias));
    }

    int acc = 0, filled = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
    return out;
}

auto parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    long n, m;
    if (! (in >> n >> m))
        throw Error(ErrorCode::ParseError, "edge list must start with \"n m\"");
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "edge list order " + std::to_string(n) + " exceeds 64");
    if (n < 1 || m < 0)
        throw Error(ErrorCode::ParseError, "edge list header out of range");

    std::vector<std::pair<int, int>> pairs;
    for (long i = 0 ; i < m ; ++i) {
        long u, v;
        if (! (in >> u >> v))
            throw Error(ErrorCode::ParseError, "edge list ended after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest)
        throw Error(ErrorCode::ParseError, "trailing data after edge list: " + rest);
    return build_graph(static_cast<int>(n), pairs);
}

auto write_edge_list(const Graph & g) -> std::string
{
    auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto e : edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

auto parse_graph_auto(std::string_view text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "empty input");
    text.remove_prefix(first);
    if (std::isdigit(static_cast<unsigned char>(text[0])))
        return parse_edge_list(text);

    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    if (eol != std::string_view::npos && text.substr(eol).find_first_not_of(" \t\r\n") != std::string_view::npos)
        throw Error(ErrorCode::ParseError, "expected a single graph6 line");
    return parse_graph6(line);
}

auto read_graph6_lines(std::istream & in) -> std::vector<std::string>
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (lines.empty() && line.starts_with(header))
            line.erase(0, header.size());
        while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (! line.empty())
            lines.push_back(line);
    }
    return lines;
}

} // namespace bondlab
