#include <bondlab/embedding.hpp>
#include <bondlab/error.hpp>

#include "half_edges.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace bondlab {

auto to_string(SurfaceClass c) -> std::string_view
{
    return c == SurfaceClass::orientable ? "orientable" : "non-orientable";
}

RotationSystem::RotationSystem(Graph graph, std::vector<std::vector<int>> rotation, std::vector<Edge> negative_edges) :
    _graph(std::move(graph)),
    _rotation(std::move(rotation))
{
    for (auto e : negative_edges) {
        if (e.u < 0 || e.v < 0 || e.u >= max_vertices || e.v >= max_vertices || e.u == e.v)
            throw Error(ErrorCode::InvalidRotation, "signature names an invalid edge");
        _negative[e.u] |= Bits{1} << e.v;
        _negative[e.v] |= Bits{1} << e.u;
    }
}

auto RotationSystem::identity(const Graph & graph) -> RotationSystem
{
    std::vector<std::vector<int>> rotation;
    for (int v = 0 ; v < graph.order() ; ++v)
        rotation.push_back(graph.neighbours(v).to_vector());
    return RotationSystem(graph, std::move(rotation));
}

auto RotationSystem::sign(int u, int v) const -> int
{
    return ((_negative.at(u) >> v) & 1U) ? -1 : 1;
}

auto RotationSystem::negative_edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0 ; u < max_vertices ; ++u)
        for (int v : VertexSet(_negative[u]))
            if (u < v)
                result.push_back({u, v});
    return result;
}

auto RotationSystem::flipped(int v) const -> RotationSystem
{
    auto copy = *this;
    auto & order = copy._rotation.at(v);
    std::reverse(order.begin(), order.end());
    for (int u : _graph.neighbours(v)) {
        copy._negative[v] ^= Bits{1} << u;
        copy._negative[u] ^= Bits{1} << v;
    }
    return copy;
}

auto validate_embedding(const RotationSystem & rs) -> const RotationSystem &
{
    auto & g = rs.graph();
    if (static_cast<int>(rs.rotations().size()) != g.order())
        throw Error(ErrorCode::InvalidRotation, "rotation count differs from graph order");

    for (int v = 0 ; v < g.order() ; ++v) {
        VertexSet seen;
        for (int u : rs.rotation(v)) {
            if (u < 0 || u >= g.order() || ! g.adjacent(v, u))
                throw Error(ErrorCode::InvalidRotation,
                        "rotation at " + std::to_string(v) + " lists non-incident edge to " + std::to_string(u));
            if (seen.contains(u))
                throw Error(ErrorCode::InvalidRotation,
                        "rotation at " + std::to_string(v) + " repeats edge to " + std::to_string(u));
            seen.insert(u);
        }
        if (seen != g.neighbours(v))
            throw Error(ErrorCode::InvalidRotation, "rotation at " + std::to_string(v) + " misses an incident edge");
    }
    for (auto e : rs.negative_edges())
        if (e.v >= g.order() || ! g.adjacent(e.u, e.v))
            throw Error(ErrorCode::InvalidRotation,
                    "signature marks non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    return rs;
}

namespace {
    auto load(const RotationSystem & rs) -> detail::HalfEdges
    {
        validate_embedding(rs);
        if (! is_connected(rs.graph()))
            throw Error(ErrorCode::RequiresConnected, "embeddings are traced on connected graphs only");

        detail::HalfEdges he(rs.graph());
        for (int v = 0 ; v < rs.graph().order() ; ++v)
            he.set_rotation(v, rs.rotation(v));
        for (int h = 0 ; h < he.half_edges ; ++h)
            he.negative[h] = rs.sign(he.tail[h], he.head[h]) < 0;
        return he;
    }
}

auto trace_faces(const RotationSystem & rs) -> FaceTrace
{
    auto he = load(rs);
    FaceTrace result;
    result.edge_sides.assign(static_cast<std::size_t>(rs.graph().size()), {-1, -1});

    if (he.half_edges == 0) {
        result.faces.emplace_back();
        return result;
    }

    std::vector<std::vector<int>> walks;
    he.trace(&walks);
    for (std::size_t f = 0 ; f < walks.size() ; ++f) {
        auto & face = result.faces.emplace_back();
        for (int h : walks[f]) {
            face.push_back({he.tail[h], he.head[h]});
            auto & sides = result.edge_sides[he.edge[h]];
            if (sides[0] < 0)
                sides[0] = static_cast<int>(f);
            else if (sides[1] < 0)
                sides[1] = static_cast<int>(f);
            else
                throw std::logic_error("edge traversed more than twice by face walks");
        }
    }
    return result;
}

namespace {
    // flip[v] = product of signs along the BFS tree path from vertex 0
    auto signs_reduce(const RotationSystem & rs) -> bool
    {
        auto & g = rs.graph();
        std::vector<int> flip(static_cast<std::size_t>(g.order()), 0);
        std::vector<int> queue{0};
        flip[0] = 1;
        for (std::size_t i = 0 ; i < queue.size() ; ++i) {
            int u = queue[i];
            for (int v : g.neighbours(u))
                if (! flip[v]) {
                    flip[v] = flip[u] * rs.sign(u, v);
                    queue.push_back(v);
                }
        }
        for (auto e : g.edges())
            if (rs.sign(e.u, e.v) * flip[e.u] * flip[e.v] < 0)
                return false;
        return true;
    }

    auto summarise(const RotationSystem & rs, int faces) -> EmbeddingSummary
    {
        EmbeddingSummary s;
        s.vertices = rs.graph().order();
        s.edges = rs.graph().size();
        s.faces = faces;
        s.euler_genus = 2 - s.vertices + s.edges - s.faces;
        s.orientable = signs_reduce(rs);
        s.genus = s.orientable ? s.euler_genus / 2 : s.euler_genus;
        return s;
    }
}

auto is_orientable_embedding(const RotationSystem & rs) -> bool
{
    validate_embedding(rs);
    if (! is_connected(rs.graph()))
        throw Error(ErrorCode::RequiresConnected, "orientability is decided on connected graphs only");
    return signs_reduce(rs);
}

auto embedding_summary(const RotationSystem & rs) -> EmbeddingSummary
{
    auto he = load(rs);
    return summarise(rs, he.half_edges == 0 ? 1 : he.count_faces());
}

auto embedding_summary(const RotationSystem & rs, const FaceTrace & trace) -> EmbeddingSummary
{
    return summarise(rs, static_cast<int>(trace.faces.size()));
}

namespace {
    auto parse_int(std::string_view token) -> int
    {
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size() || value < 0)
            throw Error(ErrorCode::ParseError, "expected a vertex index, found '" + std::string(token) + "'");
        return value;
    }

    auto tokens(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(text.substr(i, j - i));
            i = j;
        }
        return out;
    }
}

auto parse_embedding(std::string_view text) -> RotationSystem
{
    std::vector<std::pair<int, std::vector<int>>> lines;
    std::vector<std::pair<int, int>> negatives;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            if (! tokens(line).empty())
                throw Error(ErrorCode::ParseError, "line without ':' in embedding: " + std::string(line));
            continue;
        }

        auto key = tokens(line.substr(0, colon));
        if (key.size() != 1)
            throw Error(ErrorCode::ParseError, "malformed embedding line: " + std::string(line));
        auto rest = tokens(line.substr(colon + 1));

        if (key[0] == "signature") {
            for (auto t : rest) {
                if (t.size() < 6 || t[0] != '-' || t[1] != '(' || t.back() != ')')
                    throw Error(ErrorCode::ParseError, "signature entries look like -(a,b), found '" + std::string(t) + "'");
                auto inner = t.substr(2, t.size() - 3);
                auto comma = inner.find(',');
                if (comma == std::string_view::npos)
                    throw Error(ErrorCode::ParseError, "signature entry without comma: " + std::string(t));
                negatives.emplace_back(parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1)));
            }
            continue;
        }

        std::vector<int> order;
        for (auto t : rest)
            order.push_back(parse_int(t));
        lines.emplace_back(parse_int(key[0]), std::move(order));
    }

    int n = static_cast<int>(lines.size());
    if (n == 0)
        throw Error(ErrorCode::ParseError, "embedding lists no vertices");
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "embedding has more than 64 vertices");

    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
    std::vector<bool> declared(static_cast<std::size_t>(n), false);
    for (auto & [v, order] : lines) {
        if (v >= n)
            throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        if (declared[v])
            throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " declared twice");
        declared[v] = true;
        rotation[v] = order;
    }

    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        for (int u : rotation[v]) {
            if (u >= n)
                throw Error(ErrorCode::ParseError, "unknown vertex " + std::to_string(u) + " in rotation of " + std::to_string(v));
            if (u == v)
                throw Error(ErrorCode::ParseError, "loop at vertex " + std::to_string(v));
            if (std::count(rotation[u].begin(), rotation[u].end(), v) != 1)
                throw Error(ErrorCode::ParseError,
                        "edge (" + std::to_string(v) + "," + std::to_string(u) + ") missing from rotation of " + std::to_string(u));
            g.add_edge(u, v);
        }

    std::vector<Edge> negative_edges;
    for (auto [a, b] : negatives) {
        if (a >= n || b >= n || a == b || ! g.adjacent(a, b))
            throw Error(ErrorCode::ParseError, "signature names non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        negative_edges.push_back(make_edge(a, b));
    }

    RotationSystem rs(std::move(g), std::move(rotation), std::move(negative_edges));
    try {
        validate_embedding(rs);
    }
    catch (const Error & e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return rs;
}

auto write_embedding(const RotationSystem & rs) -> std::string
{
    std::ostringstream out;
    for (int v = 0 ; v < rs.graph().order() ; ++v) {
        out << v << ':';
        for (int u : rs.rotation(v))
            out << ' ' << u;
        out << '\n';
    }
    auto negative = rs.negative_edges();
    if (! negative.empty()) {
        out << "signature:";
        for (auto e : negative)
            out << " -(" << e.u << ',' << e.v << ')';
        out << '\n';
    }
    return out.str();
}

} // namespace bondlab
