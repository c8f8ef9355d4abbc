#include <bondlab/graph.hpp>
#include <bondlab/error.hpp>

#include <algorithm>
#include <deque>
#include <functional>

namespace bondlab {

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices)
        insert(v);
}

auto VertexSet::to_vector() const -> std::vector<int>
{
    return {begin(), end()};
}

auto make_edge(int a, int b) -> Edge
{
    if (a == b)
        throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) :
    _n(n)
{
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "graph order " + std::to_string(n) + " exceeds 64");
    if (n < 1)
        throw Error(ErrorCode::SizeLimit, "graph order must be at least 1");
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= _n)
        throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(_n - 1));
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (int v = 0 ; v < _n ; ++v)
        twice += std::popcount(_adj[v]);
    return twice / 2;
}

auto Graph::adjacent(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return (_adj[u] >> v) & 1U;
}

auto Graph::neighbours(int v) const -> VertexSet
{
    check_vertex(v);
    return VertexSet(_adj[v]);
}

auto Graph::closed_neighbourhood(int v) const -> VertexSet
{
    check_vertex(v);
    return VertexSet(_adj[v] | (Bits{1} << v));
}

auto Graph::degree(int v) const -> int
{
    check_vertex(v);
    return std::popcount(_adj[v]);
}

auto Graph::all_vertices() const -> VertexSet
{
    return VertexSet(_n == 64 ? ~Bits{0} : (Bits{1} << _n) - 1);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v : VertexSet(_adj[u] & ~((Bits{2} << u) - 1)))
            result.push_back({u, v});
    return result;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    _adj[u] |= Bits{1} << v;
    _adj[v] |= Bits{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    if (! adjacent(u, v))
        throw Error(ErrorCode::EdgeNotFound,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    _adj[u] &= ~(Bits{1} << v);
    _adj[v] &= ~(Bits{1} << u);
}

void Graph::set_labels(std::vector<std::string> labels)
{
    if (static_cast<int>(labels.size()) != _n)
        throw Error(ErrorCode::InvalidArgument, "label count does not match graph order");
    _labels = std::move(labels);
}

auto Graph::operator==(const Graph & other) const -> bool
{
    return _n == other._n && std::equal(_adj.begin(), _adj.begin() + _n, other._adj.begin());
}

auto build_graph(int n, std::span<const std::pair<int, int>> pairs) -> Graph
{
    Graph g(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(ErrorCode::IndexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") outside 0.." + std::to_string(n - 1));
        if (a == b)
            throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(a));
        g.add_edge(a, b);
    }
    return g;
}

auto build_graph(int n, std::initializer_list<std::pair<int, int>> pairs) -> Graph
{
    return build_graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

auto degree_stats(const Graph & g) -> DegreeStats
{
    DegreeStats stats;
    for (int v = 0 ; v < g.order() ; ++v)
        stats.sequence.push_back(g.degree(v));
    std::sort(stats.sequence.begin(), stats.sequence.end(), std::greater<>());
    stats.max_degree = stats.sequence.front();
    stats.min_degree = stats.sequence.back();
    return stats;
}

auto common_neighbours(const Graph & g, int u, int v) -> VertexSet
{
    if (u == v)
        throw Error(ErrorCode::InvalidArgument, "common_neighbours needs distinct vertices");
    return g.neighbours(u) & g.neighbours(v);
}

auto remove_edges(const Graph & g, std::span<const Edge> removed) -> Graph
{
    Graph result = g;
    for (auto e : removed)
        result.remove_edge(e.u, e.v);
    return result;
}

auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    Bits unseen = g.all_vertices().bits();
    while (unseen) {
        Bits component = unseen & -unseen;
        Bits frontier = component;
        while (frontier) {
            Bits next = 0;
            for (int v : VertexSet(frontier))
                next |= g.neighbours(v).bits();
            frontier = next & ~component;
            component |= next;
        }
        result.emplace_back(component);
        unseen &= ~component;
    }
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() == 1;
}

auto induced_subgraph(const Graph & g, VertexSet vertices) -> Graph
{
    auto keep = vertices.to_vector();
    std::array<int, max_vertices> index{};
    for (std::size_t i = 0 ; i < keep.size() ; ++i)
        index[keep[i]] = static_cast<int>(i);

    Graph result(static_cast<int>(keep.size()));
    for (int u : keep)
        for (int v : g.neighbours(u) & vertices)
            if (u < v)
                result.add_edge(index[u], index[v]);
    return result;
}

auto girth(const Graph & g) -> std::optional<int>
{
    std::optional<int> best;
    std::array<int, max_vertices> dist{}, parent{};
    for (int root = 0 ; root < g.order() ; ++root) {
        dist.fill(-1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbours(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
                else if (parent[u] != v) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (! best || cycle < *best)
                        best = cycle;
                }
            }
        }
    }
    return best;
}

} // namespace bondlab
