#include "half_edges.hpp"

namespace bondlab::detail {

HalfEdges::HalfEdges(const Graph & g)
{
    int n = g.order();
    base.resize(n + 1);
    adjacency.resize(n);
    for (int v = 0 ; v < n ; ++v) {
        adjacency[v] = g.neighbours(v).bits();
        base[v + 1] = base[v] + g.degree(v);
    }
    half_edges = base[n];

    std::vector<int> edge_index(static_cast<std::size_t>(n) * n, -1);
    auto edges = g.edges();
    for (std::size_t i = 0 ; i < edges.size() ; ++i)
        edge_index[edges[i].u * n + edges[i].v] = static_cast<int>(i);

    tail.resize(half_edges);
    head.resize(half_edges);
    twin.resize(half_edges);
    edge.resize(half_edges);
    succ.resize(half_edges);
    pred.resize(half_edges);
    negative.assign(half_edges, 0);

    for (int v = 0 ; v < n ; ++v) {
        int d = base[v + 1] - base[v];
        int rank = 0;
        for (int u : VertexSet(adjacency[v])) {
            int h = base[v] + rank;
            tail[h] = v;
            head[h] = u;
            twin[h] = id(u, v);
            edge[h] = v < u ? edge_index[v * n + u] : edge_index[u * n + v];
            succ[h] = base[v] + (rank + 1) % d;
            pred[h] = base[v] + (rank + d - 1) % d;
            ++rank;
        }
    }
}

void HalfEdges::set_rotation(int v, const std::vector<int> & order)
{
    int d = static_cast<int>(order.size());
    for (int i = 0 ; i < d ; ++i) {
        int h = id(v, order[i]);
        succ[h] = id(v, order[(i + 1) % d]);
        pred[h] = id(v, order[(i + d - 1) % d]);
    }
}

auto HalfEdges::count_faces() -> int
{
    return trace(nullptr);
}

// Face traversal on states (half-edge, orientation). Leaving along h with
// orientation +1 means the next half-edge at the far end is the rotation
// successor of twin(h); crossing a negative edge flips the orientation first.
// The reverse traversal of a face is the orbit of mirror states
// (twin(h), -orientation * sign(h)), so each face is counted once.
auto HalfEdges::trace(std::vector<std::vector<int>> * walks) -> int
{
    visited.assign(static_cast<std::size_t>(2 * half_edges), 0);
    int faces = 0;
    for (int start_neg = 0 ; start_neg < 2 ; ++start_neg)
        for (int start = 0 ; start < half_edges ; ++start) {
            if (visited[2 * start + start_neg])
                continue;
            ++faces;
            if (walks)
                walks->emplace_back();

            int h = start, neg = start_neg;
            do {
                visited[2 * h + neg] = 1;
                visited[2 * twin[h] + (neg ^ negative[h] ^ 1)] = 1;
                if (walks)
                    walks->back().push_back(h);
                int t = twin[h];
                neg ^= negative[h];
                h = neg ? pred[t] : succ[t];
            } while (h != start || neg != start_neg);
        }
    return faces;
}

} // namespace bondlab::detail
