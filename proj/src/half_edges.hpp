#pragma once

#include <bondlab/graph.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace bondlab::detail {

// Half-edge h at vertex v is v's link to its rank-th neighbour in index order.
// succ/pred encode the rotation; negative[h] is shared by h and twin[h].
struct HalfEdges {
    explicit HalfEdges(const Graph & g);

    auto id(int v, int u) const -> int
    {
        return base[v] + std::popcount(adjacency[v] & ((Bits{1} << u) - 1));
    }

    void set_rotation(int v, const std::vector<int> & order);

    /// Number of face orbits; fills walks and the face of each state when asked.
    auto count_faces() -> int;
    auto trace(std::vector<std::vector<int>> * walks) -> int;

    int half_edges = 0;
    std::vector<int> base, tail, head, twin, edge, succ, pred;
    std::vector<std::uint8_t> negative;
    std::vector<Bits> adjacency;
    std::vector<std::uint8_t> visited;
};

} // namespace bondlab::detail
