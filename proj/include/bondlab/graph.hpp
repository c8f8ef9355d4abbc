#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bondlab {

inline constexpr int max_vertices = 64;

using Bits = std::uint64_t;

/// A set of vertex indices in 0..63, one bit per vertex.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Bits rest) : _rest(rest) {}

        auto operator*() const -> int { return std::countr_zero(_rest); }
        auto operator++() -> iterator & { _rest &= _rest - 1; return *this; }
        auto operator++(int) -> iterator { auto old = *this; ++*this; return old; }
        auto operator==(const iterator &) const -> bool = default;

    private:
        Bits _rest = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Bits bits) : _bits(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    constexpr auto bits() const -> Bits { return _bits; }
    auto size() const -> int { return std::popcount(_bits); }
    auto empty() const -> bool { return _bits == 0; }
    auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
    void insert(int v) { _bits |= Bits{1} << v; }
    void erase(int v) { _bits &= ~(Bits{1} << v); }

    auto begin() const -> iterator { return iterator(_bits); }
    auto end() const -> iterator { return iterator(0); }
    auto to_vector() const -> std::vector<int>;

    friend auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits | b._bits); }
    friend auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & b._bits); }
    auto operator==(const VertexSet &) const -> bool = default;

private:
    Bits _bits = 0;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Orders the endpoints; throws InvalidEdge for a loop.
auto make_edge(int a, int b) -> Edge;

/// Simple undirected graph on 1..64 vertices with one adjacency word per vertex.
///
/// Equality compares structure only (order and adjacency); labels are
/// informational and are not carried by graph6.
class Graph {
public:
    explicit Graph(int n);

    auto order() const -> int { return _n; }
    auto size() const -> int;

    auto adjacent(int u, int v) const -> bool;
    auto neighbours(int v) const -> VertexSet;
    auto closed_neighbourhood(int v) const -> VertexSet;
    auto degree(int v) const -> int;
    auto all_vertices() const -> VertexSet;

    /// All edges in lexicographic (u, v) order.
    auto edges() const -> std::vector<Edge>;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    auto labels() const -> const std::optional<std::vector<std::string>> & { return _labels; }
    void set_labels(std::vector<std::string> labels);

    auto operator==(const Graph & other) const -> bool;

private:
    void check_vertex(int v) const;

    int _n;
    std::array<Bits, max_vertices> _adj{};
    std::optional<std::vector<std::string>> _labels;
};

auto build_graph(int n, std::span<const std::pair<int, int>> pairs) -> Graph;
auto build_graph(int n, std::initializer_list<std::pair<int, int>> pairs) -> Graph;

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence; // non-increasing
};

auto degree_stats(const Graph & g) -> DegreeStats;

/// N(u) ∩ N(v); u and v themselves are never members.
auto common_neighbours(const Graph & g, int u, int v) -> VertexSet;

auto remove_edges(const Graph & g, std::span<const Edge> removed) -> Graph;

/// Maximal connected vertex sets, ordered by their smallest member.
auto connected_components(const Graph & g) -> std::vector<VertexSet>;

auto is_connected(const Graph & g) -> bool;

/// Subgraph induced by `vertices`, relabelled 0..k-1 in increasing index order.
auto induced_subgraph(const Graph & g, VertexSet vertices) -> Graph;

/// Length of a shortest cycle, or nullopt for a forest.
auto girth(const Graph & g) -> std::optional<int>;

} // namespace bondlab
