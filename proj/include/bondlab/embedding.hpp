#pragma once

#include <bondlab/graph.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace bondlab {

enum class SurfaceClass { orientable, non_orientable };

auto to_string(SurfaceClass c) -> std::string_view;

/// Combinatorial embedding: a cyclic order of neighbours at every vertex and
/// a sign on every edge. Construction stores the data as given;
/// validate_embedding checks it.
class RotationSystem {
public:
    RotationSystem(Graph graph, std::vector<std::vector<int>> rotation, std::vector<Edge> negative_edges = {});

    /// Sorted neighbour order at every vertex, all edges positive.
    static auto identity(const Graph & graph) -> RotationSystem;

    auto graph() const -> const Graph & { return _graph; }
    auto rotation(int v) const -> const std::vector<int> & { return _rotation.at(v); }
    auto rotations() const -> const std::vector<std::vector<int>> & { return _rotation; }

    /// +1 or -1.
    auto sign(int u, int v) const -> int;
    auto negative_edges() const -> std::vector<Edge>;

    /// Reverses the rotation at v and negates every edge incident to v.
    auto flipped(int v) const -> RotationSystem;

    auto operator==(const RotationSystem &) const -> bool = default;

private:
    Graph _graph;
    std::vector<std::vector<int>> _rotation;
    std::array<Bits, max_vertices> _negative{};
};

/// Throws InvalidRotation unless each vertex's rotation is a permutation of
/// exactly its incident edges and the signature only marks edges.
auto validate_embedding(const RotationSystem & rs) -> const RotationSystem &;

struct Dart {
    int from;
    int to;

    auto operator==(const Dart &) const -> bool = default;
};

struct FaceTrace {
    /// Closed boundary walks; an edge bordering one face on both sides occurs twice in it.
    std::vector<std::vector<Dart>> faces;
    /// For every edge, in Graph::edges() order, the faces on its two sides.
    std::vector<std::array<int, 2>> edge_sides;
};

auto trace_faces(const RotationSystem & rs) -> FaceTrace;

struct EmbeddingSummary {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler_genus = 0;
    bool orientable = true;
    /// h = euler_genus / 2 when orientable, k = euler_genus otherwise.
    int genus = 0;

    auto surface() const -> SurfaceClass { return orientable ? SurfaceClass::orientable : SurfaceClass::non_orientable; }
    auto operator==(const EmbeddingSummary &) const -> bool = default;
};

auto embedding_summary(const RotationSystem & rs) -> EmbeddingSummary;
/// Same, reusing a trace already computed for `rs`.
auto embedding_summary(const RotationSystem & rs, const FaceTrace & trace) -> EmbeddingSummary;

/// True iff vertex flips can make every edge positive.
auto is_orientable_embedding(const RotationSystem & rs) -> bool;

/// Text format: "v: u1 u2 ... ud" per vertex in cyclic order, an optional
/// "signature: -(a,b) -(c,d)" line, and "#" comments.
auto parse_embedding(std::string_view text) -> RotationSystem;
auto write_embedding(const RotationSystem & rs) -> std::string;

} // namespace bondlab
