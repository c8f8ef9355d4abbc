#pragma once

#include <bondlab/graph.hpp>

#include <optional>
#include <vector>

namespace bondlab {

struct BondageResult {
    int b = 0;
    std::vector<Edge> witness;
    int base_gamma = 0;
};

struct HrBound {
    int value = 0;
    Edge arg_edge;
};

/// min over edges uv of d(u) + d(v) - 1 - |N(u) ∩ N(v)|; ties go to the
/// lexicographically smallest edge.
auto hr_bound(const Graph & g) -> HrBound;

/// δ(G) + Δ(G) - 1.
auto degree_bound(const Graph & g) -> int;

/// Exact bondage number. Edge subsets of size 1, 2, ... up to `cap`
/// (default hr_bound) are tried in colexicographic order; the first one that
/// raises γ is the witness. Disconnected graphs take the minimum over
/// components that have edges.
auto bondage_number(const Graph & g, std::optional<int> cap = std::nullopt) -> BondageResult;

inline constexpr int bondage_oracle_max_edges = 20;

/// Reference b(G): plain subset enumeration using gamma_oracle (|E| <= 20).
auto bondage_oracle(const Graph & g) -> int;

} // namespace bondlab
