#pragma once

#include <bondlab/graph.hpp>

namespace bondlab {

struct DominationResult {
    int gamma = 0;
    VertexSet witness;
};

auto is_dominating_set(const Graph & g, VertexSet d) -> bool;

/// Exact domination number by branch and bound, with a minimum dominating set.
auto domination_number(const Graph & g) -> DominationResult;

/// True iff g has a dominating set with at most k vertices.
auto has_dominating_set_of_size(const Graph & g, int k) -> bool;

inline constexpr int gamma_oracle_max_order = 20;

/// Reference γ by enumerating vertex subsets in increasing size (n <= 20).
auto gamma_oracle(const Graph & g) -> int;

} // namespace bondlab
