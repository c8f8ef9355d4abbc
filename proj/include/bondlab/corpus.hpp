#pragma once

#include <bondlab/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace bondlab {

inline constexpr int max_corpus_order = 9;

/// Isomorphism-invariant code of a graph on at most 11 vertices: the largest
/// upper-triangle adjacency word over the leaves of an
/// individualisation-refinement search. Used only to deduplicate the corpus.
auto corpus_code(const Graph & g) -> std::uint64_t;

/// The graph whose upper-triangle word (column-major, first pair most significant) is `code`.
auto graph_from_code(int n, std::uint64_t code) -> Graph;

/// One representative per isomorphism class of graphs on n vertices
/// (1 <= n <= 9), optionally restricted to at most max_edges edges.
/// Ordered by edge count, then by code.
auto all_graphs(int n, std::optional<int> max_edges = std::nullopt) -> std::vector<Graph>;

/// As all_graphs, keeping only connected graphs.
auto connected_graphs(int n, std::optional<int> max_edges = std::nullopt) -> std::vector<Graph>;

} // namespace bondlab
