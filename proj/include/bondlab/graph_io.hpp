#pragma once

#include <bondlab/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace bondlab {

/// Decodes one graph6 line; a leading ">>graph6<<" header and trailing
/// line terminators are accepted.
auto parse_graph6(std::string_view text) -> Graph;

/// graph6 under the graph's current labelling (no canonicalisation).
auto write_graph6(const Graph & g) -> std::string;

/// Edge-list text: first line "n m", then m lines "u v".
auto parse_edge_list(std::string_view text) -> Graph;
auto write_edge_list(const Graph & g) -> std::string;

/// Picks graph6 or edge-list by the first non-blank byte (a digit means edge list).
auto parse_graph_auto(std::string_view text) -> Graph;

/// One graph per non-empty line; the header may prefix the first line.
auto read_graph6_lines(std::istream & in) -> std::vector<std::string>;

} // namespace bondlab
