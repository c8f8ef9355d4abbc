#pragma once

#include <bondlab/graph.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bondlab {

/// floor(sqrt(x)) by integer Newton iteration.
auto integer_sqrt(std::uint64_t x) -> std::uint64_t;

/// (Δ + h + 2, Δ + k + 1).
auto surface_bounds(int max_degree, int h, int k) -> std::pair<int, int>;

struct SachsBounds {
    std::optional<int> min_degree_cap_orientable;      // floor((5 + sqrt(1 + 48h)) / 2), h >= 1
    std::optional<int> min_degree_cap_non_orientable;  // floor((5 + sqrt(1 + 24k)) / 2), k >= 2; 5 when k = 1
    std::optional<int> bondage_cap_orientable;         // Δ + floor((3 + sqrt(1 + 48h)) / 2), h >= 1
    std::optional<int> bondage_cap_non_orientable;     // Δ + floor((3 + sqrt(1 + 24k)) / 2), k >= 1
};

/// Minimum-degree caps for graphs on a surface and the bondage caps they
/// give through the Hartnell-Rall bound. A supplied genus outside its regime
/// (h < 1, k < 1) throws OutOfRegime.
auto sachs_bounds(int max_degree, std::optional<int> h, std::optional<int> k) -> SachsBounds;

struct BoundSuite {
    int hr = 0;
    int degree = 0;
    std::optional<int> planar;              // min(8, Δ + 2) when h = 0
    std::optional<int> toroidal;            // Δ + 3 when h <= 1
    std::optional<int> orientable_surface;      // Δ + h + 2
    std::optional<int> nonorientable_surface;   // Δ + k + 1
    std::optional<int> sachs_orientable;
    std::optional<int> sachs_nonorientable;
    std::optional<int> improved_orientable;     // Δ + improved_constant(orientable, h)
    std::optional<int> improved_nonorientable;  // Δ + improved_constant(non-orientable, k)
    int best = 0;
};

/// Every bound that applies to g given its orientable genus h and
/// non-orientable genus k. An unknown genus (nullopt) leaves the bounds that
/// depend on it empty; the hr and degree fields are always set.
auto bound_suite(const Graph & g, std::optional<int> h, std::optional<int> k) -> BoundSuite;

/// Every populated bound of the suite, paired with its name.
auto populated_bounds(const BoundSuite & suite) -> std::vector<std::pair<const char *, int>>;

} // namespace bondlab
