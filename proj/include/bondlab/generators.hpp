#pragma once

#include <bondlab/graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bondlab {

enum class Family {
    path,              // (n)       P_n, n >= 1
    cycle,             // (n)       C_n, n >= 3
    complete,          // (n)       K_n, n >= 1
    complete_bipartite,// (a, b)    K_{a,b}, a, b >= 1
    star,              // (k)       K_{1,k}, centre 0
    wheel,             // (n)       hub 0 joined to a rim cycle 1..n, n >= 3
    rook,              // (n)       K_n x K_n, vertex (i, j) -> i*n + j
    hypercube,         // (d)       Q_d, 0 <= d <= 6
    gnp,               // (n, a, b) each slot kept with probability a/b
    petersen,          // ()
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
    std::uint64_t seed = 0;
};

auto family_name(Family f) -> std::string_view;
auto parse_family(std::string_view name) -> Family;

/// Deterministic 64-bit stream (splitmix64).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}

    auto next() -> std::uint64_t;
    /// Uniform-ish draw in [0, bound) by reduction modulo bound.
    auto below(std::uint64_t bound) -> std::uint64_t { return next() % bound; }

private:
    std::uint64_t _state;
};

auto generate(const FamilySpec & spec) -> Graph;

} // namespace bondlab
