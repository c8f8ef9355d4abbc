#pragma once

#include <bondlab/embedding.hpp>
#include <bondlab/error.hpp>

#include <cstdint>
#include <functional>
#include <optional>

namespace bondlab {

struct GenusBudget {
    std::uint64_t max_traces = 100'000'000;
};

struct GenusResult {
    int genus = 0;
    RotationSystem witness;
    /// False only for acyclic graphs in the non-orientable class: they sit in
    /// the projective plane but no embedding there is 2-cell, so the witness
    /// is the spherical embedding.
    bool two_cell = true;
    std::uint64_t traces = 0;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t traces, std::optional<GenusResult> best);

    auto traces() const noexcept -> std::uint64_t { return _traces; }
    /// Best embedding seen before the budget ran out, if any.
    auto best() const -> const std::optional<GenusResult> & { return _best; }

private:
    std::uint64_t _traces;
    std::optional<GenusResult> _best;
};

/// Lower bound on the Euler genus of any 2-cell embedding, from Euler's
/// formula with faces of length at least the girth.
auto euler_genus_lower_bound(const Graph & g) -> int;

/// Exhaustive minimum-genus search over rotation systems (and, for the
/// non-orientable class, signature classes with at least one negative
/// non-tree edge). Stops early once the Euler lower bound is attained.
auto min_genus(const Graph & g, SurfaceClass surface, GenusBudget budget = {}) -> GenusResult;

enum class SignatureClasses { positive_only, non_orientable_only, all };

/// Calls visit for every embedding of g up to vertex flips: every rotation
/// system times every signature on the non-tree edges of the BFS tree
/// rooted at 0. Stops when visit returns false.
void for_each_embedding(const Graph & g, SignatureClasses which,
        const std::function<bool (const RotationSystem &)> & visit);

} // namespace bondlab
