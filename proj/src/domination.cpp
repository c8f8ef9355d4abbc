#include <bondlab/domination.hpp>
#include <bondlab/error.hpp>

#include <array>

namespace bondlab {

auto is_dominating_set(const Graph & g, VertexSet d) -> bool
{
    if (d.bits() & ~g.all_vertices().bits())
        throw Error(ErrorCode::IndexOutOfRange, "dominating set names a vertex outside the graph");
    Bits covered = 0;
    for (int v : d)
        covered |= g.closed_neighbourhood(v).bits();
    return covered == g.all_vertices().bits();
}

namespace {
    // Branch and bound over a fixed vertex universe: pick the undominated
    // vertex whose closed neighbourhood is smallest and branch on which of
    // those vertices dominates it.
    class Solver {
    public:
        explicit Solver(const Graph & g) :
            _n(g.order())
        {
            for (int v = 0 ; v < _n ; ++v) {
                _closed[v] = g.closed_neighbourhood(v).bits();
                _reach = std::max(_reach, std::popcount(_closed[v]));
            }
        }

        auto greedy(Bits universe) const -> Bits
        {
            Bits chosen = 0, undominated = universe;
            while (undominated) {
                int best = -1, best_gain = -1;
                for (int v : VertexSet(universe)) {
                    int gain = std::popcount(_closed[v] & undominated);
                    if (gain > best_gain) {
                        best = v;
                        best_gain = gain;
                    }
                }
                chosen |= Bits{1} << best;
                undominated &= ~_closed[best];
            }
            return chosen;
        }

        // Smallest dominating set of `universe` (a union of components) with
        // fewer than `limit` vertices, if one exists.
        auto solve(Bits universe, int limit) -> std::optional<Bits>
        {
            _found.reset();
            _limit = limit;
            search(universe, 0, 0);
            return _found;
        }

    private:
        void search(Bits undominated, Bits chosen, int size)
        {
            if (! undominated) {
                _found = chosen;
                _limit = size;
                return;
            }
            int remaining = std::popcount(undominated);
            if (size + (remaining + _reach - 1) / _reach >= _limit)
                return;

            int pivot = -1, pivot_size = max_vertices + 1;
            for (int v : VertexSet(undominated)) {
                int s = std::popcount(_closed[v]);
                if (s < pivot_size) {
                    pivot = v;
                    pivot_size = s;
                }
            }
            for (int w : VertexSet(_closed[pivot])) {
                search(undominated & ~_closed[w], chosen | (Bits{1} << w), size + 1);
                if (size + 1 >= _limit)
                    return;
            }
        }

        int _n;
        int _reach = 1;
        std::array<Bits, max_vertices> _closed{};
        int _limit = 0;
        std::optional<Bits> _found;
    };
}

auto domination_number(const Graph & g) -> DominationResult
{
    Solver solver(g);
    DominationResult result;
    for (auto component : connected_components(g)) {
        Bits upper = solver.greedy(component.bits());
        Bits best = solver.solve(component.bits(), std::popcount(upper)).value_or(upper);
        result.witness = result.witness | VertexSet(best);
    }
    result.gamma = result.witness.size();
    return result;
}

auto has_dominating_set_of_size(const Graph & g, int k) -> bool
{
    if (k >= g.order())
        return true;
    Solver solver(g);
    return solver.solve(g.all_vertices().bits(), k + 1).has_value();
}

auto gamma_oracle(const Graph & g) -> int
{
    int n = g.order();
    if (n > gamma_oracle_max_order)
        throw Error(ErrorCode::SizeLimit, "gamma_oracle is limited to 20 vertices");

    std::array<Bits, max_vertices> closed{};
    for (int v = 0 ; v < n ; ++v)
        closed[v] = g.closed_neighbourhood(v).bits();
    Bits all = (Bits{1} << n) - 1;

    for (int k = 1 ; k <= n ; ++k) {
        // Gosper's hack over k-subsets of n vertices
        for (Bits s = (Bits{1} << k) - 1 ; s <= all ; ) {
            Bits covered = 0;
            for (Bits rest = s ; rest ; rest &= rest - 1)
                covered |= closed[std::countr_zero(rest)];
            if (covered == all)
                return k;
            Bits c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

} // namespace bondlab
