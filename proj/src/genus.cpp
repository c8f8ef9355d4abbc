#include <bondlab/genus.hpp>

#include "half_edges.hpp"

#include <algorithm>

namespace bondlab {

BudgetExceeded::BudgetExceeded(std::uint64_t traces, std::optional<GenusResult> best) :
    Error(ErrorCode::BudgetExceeded, "genus search stopped after " + std::to_string(traces) + " face traces"
            + (best ? ", best genus so far " + std::to_string(best->genus) : std::string())),
    _traces(traces),
    _best(std::move(best))
{
}

auto euler_genus_lower_bound(const Graph & g) -> int
{
    int n = g.order(), e = g.size();
    auto shortest = girth(g);
    int max_faces = shortest ? 2 * e / *shortest : 1;
    return std::max(0, 2 - n + e - max_faces);
}

namespace {
    // Odometer over rotation systems, optionally fixing the global mirror
    // image by requiring the pivot's cyclic order to precede its reverse.
    class RotationOdometer {
    public:
        RotationOdometer(const Graph & g, detail::HalfEdges & he, bool mirror_reduce) :
            _he(he),
            _order(static_cast<std::size_t>(g.order()))
        {
            for (int v = 0 ; v < g.order() ; ++v) {
                _order[v] = g.neighbours(v).to_vector();
                _he.set_rotation(v, _order[v]);
                if (mirror_reduce && g.degree(v) >= 3 && (_pivot < 0 || g.degree(v) > g.degree(_pivot)))
                    _pivot = v;
            }
        }

        auto order() const -> const std::vector<std::vector<int>> & { return _order; }

        auto advance() -> bool
        {
            for (std::size_t v = 0 ; v < _order.size() ; ++v) {
                auto & o = _order[v];
                bool wrapped = o.size() < 3;
                if (! wrapped) {
                    do
                        wrapped = ! std::next_permutation(o.begin() + 1, o.end());
                    while (! wrapped && static_cast<int>(v) == _pivot
                            && ! std::lexicographical_compare(o.begin() + 1, o.end(), o.rbegin(), o.rend() - 1));
                }
                _he.set_rotation(static_cast<int>(v), o);
                if (! wrapped)
                    return true;
            }
            return false;
        }

    private:
        detail::HalfEdges & _he;
        std::vector<std::vector<int>> _order;
        int _pivot = -1;
    };

    // Non-tree edges of the BFS tree rooted at 0; tree edges stay positive.
    auto non_tree_edges(const Graph & g) -> std::vector<Edge>
    {
        std::vector<bool> reached(static_cast<std::size_t>(g.order()), false);
        std::vector<Edge> tree;
        std::vector<int> queue{0};
        reached[0] = true;
        for (std::size_t i = 0 ; i < queue.size() ; ++i)
            for (int v : g.neighbours(queue[i]))
                if (! reached[v]) {
                    reached[v] = true;
                    tree.push_back(make_edge(queue[i], v));
                    queue.push_back(v);
                }
        std::sort(tree.begin(), tree.end());
        std::vector<Edge> rest;
        for (auto e : g.edges())
            if (! std::binary_search(tree.begin(), tree.end(), e))
                rest.push_back(e);
        return rest;
    }

    class SignatureCounter {
    public:
        SignatureCounter(const Graph & g, detail::HalfEdges & he) :
            _he(he),
            _edges(non_tree_edges(g)),
            _bits(_edges.size(), 0)
        {
        }

        auto free_edges() const -> std::size_t { return _edges.size(); }

        void reset(bool first_non_orientable)
        {
            std::fill(_bits.begin(), _bits.end(), 0);
            if (first_non_orientable && ! _bits.empty())
                _bits[0] = 1;
            apply();
        }

        // Binary increment; false once every pattern has been visited.
        auto advance() -> bool
        {
            for (auto & bit : _bits) {
                bit ^= 1;
                if (bit) {
                    apply();
                    return true;
                }
            }
            apply();
            return false;
        }

        auto negative_edges() const -> std::vector<Edge>
        {
            std::vector<Edge> out;
            for (std::size_t i = 0 ; i < _edges.size() ; ++i)
                if (_bits[i])
                    out.push_back(_edges[i]);
            return out;
        }

    private:
        void apply()
        {
            for (std::size_t i = 0 ; i < _edges.size() ; ++i) {
                int h = _he.id(_edges[i].u, _edges[i].v);
                _he.negative[h] = _he.negative[_he.twin[h]] = _bits[i];
            }
        }

        detail::HalfEdges & _he;
        std::vector<Edge> _edges;
        std::vector<std::uint8_t> _bits;
    };

    void require_connected(const Graph & g)
    {
        if (! is_connected(g))
            throw Error(ErrorCode::RequiresConnected, "genus is computed for connected graphs only");
    }
}

auto min_genus(const Graph & g, SurfaceClass surface, GenusBudget budget) -> GenusResult
{
    require_connected(g);
    if (budget.max_traces < 1)
        throw Error(ErrorCode::InvalidArgument, "genus budget must allow at least one trace");

    bool orientable = surface == SurfaceClass::orientable;
    detail::HalfEdges he(g);
    SignatureCounter signatures(g, he);

    if (g.size() == 0 || (! orientable && signatures.free_edges() == 0))
        return {orientable ? 0 : 1, RotationSystem::identity(g), orientable, 0};

    int lower = euler_genus_lower_bound(g);
    int target = orientable ? (lower + 1) / 2 : std::max(1, lower);
    int n = g.order(), e = g.size();

    RotationOdometer rotations(g, he, true);
    std::optional<GenusResult> best;
    std::uint64_t traces = 0;
    do {
        signatures.reset(! orientable);
        do {
            if (traces == budget.max_traces)
                throw BudgetExceeded(traces, std::move(best));
            int euler = 2 - n + e - he.count_faces();
            ++traces;
            int genus = orientable ? euler / 2 : euler;
            if (! best || genus < best->genus)
                best = GenusResult{genus, RotationSystem(g, rotations.order(), signatures.negative_edges()), true, 0};
            if (best->genus <= target) {
                best->traces = traces;
                return *best;
            }
        } while (! orientable && signatures.advance());
    } while (rotations.advance());

    best->traces = traces;
    return *best;
}

void for_each_embedding(const Graph & g, SignatureClasses which,
        const std::function<bool (const RotationSystem &)> & visit)
{
    require_connected(g);
    detail::HalfEdges he(g);
    SignatureCounter signatures(g, he);
    if (which == SignatureClasses::non_orientable_only && signatures.free_edges() == 0)
        return;

    RotationOdometer rotations(g, he, false);
    do {
        signatures.reset(which == SignatureClasses::non_orientable_only);
        do {
            if (! visit(RotationSystem(g, rotations.order(), signatures.negative_edges())))
                return;
        } while (which != SignatureClasses::positive_only && signatures.advance());
    } while (rotations.advance());
}

} // namespace bondlab
