#include <bondlab/bondage.hpp>
#include <bondlab/domination.hpp>
#include <bondlab/error.hpp>

#include <algorithm>

namespace bondlab {

namespace {
    void require_edges(const Graph & g)
    {
        if (g.size() == 0)
            throw Error(ErrorCode::NoEdges, "bondage is undefined for an edgeless graph");
    }

    // Colex successor of a strictly increasing index vector over [0, m).
    auto next_colex(std::vector<int> & c, int m) -> bool
    {
        int k = static_cast<int>(c.size());
        for (int j = 0 ; j < k ; ++j) {
            int ceiling = j + 1 < k ? c[j + 1] : m;
            if (c[j] + 1 < ceiling) {
                ++c[j];
                for (int i = 0 ; i < j ; ++i)
                    c[i] = i;
                return true;
            }
        }
        return false;
    }

    // Smallest colex-first edge set of size <= limit in a connected graph whose removal raises γ.
    auto search_component(const Graph & component, int gamma, int limit) -> std::optional<std::vector<Edge>>
    {
        auto edges = component.edges();
        int m = static_cast<int>(edges.size());
        for (int k = 1 ; k <= std::min(limit, m) ; ++k) {
            std::vector<int> chosen(static_cast<std::size_t>(k));
            for (int i = 0 ; i < k ; ++i)
                chosen[i] = i;
            do {
                Graph reduced = component;
                for (int i : chosen)
                    reduced.remove_edge(edges[i].u, edges[i].v);
                if (! has_dominating_set_of_size(reduced, gamma)) {
                    std::vector<Edge> witness;
                    for (int i : chosen)
                        witness.push_back(edges[i]);
                    return witness;
                }
            } while (next_colex(chosen, m));
        }
        return std::nullopt;
    }
}

auto hr_bound(const Graph & g) -> HrBound
{
    require_edges(g);
    HrBound best{max_vertices * 2, {}};
    for (auto e : g.edges()) {
        int value = g.degree(e.u) + g.degree(e.v) - 1 - common_neighbours(g, e.u, e.v).size();
        if (value < best.value)
            best = {value, e};
    }
    return best;
}

auto degree_bound(const Graph & g) -> int
{
    require_edges(g);
    auto stats = degree_stats(g);
    return stats.min_degree + stats.max_degree - 1;
}

auto bondage_number(const Graph & g, std::optional<int> cap) -> BondageResult
{
    auto hr = hr_bound(g);
    int limit = cap.value_or(hr.value);
    if (limit < 1)
        throw Error(ErrorCode::InvalidArgument, "bondage cap must be at least 1");

    BondageResult result;
    result.base_gamma = domination_number(g).gamma;

    std::optional<BondageResult> best;
    for (auto vertices : connected_components(g)) {
        if (vertices.size() < 2)
            continue;
        auto component = induced_subgraph(g, vertices);
        int gamma = domination_number(component).gamma;
        int bound = best ? std::min(limit, best->b - 1) : limit;
        auto found = search_component(component, gamma, bound);
        if (! found)
            continue;

        auto index = vertices.to_vector();
        std::vector<Edge> witness;
        for (auto e : *found)
            witness.push_back({index[e.u], index[e.v]});
        best = BondageResult{static_cast<int>(witness.size()), std::move(witness), result.base_gamma};
    }

    if (! best)
        throw Error(ErrorCode::CapTooSmall, "no edge set of size <= " + std::to_string(limit)
                + " raises the domination number (Hartnell-Rall bound is " + std::to_string(hr.value) + ")");
    return *best;
}

auto bondage_oracle(const Graph & g) -> int
{
    require_edges(g);
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m > bondage_oracle_max_edges)
        throw Error(ErrorCode::SizeLimit, "bondage_oracle is limited to 20 edges");

    int gamma = gamma_oracle(g);
    for (int k = 1 ; k <= m ; ++k)
        for (std::uint32_t s = 0 ; s < (1U << m) ; ++s) {
            if (std::popcount(s) != k)
                continue;
            Graph reduced = g;
            for (int i = 0 ; i < m ; ++i)
                if ((s >> i) & 1U)
                    reduced.remove_edge(edges[i].u, edges[i].v);
            if (gamma_oracle(reduced) > gamma)
                return k;
        }
    throw std::logic_error("removing every edge must raise the domination number");
}

} // namespace bondlab
