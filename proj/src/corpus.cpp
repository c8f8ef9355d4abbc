#include <bondlab/corpus.hpp>
#include <bondlab/error.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace bondlab {

namespace {
    using Cells = std::vector<std::vector<int>>;

    auto refine(const Graph & g, Cells cells) -> Cells
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0 ; s < cells.size() && ! changed ; ++s) {
                VertexSet splitter;
                for (int v : cells[s])
                    splitter.insert(v);

                Cells next;
                for (auto & cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::map<int, std::vector<int>> by_count;
                    for (int v : cell)
                        by_count[(g.neighbours(v) & splitter).size()].push_back(v);
                    for (auto & [count, part] : by_count)
                        next.push_back(std::move(part));
                    if (by_count.size() > 1)
                        changed = true;
                }
                cells = std::move(next);
            }
        }
        return cells;
    }

    auto leaf_code(const Graph & g, const Cells & cells) -> std::uint64_t
    {
        std::uint64_t code = 0;
        int n = static_cast<int>(cells.size());
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                code = (code << 1) | (g.adjacent(cells[i][0], cells[j][0]) ? 1U : 0U);
        return code;
    }

    void search(const Graph & g, const Cells & cells, std::uint64_t & best)
    {
        auto refined = refine(g, cells);
        if (refined.size() == static_cast<std::size_t>(g.order())) {
            best = std::max(best, leaf_code(g, refined));
            return;
        }

        std::size_t target = refined.size();
        for (std::size_t c = 0 ; c < refined.size() ; ++c)
            if (refined[c].size() > 1 && (target == refined.size() || refined[c].size() < refined[target].size()))
                target = c;

        for (int v : refined[target]) {
            Cells child;
            child.reserve(refined.size() + 1);
            child.insert(child.end(), refined.begin(), refined.begin() + target);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : refined[target])
                if (w != v)
                    rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), refined.begin() + target + 1, refined.end());
            search(g, child, best);
        }
    }
}

auto corpus_code(const Graph & g) -> std::uint64_t
{
    if (g.order() > 11)
        throw Error(ErrorCode::SizeLimit, "corpus codes cover at most 11 vertices");
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0 ; v < g.order() ; ++v)
        all[v] = v;
    std::uint64_t best = 0;
    search(g, Cells{all}, best);
    return best;
}

auto graph_from_code(int n, std::uint64_t code) -> Graph
{
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i)
            if ((code >> --bit) & 1U)
                g.add_edge(i, j);
    return g;
}

auto all_graphs(int n, std::optional<int> max_edges) -> std::vector<Graph>
{
    if (n < 1 || n > max_corpus_order)
        throw Error(ErrorCode::SizeLimit, "corpus enumeration covers 1..9 vertices");

    std::vector<Graph> level{Graph(1)};
    for (int order = 2 ; order <= n ; ++order) {
        std::set<std::uint64_t> seen;
        for (auto & smaller : level) {
            int base_edges = smaller.size();
            for (Bits attach = 0 ; attach < (Bits{1} << (order - 1)) ; ++attach) {
                if (max_edges && base_edges + std::popcount(attach) > *max_edges)
                    continue;
                Graph g(order);
                for (auto e : smaller.edges())
                    g.add_edge(e.u, e.v);
                for (int v : VertexSet(attach))
                    g.add_edge(v, order - 1);
                seen.insert(corpus_code(g));
            }
        }
        level.clear();
        for (auto code : seen)
            level.push_back(graph_from_code(order, code));
    }

    std::stable_sort(level.begin(), level.end(), [] (const Graph & a, const Graph & b) {
            return a.size() < b.size();
            });
    return level;
}

auto connected_graphs(int n, std::optional<int> max_edges) -> std::vector<Graph>
{
    auto graphs = all_graphs(n, max_edges);
    std::erase_if(graphs, [] (const Graph & g) { return ! is_connected(g); });
    return graphs;
}

} // namespace bondlab
