#include <bondlab/generators.hpp>
#include <bondlab/error.hpp>

#include <array>

namespace bondlab {

namespace {
    struct FamilyInfo {
        Family family;
        std::string_view name;
        std::size_t arity;
    };

    constexpr std::array families{
        FamilyInfo{Family::path, "path", 1},
        FamilyInfo{Family::cycle, "cycle", 1},
        FamilyInfo{Family::complete, "complete", 1},
        FamilyInfo{Family::complete_bipartite, "complete_bipartite", 2},
        FamilyInfo{Family::star, "star", 1},
        FamilyInfo{Family::wheel, "wheel", 1},
        FamilyInfo{Family::rook, "rook", 1},
        FamilyInfo{Family::hypercube, "hypercube", 1},
        FamilyInfo{Family::gnp, "gnp", 3},
        FamilyInfo{Family::petersen, "petersen", 0},
    };

    auto info(Family f) -> const FamilyInfo &
    {
        for (auto & i : families)
            if (i.family == f)
                return i;
        throw Error(ErrorCode::InvalidArgument, "unknown family");
    }

    void require(bool ok, const std::string & what)
    {
        if (! ok)
            throw Error(ErrorCode::InvalidArgument, what);
    }

    void require_order(long n)
    {
        if (n > max_vertices)
            throw Error(ErrorCode::SizeLimit, "family order " + std::to_string(n) + " exceeds 64");
    }
}

auto family_name(Family f) -> std::string_view
{
    return info(f).name;
}

auto parse_family(std::string_view name) -> Family
{
    for (auto & i : families)
        if (i.name == name)
            return i.family;
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

auto SplitMix64::next() -> std::uint64_t
{
    std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto generate(const FamilySpec & spec) -> Graph
{
    auto & meta = info(spec.family);
    require(spec.params.size() == meta.arity,
            std::string(meta.name) + " takes " + std::to_string(meta.arity) + " parameter(s)");
    auto & p = spec.params;

    switch (spec.family) {
        case Family::path: {
            require(p[0] >= 1, "path needs n >= 1");
            require_order(p[0]);
            Graph g(p[0]);
            for (int i = 0 ; i + 1 < p[0] ; ++i)
                g.add_edge(i, i + 1);
            return g;
        }
        case Family::cycle: {
            require(p[0] >= 3, "cycle needs n >= 3");
            require_order(p[0]);
            Graph g(p[0]);
            for (int i = 0 ; i < p[0] ; ++i)
                g.add_edge(i, (i + 1) % p[0]);
            return g;
        }
        case Family::complete: {
            require(p[0] >= 1, "complete needs n >= 1");
            require_order(p[0]);
            Graph g(p[0]);
            for (int i = 0 ; i < p[0] ; ++i)
                for (int j = i + 1 ; j < p[0] ; ++j)
                    g.add_edge(i, j);
            return g;
        }
        case Family::complete_bipartite: {
            require(p[0] >= 1 && p[1] >= 1, "complete_bipartite needs a, b >= 1");
            require_order(static_cast<long>(p[0]) + p[1]);
            Graph g(p[0] + p[1]);
            for (int i = 0 ; i < p[0] ; ++i)
                for (int j = 0 ; j < p[1] ; ++j)
                    g.add_edge(i, p[0] + j);
            return g;
        }
        case Family::star: {
            require(p[0] >= 1, "star needs k >= 1");
            require_order(static_cast<long>(p[0]) + 1);
            Graph g(p[0] + 1);
            for (int i = 1 ; i <= p[0] ; ++i)
                g.add_edge(0, i);
            return g;
        }
        case Family::wheel: {
            require(p[0] >= 3, "wheel needs a rim of at least 3");
            require_order(static_cast<long>(p[0]) + 1);
            Graph g(p[0] + 1);
            for (int i = 1 ; i <= p[0] ; ++i) {
                g.add_edge(0, i);
                g.add_edge(i, i % p[0] + 1);
            }
            return g;
        }
        case Family::rook: {
            require(p[0] >= 1, "rook needs n >= 1");
            require_order(static_cast<long>(p[0]) * p[0]);
            int n = p[0];
            Graph g(n * n);
            std::vector<std::string> labels;
            for (int a = 0 ; a < n * n ; ++a) {
                labels.push_back("(" + std::to_string(a / n) + "," + std::to_string(a % n) + ")");
                for (int b = a + 1 ; b < n * n ; ++b)
                    if ((a / n == b / n) != (a % n == b % n))
                        g.add_edge(a, b);
            }
            g.set_labels(std::move(labels));
            return g;
        }
        case Family::hypercube: {
            require(p[0] >= 0, "hypercube needs d >= 0");
            require_order(p[0] > 6 ? 65 : 1L << p[0]);
            Graph g(1 << p[0]);
            for (int a = 0 ; a < (1 << p[0]) ; ++a)
                for (int bit = 0 ; bit < p[0] ; ++bit)
                    if (! (a & (1 << bit)))
                        g.add_edge(a, a | (1 << bit));
            return g;
        }
        case Family::gnp: {
            require(p[0] >= 1, "gnp needs n >= 1");
            require(p[2] >= 1 && p[1] >= 0 && p[1] <= p[2], "gnp needs 0 <= a <= b, b >= 1");
            require_order(p[0]);
            Graph g(p[0]);
            SplitMix64 rng(spec.seed);
            for (int j = 1 ; j < p[0] ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    if (rng.below(static_cast<std::uint64_t>(p[2])) < static_cast<std::uint64_t>(p[1]))
                        g.add_edge(i, j);
            return g;
        }
        case Family::petersen: {
            Graph g(10);
            for (int i = 0 ; i < 5 ; ++i) {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            return g;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

} // namespace bondlab
