#include <bondlab/bounds.hpp>
#include <bondlab/bondage.hpp>
#include <bondlab/curvature.hpp>
#include <bondlab/error.hpp>

#include <algorithm>

namespace bondlab {

auto integer_sqrt(std::uint64_t x) -> std::uint64_t
{
    if (x < 2)
        return x;
    std::uint64_t r = x;
    std::uint64_t next = x / 2 + (x & 1);
    while (next < r) {
        r = next;
        next = (r + x / r) / 2;
    }
    return r;
}

auto surface_bounds(int max_degree, int h, int k) -> std::pair<int, int>
{
    if (max_degree < 1 || h < 0 || k < 1)
        throw Error(ErrorCode::InvalidArgument, "surface bounds need Δ >= 1, h >= 0, k >= 1");
    return {max_degree + h + 2, max_degree + k + 1};
}

namespace {
    auto half_floor(int offset, std::uint64_t radicand) -> int
    {
        return static_cast<int>((offset + integer_sqrt(radicand)) / 2);
    }
}

auto sachs_bounds(int max_degree, std::optional<int> h, std::optional<int> k) -> SachsBounds
{
    SachsBounds out;
    if (h) {
        if (*h < 1)
            throw Error(ErrorCode::OutOfRegime, "orientable degree caps hold for h >= 1");
        std::uint64_t radicand = 1 + 48 * static_cast<std::uint64_t>(*h);
        out.min_degree_cap_orientable = half_floor(5, radicand);
        out.bondage_cap_orientable = max_degree + half_floor(3, radicand);
    }
    if (k) {
        if (*k < 1)
            throw Error(ErrorCode::OutOfRegime, "non-orientable caps hold for k >= 1");
        std::uint64_t radicand = 1 + 24 * static_cast<std::uint64_t>(*k);
        out.min_degree_cap_non_orientable = *k == 1 ? 5 : half_floor(5, radicand);
        out.bondage_cap_non_orientable = max_degree + half_floor(3, radicand);
    }
    return out;
}

auto bound_suite(const Graph & g, std::optional<int> h, std::optional<int> k) -> BoundSuite
{
    if ((h && *h < 0) || (k && *k < 1))
        throw Error(ErrorCode::InvalidArgument, "bound suite needs h >= 0 and k >= 1");

    BoundSuite s;
    s.hr = hr_bound(g).value;
    s.degree = degree_bound(g);
    int delta = degree_stats(g).max_degree;

    if (h) {
        if (*h == 0)
            s.planar = std::min(8, delta + 2);
        if (*h <= 1)
            s.toroidal = delta + 3;
        s.orientable_surface = delta + *h + 2;
        s.improved_orientable = delta + improved_constant(SurfaceClass::orientable, *h);
    }
    if (k) {
        s.nonorientable_surface = delta + *k + 1;
        s.improved_nonorientable = delta + improved_constant(SurfaceClass::non_orientable, *k);
    }
    auto sachs = sachs_bounds(delta, h && *h >= 1 ? h : std::nullopt, k);
    s.sachs_orientable = sachs.bondage_cap_orientable;
    s.sachs_nonorientable = sachs.bondage_cap_non_orientable;

    auto all = populated_bounds(s);
    s.best = std::min_element(all.begin(), all.end(), [] (auto & a, auto & b) { return a.second < b.second; })->second;
    return s;
}

auto populated_bounds(const BoundSuite & s) -> std::vector<std::pair<const char *, int>>
{
    std::vector<std::pair<const char *, int>> out{
        {"hr", s.hr},
        {"degree", s.degree},
    };
    auto add = [&] (const char * name, const std::optional<int> & value) {
        if (value)
            out.emplace_back(name, *value);
    };
    add("planar", s.planar);
    add("toroidal", s.toroidal);
    add("orientable_surface", s.orientable_surface);
    add("nonorientable_surface", s.nonorientable_surface);
    add("sachs_orientable", s.sachs_orientable);
    add("sachs_nonorientable", s.sachs_nonorientable);
    add("improved_orientable", s.improved_orientable);
    add("improved_nonorientable", s.improved_nonorientable);
    return out;
}

} // namespace bondlab
