#include "oracles.hpp"

#include <bondlab/corpus.hpp>
#include <bondlab/curvature.hpp>
#include <bondlab/error.hpp>
#include <bondlab/generators.hpp>
#include <bondlab/genus.hpp>

#include <doctest.h>

using namespace bondlab;

namespace {

auto code_of(auto && f) -> ErrorCode
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

auto table_for(const RotationSystem & rs) -> std::pair<CurvatureReport, EmbeddingSummary>
{
    auto summary = embedding_summary(rs);
    return {curvature_table(rs.graph(), rs, {summary.surface(), summary.genus}), summary};
}

} // namespace

TEST_CASE("C4 in the sphere")
{
    auto rs = RotationSystem::identity(generate({Family::cycle, {4}}));
    auto [report, summary] = table_for(rs);
    REQUIRE(report.per_edge.size() == 4);
    for (auto & e : report.per_edge) {
        CHECK(e.w == 1);
        CHECK(e.f == rational(1, 2));
        CHECK(e.curvature == 0);
        CHECK(e.m1 == 4);
        CHECK(e.m2 == 4);
    }
    CHECK(report.sum_w == 4);
    CHECK(report.sum_f == 2);
    CHECK(report.sum_curvature == 0);
    CHECK(check_euler_identities(report, summary));
}

TEST_CASE("P3 in the sphere: one face of length 2(n-1)")
{
    auto rs = RotationSystem::identity(generate({Family::path, {3}}));
    auto [report, summary] = table_for(rs);
    for (auto & e : report.per_edge) {
        CHECK(e.w == rational(3, 2));
        CHECK(e.f == rational(1, 2));
        CHECK(e.m1 == 4);
        CHECK(e.m2 == 4);
        CHECK(e.curvature == 0);
    }
    CHECK(check_euler_identities(report, summary));
}

TEST_CASE("K5 on the torus and the projective plane, K4 in the sphere")
{
    auto k5 = generate({Family::complete, {5}});
    auto torus = min_genus(k5, SurfaceClass::orientable).witness;
    auto [report, summary] = table_for(torus);
    CHECK(summary.faces == 5);
    CHECK(report.sum_w == 5);
    CHECK(report.sum_f == 5);
    CHECK(report.sum_curvature == 0);
    CHECK(check_euler_identities(report, summary));

    auto plane = min_genus(k5, SurfaceClass::non_orientable).witness;
    auto [pr, ps] = table_for(plane);
    CHECK(ps.faces == 6);
    CHECK(pr.sum_f == 6);
    CHECK(check_euler_identities(pr, ps));

    auto k4 = min_genus(generate({Family::complete, {4}}), SurfaceClass::orientable).witness;
    auto [kr, ks] = table_for(k4);
    CHECK(check_euler_identities(kr, ks));
    for (auto & e : kr.per_edge)
        CHECK(e.curvature == rational(2, 3) + rational(2, 3) - 1 - rational(2, 6));
}

TEST_CASE("a tampered report fails the identities")
{
    auto rs = RotationSystem::identity(generate({Family::cycle, {4}}));
    auto [report, summary] = table_for(rs);
    report.per_edge[0].w += rational(1, 10);
    CHECK_FALSE(check_euler_identities(report, summary));
    auto [fresh, s2] = table_for(rs);
    fresh.sum_curvature = rational(1, 7);
    CHECK_FALSE(check_euler_identities(fresh, s2));
}

TEST_CASE("identities over every embedding of the connected graphs on four vertices")
{
    for (auto & g : connected_graphs(4))
        for_each_embedding(g, SignatureClasses::all, [&] (const RotationSystem & rs) {
            auto [report, summary] = table_for(rs);
            CHECK(check_euler_identities(report, summary));
            CHECK(report.sum_w == g.order());
            CHECK(report.sum_f == oracle::count_faces(rs));
            return true;
        });
}

TEST_CASE("surface mismatch and degenerate input")
{
    auto c4 = generate({Family::cycle, {4}});
    auto rs = RotationSystem::identity(c4);
    CHECK(code_of([&] { curvature_table(c4, rs, {SurfaceClass::orientable, 1}); }) == ErrorCode::SurfaceMismatch);
    CHECK(code_of([&] { curvature_table(c4, rs, {SurfaceClass::non_orientable, 2}); }) == ErrorCode::SurfaceMismatch);
    CHECK(code_of([&] { curvature_table(c4, rs, {SurfaceClass::non_orientable, 0}); }) == ErrorCode::InvalidArgument);
    auto k1 = Graph(1);
    CHECK(code_of([&] { curvature_table(k1, RotationSystem::identity(k1), {}); }) == ErrorCode::NoEdges);
    auto split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(code_of([&] { curvature_table(split, RotationSystem::identity(split), {}); }) == ErrorCode::RequiresConnected);
}

TEST_CASE("case bounds")
{
    auto a = case_bound(Case::A, 5, 0);
    CHECK(a.value == rational(-1, 10));
    CHECK(a.edge_floor == 15);
    CHECK(case_bound(Case::A, 6, 2).value == rational(-1, 14));
    CHECK(case_bound(Case::C, 4, 0).value == 0);
    CHECK(case_bound(Case::B, 4, 0).base == rational(2, 5) - rational(5, 12));
    CHECK(case_bound(Case::B, 7, 0).edge_floor == rational(65, 2));
    CHECK(case_bound(Case::C, 7, 0).edge_floor == 37);
    CHECK(code_of([] { case_bound(Case::A, 2, 0); }) == ErrorCode::InvalidThreshold);
}

TEST_CASE("closed forms")
{
    auto h1 = closed_form_case_values({SurfaceClass::orientable, 1});
    CHECK(h1.a == rational(-1, 10));
    CHECK(closed_form_case_values({SurfaceClass::non_orientable, 2}).a == rational(-1, 10));
    for (int h = 1 ; h <= 100 ; ++h) {
        auto v = closed_form_case_values({SurfaceClass::orientable, h});
        CHECK(v.a == oracle::closed_a_orientable(h));
        CHECK(v.b == oracle::closed_b_orientable(h));
        CHECK(v.c == oracle::closed_c_orientable(h));
        CHECK(v.a == case_bound(Case::A, h + 4, 2 * h - 2).value);
        CHECK(v.b == case_bound(Case::B, h + 4, 2 * h - 2).value);
        CHECK(v.c == case_bound(Case::C, h + 4, 2 * h - 2).value);
    }
    for (int k = 2 ; k <= 100 ; ++k) {
        auto v = closed_form_case_values({SurfaceClass::non_orientable, k});
        CHECK(v.a == oracle::closed_a_nonorientable(k));
        CHECK(v.b == oracle::closed_b_nonorientable(k));
        CHECK(v.c == oracle::closed_c_nonorientable(k));
        CHECK(v.a == case_bound(Case::A, k + 3, k - 2).value);
        CHECK(v.b == case_bound(Case::B, k + 3, k - 2).value);
        CHECK(v.c == case_bound(Case::C, k + 3, k - 2).value);
    }
    CHECK(code_of([] { closed_form_case_values({SurfaceClass::orientable, 0}); }) == ErrorCode::OutOfRegime);
    CHECK(code_of([] { closed_form_case_values({SurfaceClass::non_orientable, 1}); }) == ErrorCode::OutOfRegime);
}

TEST_CASE("negativity sweeps")
{
    for (int h = 1 ; h <= 1000 ; ++h)
        for (auto which : {Case::A, Case::B, Case::C})
            CHECK(case_bound(which, h + 4, 2 * h - 2).value < 0);
    for (int k = 2 ; k <= 1000 ; ++k)
        for (auto which : {Case::A, Case::B, Case::C})
            CHECK(case_bound(which, k + 3, k - 2).value < 0);
    for (auto which : {Case::A, Case::B, Case::C}) {
        CHECK(case_bound(which, 4, -2).base <= 0);
        CHECK(case_bound(which, 4, -1).base <= 0);
    }
}

TEST_CASE("improved constants")
{
    CHECK(improved_constant(SurfaceClass::orientable, 0) == 2);
    CHECK(improved_constant(SurfaceClass::orientable, 1) == 3);
    CHECK(improved_constant(SurfaceClass::orientable, 8) == 9);
    CHECK(improved_constant(SurfaceClass::orientable, 7) > 8);
    CHECK(improved_constant(SurfaceClass::non_orientable, 1) == 2);
    CHECK(improved_constant(SurfaceClass::non_orientable, 2) == 3);
    CHECK(improved_constant(SurfaceClass::non_orientable, 3) == 3);
    CHECK(improved_constant(SurfaceClass::non_orientable, 5) == 5);
    CHECK(improved_constant(SurfaceClass::non_orientable, 6) == 5);
    CHECK(improved_constant(SurfaceClass::non_orientable, 464) == 53);
}

TEST_CASE("improved constants agree with direct evaluation and never lose to the surface bound")
{
    for (int g = 0 ; g <= 1000 ; ++g) {
        int c = improved_constant(SurfaceClass::orientable, g);
        CHECK(c == oracle::improved_constant(true, g));
        CHECK(c <= g + 2);
        if (g >= 1) {
            int k = improved_constant(SurfaceClass::non_orientable, g);
            CHECK(k == oracle::improved_constant(false, g));
            CHECK(k <= g + 1);
        }
    }
    for (int h = 8 ; h <= 200 ; ++h)
        CHECK(improved_constant(SurfaceClass::orientable, h) <= h + 1);
    for (int k = 3 ; k <= 200 ; ++k)
        CHECK(improved_constant(SurfaceClass::non_orientable, k) <= k);
    for (int k = 6 ; k <= 200 ; ++k)
        CHECK(improved_constant(SurfaceClass::non_orientable, k) <= k - 1);
}

TEST_CASE("rational text form")
{
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(rational(-2, 20)) == "-1/10");
    CHECK(to_string(rational(3)) == "3/1");
    CHECK(parse_rational("-1/10") == rational(-1, 10));
    CHECK(parse_rational("6/4") == rational(3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_rational("x/2"); }) == ErrorCode::ParseError);
}
