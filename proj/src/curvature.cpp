#include <bondlab/curvature.hpp>
#include <bondlab/error.hpp>

namespace bondlab {

void validate_surface(const SurfaceSpec & s)
{
    if (s.surface == SurfaceClass::orientable && s.genus < 0)
        throw Error(ErrorCode::InvalidArgument, "orientable genus must be >= 0");
    if (s.surface == SurfaceClass::non_orientable && s.genus < 1)
        throw Error(ErrorCode::InvalidArgument, "non-orientable genus must be >= 1");
}

auto genus_term(const SurfaceSpec & s) -> int
{
    validate_surface(s);
    return s.surface == SurfaceClass::orientable ? 2 * s.genus - 2 : s.genus - 2;
}

namespace {
    // Sum over the lcm of the denominators.
    auto exact_sum(const std::vector<EdgeCurvature> & rows, Rational EdgeCurvature::* field) -> Rational
    {
        BigInt den = 1;
        for (auto & row : rows)
            den = boost::multiprecision::lcm(den, denominator(row.*field));
        BigInt num = 0;
        for (auto & row : rows)
            num += numerator(row.*field) * (den / denominator(row.*field));
        return Rational(num, den);
    }
}

auto curvature_table(const Graph & g, const RotationSystem & rs, const SurfaceSpec & surface) -> CurvatureReport
{
    if (! (rs.graph() == g))
        throw Error(ErrorCode::InvalidArgument, "embedding belongs to a different graph");
    int t = genus_term(surface);
    if (g.size() == 0)
        throw Error(ErrorCode::NoEdges, "curvature is assigned to edges; the graph has none");

    auto trace = trace_faces(rs);
    auto summary = embedding_summary(rs, trace);
    if (summary.surface() != surface.surface || summary.genus != surface.genus)
        throw Error(ErrorCode::SurfaceMismatch, "embedding lies on the " + std::string(to_string(summary.surface()))
                + " surface of genus " + std::to_string(summary.genus) + ", not the "
                + std::string(to_string(surface.surface)) + " surface of genus " + std::to_string(surface.genus));

    auto edges = g.edges();
    long long e = static_cast<long long>(edges.size());

    CurvatureReport report;
    for (std::size_t i = 0 ; i < edges.size() ; ++i) {
        EdgeCurvature ec;
        ec.edge = edges[i];
        ec.m1 = static_cast<int>(trace.faces[trace.edge_sides[i][0]].size());
        ec.m2 = static_cast<int>(trace.faces[trace.edge_sides[i][1]].size());
        long long du = g.degree(ec.edge.u), dv = g.degree(ec.edge.v);
        long long m1 = ec.m1, m2 = ec.m2;
        // w + f - 1 + t/|E| over the common denominator du dv m1 m2 |E|
        BigInt den = BigInt(du * dv) * (m1 * m2) * e;
        BigInt w_num = BigInt(du + dv) * (m1 * m2) * e;
        BigInt f_num = BigInt(m1 + m2) * (du * dv) * e;
        BigInt c_num = w_num + f_num - den + BigInt(t) * (du * dv) * (m1 * m2);
        ec.w = Rational(BigInt(du + dv), BigInt(du * dv));
        ec.f = Rational(BigInt(m1 + m2), BigInt(m1 * m2));
        ec.curvature = Rational(c_num, den);
        report.per_edge.push_back(std::move(ec));
    }
    report.sum_w = exact_sum(report.per_edge, &EdgeCurvature::w);
    report.sum_f = exact_sum(report.per_edge, &EdgeCurvature::f);
    report.sum_curvature = exact_sum(report.per_edge, &EdgeCurvature::curvature);
    return report;
}

auto check_euler_identities(const CurvatureReport & report, const EmbeddingSummary & summary) -> bool
{
    auto w = exact_sum(report.per_edge, &EdgeCurvature::w);
    auto f = exact_sum(report.per_edge, &EdgeCurvature::f);
    auto c = exact_sum(report.per_edge, &EdgeCurvature::curvature);
    Rational vertices = summary.vertices, faces = summary.faces;
    return w == vertices && report.sum_w == vertices
        && f == faces && report.sum_f == faces
        && c == 0 && report.sum_curvature == 0;
}

auto to_string(Case c) -> std::string_view
{
    switch (c) {
        case Case::A: return "A";
        case Case::B: return "B";
        case Case::C: return "C";
    }
    return "?";
}

auto case_bound(Case which, int s, int t) -> CaseBound
{
    if (s < 3)
        throw Error(ErrorCode::InvalidThreshold, "degree threshold must be >= 3, got " + std::to_string(s));

    CaseBound cb{which, s, t, {}, {}, {}};
    long long ls = s;
    switch (which) {
        case Case::A:
            cb.base = rational(2, ls) - rational(1, 2);
            cb.edge_floor = rational(ls * (ls + 1), 2);
            break;
        case Case::B:
            cb.base = rational(2, ls + 1) + rational(1, 3) + rational(1, 4) - 1;
            cb.edge_floor = rational(ls * ls + 2 * (ls + 1), 2);
            break;
        case Case::C:
            cb.base = rational(2, ls + 2) + rational(2, 3) - 1;
            cb.edge_floor = rational(ls * (ls + 1) + 2 * (ls + 2), 2);
            break;
    }
    cb.value = cb.base + Rational(t) / cb.edge_floor;
    return cb;
}

auto closed_form_case_values(const SurfaceSpec & surface) -> CaseValues
{
    validate_surface(surface);
    BigInt g = surface.genus;
    if (surface.surface == SurfaceClass::orientable) {
        if (surface.genus < 1)
            throw Error(ErrorCode::OutOfRegime, "orientable closed forms hold for h >= 1");
        auto & h = g;
        return {
            Rational(-8 + h * (3 - h), 2 * (h + 4) * (h + 5)),
            Rational(-5 * h * h * h - 3 * h * h + 52 * h - 266, 12 * (h + 5) * (h * h + 10 * h + 26)),
            Rational(-h * h * h + h * h + 28 * h - 72, 3 * (h + 6) * (h * h + 11 * h + 32)),
        };
    }
    if (surface.genus < 2)
        throw Error(ErrorCode::OutOfRegime, "non-orientable closed forms hold for k >= 2");
    auto & k = g;
    return {
        Rational(-4 + k * (1 - k), 2 * (k + 3) * (k + 4)),
        Rational(-124 - 5 * k - 12 * k * k - 5 * k * k * k, 12 * (k + 4) * (k * k + 8 * k + 17)),
        Rational(-k * k * k - 2 * k * k + 5 * k - 38, 3 * (k + 5) * (k * k + 9 * k + 22)),
    };
}

auto improved_constant(SurfaceClass surface, int genus) -> int
{
    int t = genus_term({surface, genus});
    for (int c = 1 ; ; ++c) {
        bool ruled_out = true;
        for (auto which : {Case::A, Case::B, Case::C}) {
            auto cb = case_bound(which, c + 2, t);
            if (t >= 0 ? cb.value >= 0 : cb.base > 0) {
                ruled_out = false;
                break;
            }
        }
        if (ruled_out)
            return c;
    }
}

} // namespace bondlab
