#pragma once

#include <bondlab/embedding.hpp>
#include <bondlab/rational.hpp>

#include <string_view>
#include <vector>

namespace bondlab {

struct SurfaceSpec {
    SurfaceClass surface = SurfaceClass::orientable;
    /// h >= 0 for orientable surfaces, k >= 1 otherwise.
    int genus = 0;
};

/// Throws InvalidArgument for a negative h or a non-orientable k < 1.
void validate_surface(const SurfaceSpec & s);

/// The per-surface numerator t in the genus term t/|E|: 2h - 2 or k - 2.
auto genus_term(const SurfaceSpec & s) -> int;

struct EdgeCurvature {
    Edge edge;
    Rational w;          // 1/d(u) + 1/d(v)
    Rational f;          // 1/m1 + 1/m2
    int m1 = 0;          // boundary walk length of the face on one side
    int m2 = 0;          // ... and on the other (equal if both sides lie on one face)
    Rational curvature;  // w + f - 1 + t/|E|
};

struct CurvatureReport {
    std::vector<EdgeCurvature> per_edge;
    Rational sum_w;
    Rational sum_f;
    Rational sum_curvature;
};

/// Exact per-edge charges of an embedding of g on the given surface. The
/// embedding's own class and genus must match `surface` (SurfaceMismatch).
auto curvature_table(const Graph & g, const RotationSystem & rs, const SurfaceSpec & surface) -> CurvatureReport;

/// Σw = |V|, Σf = |F| and Σcurvature = 0, each checked exactly against both
/// the stored sums and the sums recomputed from the per-edge records.
auto check_euler_identities(const CurvatureReport & report, const EmbeddingSummary & summary) -> bool;

// Three-case discharging bound. With every vertex degree at least s:
//   A: one endpoint has degree s, the faces on both sides have length >= 4;
//   B: one endpoint has degree s+1, one side face has length >= 3, the other >= 4;
//   C: both endpoints have degree >= s+2, both side faces have length >= 3.
// edge_floor is the matching lower bound on |E| and value the resulting
// upper bound on an edge's curvature, base + t/edge_floor.
enum class Case { A, B, C };

auto to_string(Case c) -> std::string_view;

struct CaseBound {
    Case which = Case::A;
    int s = 0;
    int t = 0;
    Rational base;
    Rational edge_floor;
    Rational value;
};

auto case_bound(Case which, int s, int t) -> CaseBound;

struct CaseValues {
    Rational a;
    Rational b;
    Rational c;
};

/// Closed-form simplifications of case_bound at s = h+4, t = 2h-2 (h >= 1)
/// and s = k+3, t = k-2 (k >= 2). Throws OutOfRegime elsewhere.
auto closed_form_case_values(const SurfaceSpec & surface) -> CaseValues;

/// Smallest c >= 1 for which all three cases rule out an edge of
/// non-negative curvature at s = c + 2: value < 0 when t >= 0, base <= 0
/// when t < 0. Yields b(G) <= Δ(G) + c on that surface.
auto improved_constant(SurfaceClass surface, int genus) -> int;

} // namespace bondlab
