#pragma once

#include <bondlab/bounds.hpp>
#include <bondlab/genus.hpp>

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bondlab {

enum class ExitStatus : int {
    ok = 0,
    violation = 1,
    input_error = 2,
    internal_error = 3,
};

struct SurveyOptions {
    GenusBudget budget;
    std::optional<int> bondage_cap;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SurveyRow {
    std::size_t index = 0;
    std::string name;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> gamma;
    std::optional<int> bondage;
    std::optional<int> hr;
    std::optional<int> h;
    std::optional<int> k;
    std::optional<BoundSuite> bounds;
    /// Reason codes for anything not computed: "budget_h", "budget_k",
    /// "cap", "disconnected", "no_edges", or an input error code.
    std::vector<std::string> reasons;
    /// Names of bounds the bondage number exceeded.
    std::vector<std::string> violations;
    bool input_error = false;
    bool ok = true;
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    ExitStatus status = ExitStatus::ok;
};

auto survey_row(std::size_t index, const std::string & graph6, const SurveyOptions & options) -> SurveyRow;

/// One row per graph6 line, computed by a worker pool and returned in input order.
auto run_survey(std::span<const std::string> graph6_lines, const SurveyOptions & options) -> SurveyResult;
auto run_survey(std::istream & in, const SurveyOptions & options) -> SurveyResult;

enum class ReportFormat { text, json, csv };

auto parse_report_format(std::string_view name) -> ReportFormat;

inline constexpr std::string_view survey_csv_header =
    "name,n,m,delta,Delta,gamma,bondage,hr,h,k,bound_orient,bound_nonorient,bound_planar,bound_best,ok";

auto format_survey(const SurveyResult & result, ReportFormat format) -> std::string;

} // namespace bondlab
