#include <bondlab/corpus.hpp>
#include <bondlab/generators.hpp>
#include <bondlab/graph_io.hpp>
#include <bondlab/survey.hpp>

#include <json.hpp>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace bondlab;

namespace {

auto line(const Graph & g) -> std::string
{
    return write_graph6(g);
}

auto p65() -> std::string
{
    std::string out = "~?@@";
    out += std::string((65 * 64 / 2 + 5) / 6, '?');
    return out;
}

} // namespace

TEST_CASE("a small corpus is clean")
{
    std::vector<std::string> lines{line(generate({Family::complete, {4}})), line(generate({Family::cycle, {5}})),
        line(generate({Family::complete_bipartite, {3, 3}}))};
    auto result = run_survey(lines, {});
    CHECK(result.status == ExitStatus::ok);
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].bondage == 2);
    CHECK(result.rows[1].bondage == 2);
    CHECK(result.rows[2].bondage == 3);
    CHECK(result.rows[2].h == 1);
    CHECK(result.rows[2].k == 1);
    for (std::size_t i = 0 ; i < 3 ; ++i) {
        CHECK(result.rows[i].index == i);
        CHECK(result.rows[i].name == lines[i]);
        CHECK(result.rows[i].ok);
    }
}

TEST_CASE("rook(3) row")
{
    std::vector<std::string> lines{line(generate({Family::rook, {3}}))};
    SurveyOptions options;
    options.budget = {20'000'000};
    auto result = run_survey(lines, options);
    REQUIRE(result.rows.size() == 1);
    auto & row = result.rows[0];
    CHECK(row.bondage == 6);
    CHECK(row.gamma == 3);
    CHECK(row.h == 1);
    CHECK(row.ok);
    CHECK(result.status == ExitStatus::ok);
    for (auto [name, value] : populated_bounds(*row.bounds))
        CHECK(value >= 6);
}

TEST_CASE("exhausted budgets are marked, not guessed")
{
    std::vector<std::string> lines{line(generate({Family::complete, {6}}))};
    SurveyOptions options;
    options.budget = {1000};
    auto result = run_survey(lines, options);
    auto & row = result.rows[0];
    CHECK_FALSE(row.h.has_value());
    CHECK_FALSE(row.k.has_value());
    CHECK(std::find(row.reasons.begin(), row.reasons.end(), "budget_h") != row.reasons.end());
    CHECK(std::find(row.reasons.begin(), row.reasons.end(), "budget_k") != row.reasons.end());
    CHECK(row.bondage == 3);
    CHECK(row.ok);
    CHECK(result.status == ExitStatus::ok);
    auto csv = format_survey(result, ReportFormat::csv);
    CHECK(csv.find(",budget,budget,") != std::string::npos);
}

TEST_CASE("input errors")
{
    std::vector<std::string> lines{line(generate({Family::cycle, {4}})), p65(), "zz"};
    auto result = run_survey(lines, {});
    CHECK(result.status == ExitStatus::input_error);
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].ok);
    CHECK(result.rows[1].input_error);
    CHECK(result.rows[1].reasons == std::vector<std::string>{"SizeLimit"});
    CHECK(result.rows[2].reasons == std::vector<std::string>{"ParseError"});
}

TEST_CASE("degenerate graphs")
{
    std::vector<std::string> lines{"@", line(build_graph(5, {{0, 1}, {2, 3}, {3, 4}}))};
    auto result = run_survey(lines, {});
    CHECK(result.status == ExitStatus::ok);
    CHECK(result.rows[0].reasons == std::vector<std::string>{"no_edges"});
    CHECK(std::find(result.rows[1].reasons.begin(), result.rows[1].reasons.end(), "disconnected")
            != result.rows[1].reasons.end());
    CHECK(result.rows[1].bondage == 1);
}

TEST_CASE("results do not depend on the worker count")
{
    std::vector<std::string> lines;
    for (auto & g : connected_graphs(5))
        lines.push_back(line(g));
    SurveyOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = run_survey(lines, one);
    auto b = run_survey(lines, many);
    for (auto format : {ReportFormat::text, ReportFormat::json, ReportFormat::csv})
        CHECK(format_survey(a, format) == format_survey(b, format));
}

TEST_CASE("report formats")
{
    std::istringstream in(">>graph6<<C~\nCl\n");
    auto result = run_survey(in, {});
    auto csv = format_survey(result, ReportFormat::csv);
    CHECK(csv.rfind(std::string(survey_csv_header) + "\n", 0) == 0);
    CHECK(csv.find("Cl,4,4,2,2,2,3,3,0,1,4,4,4,3,true") != std::string::npos);
    auto doc = nlohmann::json::parse(format_survey(result, ReportFormat::json));
    CHECK(doc["exit_status"] == 0);
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["rows"][1]["bondage"] == 3);
    CHECK(doc["rows"][1]["bounds"]["best"] == 3);
    auto text = format_survey(result, ReportFormat::text);
    CHECK(text.find("Cl") != std::string::npos);
    CHECK_THROWS(parse_report_format("xml"));
}
