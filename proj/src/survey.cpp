#include <bondlab/survey.hpp>
#include <bondlab/bondage.hpp>
#include <bondlab/domination.hpp>
#include <bondlab/graph_io.hpp>

#include <json.hpp>

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace bondlab {

namespace {
    auto genus_or_reason(const Graph & g, SurfaceClass surface, const GenusBudget & budget,
            std::vector<std::string> & reasons, const char * reason) -> std::optional<int>
    {
        try {
            return min_genus(g, surface, budget).genus;
        }
        catch (const BudgetExceeded &) {
            reasons.emplace_back(reason);
            return std::nullopt;
        }
    }
}

auto survey_row(std::size_t index, const std::string & graph6, const SurveyOptions & options) -> SurveyRow
{
    SurveyRow row;
    row.index = index;
    row.name = graph6;

    std::optional<Graph> parsed;
    try {
        parsed = parse_graph6(graph6);
    }
    catch (const Error & e) {
        row.reasons.emplace_back(to_string(e.code()));
        row.input_error = true;
        row.ok = false;
        return row;
    }
    auto & g = *parsed;

    auto degrees = degree_stats(g);
    row.n = g.order();
    row.m = g.size();
    row.min_degree = degrees.min_degree;
    row.max_degree = degrees.max_degree;
    row.gamma = domination_number(g).gamma;

    if (row.m == 0) {
        row.reasons.emplace_back("no_edges");
        return row;
    }

    row.hr = hr_bound(g).value;
    try {
        row.bondage = bondage_number(g, options.bondage_cap).b;
    }
    catch (const Error & e) {
        if (e.code() != ErrorCode::CapTooSmall)
            throw;
        row.reasons.emplace_back("cap");
    }

    if (is_connected(g)) {
        row.h = genus_or_reason(g, SurfaceClass::orientable, options.budget, row.reasons, "budget_h");
        row.k = genus_or_reason(g, SurfaceClass::non_orientable, options.budget, row.reasons, "budget_k");
    }
    else
        row.reasons.emplace_back("disconnected");

    // Genus-dependent bounds are stated for connected graphs.
    bool connected = is_connected(g);
    row.bounds = bound_suite(g, connected ? row.h : std::nullopt, connected ? row.k : std::nullopt);

    if (row.bondage)
        for (auto [name, value] : populated_bounds(*row.bounds))
            if (*row.bondage > value)
                row.violations.emplace_back(name);

    if (row.h && *row.h >= 1) {
        auto caps = sachs_bounds(row.max_degree, row.h, std::nullopt);
        if (row.min_degree > *caps.min_degree_cap_orientable)
            row.violations.emplace_back("min_degree_cap_orientable");
    }
    if (row.k) {
        auto caps = sachs_bounds(row.max_degree, std::nullopt, row.k);
        if (row.min_degree > *caps.min_degree_cap_non_orientable)
            row.violations.emplace_back("min_degree_cap_non_orientable");
    }

    row.ok = row.violations.empty();
    return row;
}

auto run_survey(std::span<const std::string> graph6_lines, const SurveyOptions & options) -> SurveyResult
{
    SurveyResult result;
    result.rows.resize(graph6_lines.size());

    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, graph6_lines.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++ ; i < graph6_lines.size() && ! failed ; i = next++) {
            try {
                result.rows[i] = survey_row(i, graph6_lines[i], options);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                failed = true;
            }
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned t = 1 ; t < threads ; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    if (failure)
        std::rethrow_exception(failure);

    bool input_error = false, violation = false;
    for (auto & row : result.rows) {
        input_error = input_error || row.input_error;
        violation = violation || ! row.violations.empty();
    }
    result.status = input_error ? ExitStatus::input_error : violation ? ExitStatus::violation : ExitStatus::ok;
    return result;
}

auto run_survey(std::istream & in, const SurveyOptions & options) -> SurveyResult
{
    auto lines = read_graph6_lines(in);
    return run_survey(lines, options);
}

auto parse_report_format(std::string_view name) -> ReportFormat
{
    if (name == "text")
        return ReportFormat::text;
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

namespace {
    auto cell(const std::optional<int> & value, const char * missing) -> std::string
    {
        return value ? std::to_string(*value) : std::string(missing);
    }

    auto genus_cell(const SurveyRow & row, const std::optional<int> & value, const char * budget_reason) -> std::string
    {
        if (value)
            return std::to_string(*value);
        for (auto & r : row.reasons)
            if (r == budget_reason)
                return "budget";
        return "";
    }

    auto row_json(const SurveyRow & row) -> nlohmann::json
    {
        nlohmann::json j;
        j["index"] = row.index;
        j["name"] = row.name;
        auto opt = [] (const std::optional<int> & v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
        if (! row.input_error) {
            j["n"] = row.n;
            j["m"] = row.m;
            j["delta"] = row.min_degree;
            j["Delta"] = row.max_degree;
            j["gamma"] = opt(row.gamma);
            j["bondage"] = opt(row.bondage);
            j["hr"] = opt(row.hr);
            j["h"] = row.h ? nlohmann::json(*row.h) : nlohmann::json(genus_cell(row, row.h, "budget_h"));
            j["k"] = row.k ? nlohmann::json(*row.k) : nlohmann::json(genus_cell(row, row.k, "budget_k"));
            if (row.bounds) {
                nlohmann::json b;
                for (auto [name, value] : populated_bounds(*row.bounds))
                    b[name] = value;
                b["best"] = row.bounds->best;
                j["bounds"] = b;
            }
            if (row.bondage) {
                nlohmann::json notes;
                notes["three_halves_delta"] = 2 * *row.bondage <= 3 * row.max_degree;
                if (row.h && *row.h == 0)
                    notes["planar_delta_plus_one"] = *row.bondage <= row.max_degree + 1;
                j["conjecture_annotations"] = notes;
            }
        }
        j["reasons"] = row.reasons;
        j["violations"] = row.violations;
        j["ok"] = row.ok;
        return j;
    }
}

namespace {
    // Largest b - Δ seen per genus value, over rows where both are known.
    auto excess_by_genus(const SurveyResult & result, std::optional<int> SurveyRow::* genus) -> std::map<int, int>
    {
        std::map<int, int> out;
        for (auto & row : result.rows)
            if (row.bondage && row.*genus) {
                int excess = *row.bondage - row.max_degree;
                auto [it, fresh] = out.emplace(*(row.*genus), excess);
                if (! fresh)
                    it->second = std::max(it->second, excess);
            }
        return out;
    }
}

auto format_survey(const SurveyResult & result, ReportFormat format) -> std::string
{
    auto by_h = excess_by_genus(result, &SurveyRow::h);
    auto by_k = excess_by_genus(result, &SurveyRow::k);
    std::ostringstream out;
    switch (format) {
        case ReportFormat::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (auto & row : result.rows)
                rows.push_back(row_json(row));
            nlohmann::json evidence{{"max_bondage_minus_Delta_by_h", nlohmann::json::object()},
                {"max_bondage_minus_Delta_by_k", nlohmann::json::object()}};
            for (auto [g, e] : by_h)
                evidence["max_bondage_minus_Delta_by_h"][std::to_string(g)] = e;
            for (auto [g, e] : by_k)
                evidence["max_bondage_minus_Delta_by_k"][std::to_string(g)] = e;
            nlohmann::json doc{{"rows", rows}, {"evidence", evidence}, {"exit_status", static_cast<int>(result.status)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv: {
            out << survey_csv_header << '\n';
            for (auto & row : result.rows) {
                const auto & b = row.bounds;
                out << row.name << ',';
                if (row.input_error)
                    out << ",,,,,,,,,,,,,";
                else
                    out << row.n << ',' << row.m << ',' << row.min_degree << ',' << row.max_degree << ','
                        << cell(row.gamma, "") << ',' << cell(row.bondage, "") << ',' << cell(row.hr, "") << ','
                        << genus_cell(row, row.h, "budget_h") << ',' << genus_cell(row, row.k, "budget_k") << ','
                        << cell(b ? b->orientable_surface : std::nullopt, "") << ','
                        << cell(b ? b->nonorientable_surface : std::nullopt, "") << ','
                        << cell(b ? b->planar : std::nullopt, "") << ','
                        << cell(b ? std::optional<int>(b->best) : std::nullopt, "") << ',';
                out << (row.ok ? "true" : "false") << '\n';
            }
            break;
        }
        case ReportFormat::text: {
            for (auto & row : result.rows) {
                out << row.index << ' ' << row.name;
                if (! row.input_error)
                    out << " n=" << row.n << " m=" << row.m << " delta=" << row.min_degree << " Delta=" << row.max_degree
                        << " gamma=" << cell(row.gamma, "-") << " b=" << cell(row.bondage, "-") << " hr=" << cell(row.hr, "-")
                        << " h=" << (row.h ? std::to_string(*row.h) : genus_cell(row, row.h, "budget_h").empty() ? "-" : "budget")
                        << " k=" << (row.k ? std::to_string(*row.k) : genus_cell(row, row.k, "budget_k").empty() ? "-" : "budget")
                        << " best=" << (row.bounds ? std::to_string(row.bounds->best) : "-");
                out << (row.ok ? " ok" : " FAIL");
                for (auto & r : row.reasons)
                    out << " [" << r << ']';
                for (auto & v : row.violations)
                    out << " violates:" << v;
                out << '\n';
            }
            std::size_t failing = 0;
            for (auto & row : result.rows)
                failing += row.ok ? 0 : 1;
            for (auto [g, e] : by_h)
                out << "# max b - Delta at h=" << g << ": " << e << '\n';
            for (auto [g, e] : by_k)
                out << "# max b - Delta at k=" << g << ": " << e << '\n';
            out << "# " << result.rows.size() << " graphs, " << failing << " not ok, exit " << static_cast<int>(result.status) << '\n';
            break;
        }
    }
    return out.str();
}

} // namespace bondlab
