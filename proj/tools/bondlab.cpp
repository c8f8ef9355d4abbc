#include <bondlab/bondage.hpp>
#include <bondlab/bounds.hpp>
#include <bondlab/corpus.hpp>
#include <bondlab/curvature.hpp>
#include <bondlab/domination.hpp>
#include <bondlab/generators.hpp>
#include <bondlab/genus.hpp>
#include <bondlab/graph_io.hpp>
#include <bondlab/survey.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bondlab;
using nlohmann::json;

namespace {

struct Settings {
    std::string input;
    std::string embedding;
    std::string format = "text";
    std::string report;
    std::uint64_t budget = GenusBudget{}.max_traces;
    std::optional<int> bondage_cap;
    std::string surface = "both";
    std::optional<int> genus;
    std::optional<int> h;
    std::optional<int> k;
    std::uint64_t seed = 0;
    std::optional<int> max_edges;
    unsigned threads = 0;
    std::vector<std::string> gen_args;
};

auto slurp(std::istream & in) -> std::string
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto read_text(const std::string & path) -> std::string
{
    if (path.empty() || path == "-")
        return slurp(std::cin);
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    return slurp(in);
}

auto read_input_graph(const Settings & s) -> Graph
{
    return parse_graph_auto(read_text(s.input));
}

auto read_embedding_for(const Settings & s) -> RotationSystem
{
    if (s.embedding.empty())
        throw Error(ErrorCode::InvalidArgument, "--embedding FILE is required");
    auto rs = parse_embedding(read_text(s.embedding));
    if (! s.input.empty() && ! (read_input_graph(s) == rs.graph()))
        throw Error(ErrorCode::InvalidArgument, "embedding does not match the input graph");
    return rs;
}

auto parse_surface(const std::string & name) -> SurfaceClass
{
    if (name == "orientable")
        return SurfaceClass::orientable;
    if (name == "non-orientable" || name == "nonorientable")
        return SurfaceClass::non_orientable;
    throw Error(ErrorCode::InvalidArgument, "surface class must be orientable or non-orientable");
}

auto set_json(const VertexSet & s) -> json
{
    return s.to_vector();
}

auto edges_json(const std::vector<Edge> & edges) -> json
{
    json out = json::array();
    for (auto e : edges)
        out.push_back({e.u, e.v});
    return out;
}

auto edges_text(const std::vector<Edge> & edges) -> std::string
{
    std::string out;
    for (auto e : edges)
        out += (out.empty() ? "" : " ") + ("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    return out;
}

// Emits a flat record as text "key: value" lines, JSON or a two-line CSV.
void emit(const Settings & s, const json & record, std::ostream & out)
{
    auto format = parse_report_format(s.format);
    auto scalar = [] (const json & v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (format == ReportFormat::json)
        out << record.dump(2) << '\n';
    else if (format == ReportFormat::csv) {
        std::string header, row;
        for (auto & [key, value] : record.items()) {
            header += (header.empty() ? "" : ",") + key;
            auto text = scalar(value);
            row += (row.empty() ? "" : ",") + (text.find(',') != std::string::npos ? "\"" + text + "\"" : text);
        }
        out << header << '\n' << row << '\n';
    }
    else
        for (auto & [key, value] : record.items())
            out << key << ": " << scalar(value) << '\n';
}

auto cmd_gamma(const Settings & s) -> int
{
    auto g = read_input_graph(s);
    auto r = domination_number(g);
    emit(s, json{{"gamma", r.gamma}, {"witness", set_json(r.witness)}}, std::cout);
    return 0;
}

auto cmd_bondage(const Settings & s) -> int
{
    auto g = read_input_graph(s);
    auto r = bondage_number(g, s.bondage_cap);
    auto format = parse_report_format(s.format);
    json record{{"bondage", r.b}, {"gamma", r.base_gamma},
        {"witness", format == ReportFormat::json ? edges_json(r.witness) : json(edges_text(r.witness))}};
    emit(s, record, std::cout);
    return 0;
}

auto cmd_hr(const Settings & s) -> int
{
    auto g = read_input_graph(s);
    auto hr = hr_bound(g);
    emit(s, json{{"hr", hr.value}, {"edge", "(" + std::to_string(hr.arg_edge.u) + "," + std::to_string(hr.arg_edge.v) + ")"},
            {"degree_bound", degree_bound(g)}}, std::cout);
    return 0;
}

auto cmd_genus(const Settings & s) -> int
{
    auto g = read_input_graph(s);
    std::vector<SurfaceClass> classes;
    if (s.surface == "both")
        classes = {SurfaceClass::orientable, SurfaceClass::non_orientable};
    else
        classes = {parse_surface(s.surface)};

    auto format = parse_report_format(s.format);
    json record;
    int status = 0;
    for (auto c : classes) {
        std::string key = c == SurfaceClass::orientable ? "h" : "k";
        try {
            auto r = min_genus(g, c, {s.budget});
            record[key] = r.genus;
            record[key + "_traces"] = r.traces;
            record[key + "_two_cell"] = r.two_cell;
            if (format != ReportFormat::csv)
                record[key + "_witness"] = write_embedding(r.witness);
        }
        catch (const BudgetExceeded & e) {
            record[key] = "budget";
            record[key + "_traces"] = e.traces();
            if (e.best())
                record[key + "_best_so_far"] = e.best()->genus;
            status = 2;
        }
    }
    emit(s, record, std::cout);
    return status;
}

auto cmd_faces(const Settings & s) -> int
{
    auto rs = read_embedding_for(s);
    auto trace = trace_faces(rs);
    auto summary = embedding_summary(rs);
    json faces = json::array();
    for (auto & face : trace.faces) {
        json walk = json::array();
        for (auto d : face)
            walk.push_back({d.from, d.to});
        faces.push_back(walk);
    }
    if (parse_report_format(s.format) == ReportFormat::json) {
        emit(s, json{{"V", summary.vertices}, {"E", summary.edges}, {"F", summary.faces},
                {"euler_genus", summary.euler_genus}, {"orientable", summary.orientable},
                {"genus", summary.genus}, {"faces", faces}}, std::cout);
        return 0;
    }
    std::cout << "V=" << summary.vertices << " E=" << summary.edges << " F=" << summary.faces
              << " euler_genus=" << summary.euler_genus << ' ' << to_string(summary.surface())
              << (summary.orientable ? " h=" : " k=") << summary.genus << '\n';
    for (std::size_t f = 0 ; f < trace.faces.size() ; ++f) {
        std::cout << "face " << f << " (" << trace.faces[f].size() << "):";
        for (auto d : trace.faces[f])
            std::cout << ' ' << d.from;
        std::cout << '\n';
    }
    return 0;
}

auto cmd_curvature(const Settings & s) -> int
{
    auto rs = read_embedding_for(s);
    auto summary = embedding_summary(rs);
    SurfaceSpec surface{summary.surface(), summary.genus};
    if (s.surface != "both")
        surface.surface = parse_surface(s.surface);
    if (s.genus)
        surface.genus = *s.genus;

    auto report = curvature_table(rs.graph(), rs, surface);
    bool identities = check_euler_identities(report, summary);
    auto format = parse_report_format(s.format);

    if (format == ReportFormat::json) {
        json rows = json::array();
        for (auto & e : report.per_edge)
            rows.push_back({{"u", e.edge.u}, {"v", e.edge.v}, {"w", to_string(e.w)}, {"f", to_string(e.f)},
                    {"m1", e.m1}, {"m2", e.m2}, {"curvature", to_string(e.curvature)}});
        std::cout << json{{"surface", to_string(surface.surface)}, {"genus", surface.genus}, {"edges", rows},
            {"sum_w", to_string(report.sum_w)}, {"sum_f", to_string(report.sum_f)},
            {"sum_curvature", to_string(report.sum_curvature)}, {"identities_hold", identities}}.dump(2) << '\n';
    }
    else if (format == ReportFormat::csv) {
        std::cout << "u,v,w,f,m1,m2,curvature\n";
        for (auto & e : report.per_edge)
            std::cout << e.edge.u << ',' << e.edge.v << ',' << to_string(e.w) << ',' << to_string(e.f) << ','
                      << e.m1 << ',' << e.m2 << ',' << to_string(e.curvature) << '\n';
    }
    else {
        std::cout << to_string(surface.surface) << " genus " << surface.genus << '\n';
        for (auto & e : report.per_edge)
            std::cout << '(' << e.edge.u << ',' << e.edge.v << ") w=" << to_string(e.w) << " f=" << to_string(e.f)
                      << " m'=" << e.m1 << " m''=" << e.m2 << " curvature=" << to_string(e.curvature) << '\n';
        std::cout << "sum_w=" << to_string(report.sum_w) << " sum_f=" << to_string(report.sum_f)
                  << " sum_curvature=" << to_string(report.sum_curvature)
                  << " identities " << (identities ? "hold" : "FAIL") << '\n';
    }
    return identities ? 0 : 3;
}

auto cmd_constant(const Settings & s) -> int
{
    if (! s.genus)
        throw Error(ErrorCode::InvalidArgument, "--genus is required");
    auto surface = parse_surface(s.surface == "both" ? "orientable" : s.surface);
    int c = improved_constant(surface, *s.genus);
    int general = surface == SurfaceClass::orientable ? *s.genus + 2 : *s.genus + 1;
    emit(s, json{{"surface", to_string(surface)}, {"genus", *s.genus}, {"constant", c}, {"general_constant", general}},
            std::cout);
    return 0;
}

auto cmd_bounds(const Settings & s) -> int
{
    auto g = read_input_graph(s);
    auto h = s.h, k = s.k;
    if (is_connected(g)) {
        if (! h)
            h = min_genus(g, SurfaceClass::orientable, {s.budget}).genus;
        if (! k)
            k = min_genus(g, SurfaceClass::non_orientable, {s.budget}).genus;
    }
    auto suite = bound_suite(g, h, k);
    json record;
    record["h"] = h ? json(*h) : json(nullptr);
    record["k"] = k ? json(*k) : json(nullptr);
    for (auto [name, value] : populated_bounds(suite))
        record[name] = value;
    record["best"] = suite.best;
    emit(s, record, std::cout);
    return 0;
}

auto cmd_survey(const Settings & s) -> int
{
    SurveyOptions options{{s.budget}, s.bondage_cap, s.threads};
    SurveyResult result;
    if (s.input.empty() || s.input == "-")
        result = run_survey(std::cin, options);
    else {
        std::ifstream in(s.input);
        if (! in)
            throw Error(ErrorCode::ParseError, "cannot open " + s.input);
        result = run_survey(in, options);
    }

    auto text = format_survey(result, parse_report_format(s.format));
    if (s.report.empty())
        std::cout << text;
    else {
        std::ofstream out(s.report);
        if (! out)
            throw Error(ErrorCode::InvalidArgument, "cannot write " + s.report);
        out << text;
        std::cout << result.rows.size() << " rows written to " << s.report
                  << ", exit " << static_cast<int>(result.status) << '\n';
    }
    return static_cast<int>(result.status);
}

auto cmd_gen(const Settings & s) -> int
{
    if (s.gen_args.empty())
        throw Error(ErrorCode::InvalidArgument, "gen needs a family name");
    std::vector<int> params;
    for (std::size_t i = 1 ; i < s.gen_args.size() ; ++i) {
        try {
            params.push_back(std::stoi(s.gen_args[i]));
        }
        catch (const std::exception &) {
            throw Error(ErrorCode::InvalidArgument, "family parameters must be integers");
        }
    }

    if (s.gen_args[0] == "connected") {
        if (params.size() != 1)
            throw Error(ErrorCode::InvalidArgument, "gen connected takes the vertex count");
        for (int n = 1 ; n <= params[0] ; ++n)
            for (auto & g : connected_graphs(n, s.max_edges))
                std::cout << write_graph6(g) << '\n';
        return 0;
    }

    auto g = generate({parse_family(s.gen_args[0]), params, s.seed});
    std::cout << write_graph6(g) << '\n';
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"bondlab: domination, bondage and surface-embedding laboratory"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Settings s;

    app.add_option("--format", s.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto with_input = [&] (CLI::App * sub) {
        sub->add_option("input", s.input, "Graph file (graph6 or edge list); standard input when omitted");
        sub->fallthrough();
        return sub;
    };
    auto with_budget = [&] (CLI::App * sub) {
        sub->add_option("--budget", s.budget, "Maximum face traces per genus search")->check(CLI::PositiveNumber);
        return sub;
    };

    auto gamma = with_input(app.add_subcommand("gamma", "Domination number and a minimum dominating set"));
    auto bondage = with_input(app.add_subcommand("bondage", "Exact bondage number"));
    bondage->add_option("--bondage-cap", s.bondage_cap, "Largest edge-set size to try");
    auto hr = with_input(app.add_subcommand("hr", "Hartnell-Rall and degree bounds"));
    auto genus = with_budget(with_input(app.add_subcommand("genus", "Minimum orientable / non-orientable genus")));
    genus->add_option("--class", s.surface, "orientable, non-orientable or both");
    auto faces = with_input(app.add_subcommand("faces", "Face walks of an embedding"));
    faces->add_option("--embedding", s.embedding, "Embedding file")->required();
    auto curvature = with_input(app.add_subcommand("curvature", "Exact edge curvatures of an embedding"));
    curvature->add_option("--embedding", s.embedding, "Embedding file")->required();
    curvature->add_option("--class", s.surface, "Override the surface class");
    curvature->add_option("--genus", s.genus, "Override the surface genus");
    auto constant = app.add_subcommand("constant", "Improved additive constant c in b(G) <= Delta + c");
    constant->add_option("--class", s.surface, "orientable or non-orientable")->required();
    constant->add_option("--genus", s.genus, "Surface genus")->required();
    constant->fallthrough();
    auto bounds = with_budget(with_input(app.add_subcommand("bounds", "Every applicable upper bound on b(G)")));
    bounds->add_option("--h", s.h, "Orientable genus (computed when omitted)");
    bounds->add_option("--k", s.k, "Non-orientable genus (computed when omitted)");
    auto survey = with_budget(with_input(app.add_subcommand("survey", "Verify all bounds over a graph6 corpus")));
    survey->add_option("--bondage-cap", s.bondage_cap, "Largest edge-set size to try");
    survey->add_option("--report", s.report, "Write the report to PATH");
    survey->add_option("--threads", s.threads, "Worker threads (0 = hardware)");
    auto gen = app.add_subcommand("gen", "Generate a family member as graph6");
    gen->add_option("family", s.gen_args, "Family name and integer parameters")->required();
    gen->add_option("--seed", s.seed, "Seed for gnp");
    gen->add_option("--max-edges", s.max_edges, "Edge limit for 'gen connected N'");
    gen->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gamma) return cmd_gamma(s);
        if (*bondage) return cmd_bondage(s);
        if (*hr) return cmd_hr(s);
        if (*genus) return cmd_genus(s);
        if (*faces) return cmd_faces(s);
        if (*curvature) return cmd_curvature(s);
        if (*constant) return cmd_constant(s);
        if (*bounds) return cmd_bounds(s);
        if (*survey) return cmd_survey(s);
        if (*gen) return cmd_gen(s);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "bondlab: " << e.what() << '\n';
        return 2;
    }
    catch (const Error & e) {
        std::cerr << "bondlab: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "bondlab: internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
