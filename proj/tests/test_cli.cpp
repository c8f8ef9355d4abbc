#include <json.hpp>

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    std::string out;
    int status = -1;
};

auto run(const std::string & args, const std::string & input = "") -> Run
{
    auto dir = std::filesystem::temp_directory_path();
    auto in_path = dir / "bondlab_cli_test_input";
    std::ofstream(in_path) << input;
    std::string command = std::string(BONDLAB_CLI_PATH) + " " + args + " < " + in_path.string() + " 2>&1";
    Run r;
    FILE * pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.out.append(buffer.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST_CASE("gen prints graph6")
{
    CHECK(run("gen complete 4").out == "C~\n");
    CHECK(run("gen cycle 4").out == "Cl\n");
    CHECK(run("gen petersen").out == "IheA@GUAo\n");
    CHECK(run("gen gnp 12 1 3 --seed 5").out == run("gen gnp 12 1 3 --seed 5").out);
    auto connected = run("gen connected 5");
    CHECK(connected.status == 0);
    CHECK(std::count(connected.out.begin(), connected.out.end(), '\n') == 1 + 1 + 2 + 6 + 21);
    CHECK(run("gen moebius 3").status == 2);
}

TEST_CASE("per-graph commands")
{
    CHECK(run("gamma", "Cl\n").out.find("gamma: 2") != std::string::npos);
    auto b = run("bondage --format json", "Cl\n");
    CHECK(b.status == 0);
    auto doc = nlohmann::json::parse(b.out);
    CHECK(doc["bondage"] == 3);
    CHECK(doc["witness"].size() == 3);
    CHECK(run("hr", "4 4\n0 1\n1 2\n2 3\n3 0\n").out.find("hr: 3") != std::string::npos);
    auto genus = nlohmann::json::parse(run("genus --format json", "D~{\n").out);
    CHECK(genus["h"] == 1);
    CHECK(genus["k"] == 1);
    auto bounds = nlohmann::json::parse(run("bounds --format json", "Cl\n").out);
    CHECK(bounds["best"] == 3);
    CHECK(bounds["planar"] == 4);
    auto constant = run("constant --class non-orientable --genus 464");
    CHECK(constant.out.find("constant: 53") != std::string::npos);
}

TEST_CASE("embedding commands")
{
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / "bondlab_cli_test_c4.emb";
    std::ofstream(path) << "0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\n";
    auto faces = run("faces --embedding " + path.string());
    CHECK(faces.status == 0);
    CHECK(faces.out.find("F=2") != std::string::npos);
    auto curvature = run("curvature --format csv --embedding " + path.string());
    CHECK(curvature.status == 0);
    CHECK(curvature.out.find("0,1,1/1,1/2,4,4,0/1") != std::string::npos);
    CHECK(run("curvature --genus 1 --embedding " + path.string()).status == 2);
    CHECK(run("faces --embedding " + path.string() + " -", "C~\n").status == 2);
}

TEST_CASE("survey exit codes and reports")
{
    auto ok = run("survey", "C~\nDhc\nEFz_\n");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("0 not ok") != std::string::npos);

    std::string p65 = "~?@@" + std::string((65 * 64 / 2 + 5) / 6, '?') + "\n";
    auto bad = run("survey", "C~\n" + p65);
    CHECK(bad.status == 2);
    CHECK(bad.out.find("SizeLimit") != std::string::npos);
    CHECK(run("gamma", p65).status == 2);

    auto report = std::filesystem::temp_directory_path() / "bondlab_cli_test_report.csv";
    auto written = run("survey --format csv --report " + report.string(), "C~\nCl\n");
    CHECK(written.status == 0);
    std::ifstream in(report);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("name,n,m,delta,Delta", 0) == 0);

    auto first = run("survey --format json", "C~\nCl\nD~{\n");
    auto second = run("survey --format json", "C~\nCl\nD~{\n");
    CHECK(first.out == second.out);
}

TEST_CASE("usage errors")
{
    CHECK(run("").status == 2);
    CHECK(run("gamma --format yaml", "C~\n").status == 2);
    CHECK(run("bondage --bondage-cap 1", "Cl\n").status == 2);
}
