#include <bondlab/error.hpp>
#include <bondlab/generators.hpp>
#include <bondlab/graph_io.hpp>

#include <doctest.h>

#include <sstream>

using namespace bondlab;

TEST_CASE("known encodings")
{
    CHECK(write_graph6(generate({Family::complete, {4}})) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(generate({Family::cycle, {4}})) == "Cl");
    CHECK(write_graph6(generate({Family::path, {2}})) == "A_");
    CHECK(write_graph6(generate({Family::petersen, {}})) == "IheA@GUAo");
    CHECK(parse_graph6("C~") == generate({Family::complete, {4}}));
    CHECK(parse_graph6(">>graph6<<Cl\n") == generate({Family::cycle, {4}}));
}

TEST_CASE("long form for 63 and 64 vertices")
{
    for (int n : {62, 63, 64}) {
        auto g = generate({Family::cycle, {n}});
        auto text = write_graph6(g);
        if (n <= 62)
            CHECK(text[0] == static_cast<char>(n + 63));
        else {
            CHECK(text[0] == '~');
            CHECK(((text[1] - 63) << 12 | (text[2] - 63) << 6 | (text[3] - 63)) == n);
        }
        CHECK(text.size() == (n <= 62 ? 1U : 4U) + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("seeded round trips")
{
    for (std::uint64_t seed = 0 ; seed < 1000 ; ++seed) {
        int n = 1 + static_cast<int>(seed % 64);
        auto g = generate({Family::gnp, {n, 1 + static_cast<int>(seed % 5), 6}, seed});
        auto text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
}

TEST_CASE("malformed input")
{
    auto code_of = [] (std::string_view text) {
        try {
            parse_graph6(text);
        }
        catch (const Error & e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of("") == ErrorCode::ParseError);
    CHECK(code_of("?") == ErrorCode::ParseError);
    CHECK(code_of("C") == ErrorCode::ParseError);
    CHECK(code_of("C~~") == ErrorCode::ParseError);
    CHECK(code_of("C ~") == ErrorCode::ParseError);
    CHECK(code_of("~?@@") == ErrorCode::SizeLimit);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n2"), Error);
}

TEST_CASE("format detection and corpus lines")
{
    CHECK(parse_graph_auto("4 4\n0 1\n1 2\n2 3\n3 0\n") == generate({Family::cycle, {4}}));
    CHECK(parse_graph_auto("  C~\n") == generate({Family::complete, {4}}));
    std::istringstream in(">>graph6<<C~\n\nCl\r\n@\n");
    auto lines = read_graph6_lines(in);
    CHECK(lines == std::vector<std::string>{"C~", "Cl", "@"});
}
