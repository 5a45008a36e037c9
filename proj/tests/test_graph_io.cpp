#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include <k33lab/decomposition.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/graph_io.hpp>

using namespace k33lab;

namespace
{

int parse_error_line(std::string_view text)
{
    try {
        parse_graph(text, "t");
    } catch (const ParseError &e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("parse and format")
{
    const Graph g = parse_graph("# triangle\n\nn 3\n0 1\n1 2 # last\n0 2\n");
    CHECK(g == Graph::complete(3));
    CHECK(parse_graph(format_graph(Graph::complete(6))) == Graph::complete(6));
    CHECK(parse_graph("n 4\n").m() == 0);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("m 3\n") == 1);
    CHECK(parse_error_line("n 3\n0 1\n1 3\n") == 3);
    CHECK(parse_error_line("n 3\n1 0\n") == 2);
    CHECK(parse_error_line("n 3\n0 1\n0 1\n") == 3);
    CHECK(parse_error_line("n 3\n0 1 2\n") == 2);
    CHECK(parse_error_line("# c\nn x\n") == 2);
    CHECK(parse_error_line("n 99\n") == 1);
}

TEST_CASE("read from a file")
{
    const std::string path = "test_graph_io_k5.txt";
    {
        std::ofstream out(path);
        out << format_graph(Graph::complete(5));
    }
    CHECK(read_graph_file(path) == Graph::complete(5));
    CHECK_THROWS(read_graph_file("no/such/file.txt"));
}

TEST_CASE("decomposition JSON")
{
    const Graph k5 = Graph::complete(5);
    const auto j = nlohmann::json::parse(decomposition_json(k5, decompose(k5)));
    CHECK(j["accepted"] == true);
    CHECK(j["reason"] == "accepted");
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 10);
    CHECK(j["corners"] == nlohmann::json::array({0, 1, 2, 3, 4}));
    REQUIRE(j["components"].size() == 10);
    const auto &c = j["components"][0];
    CHECK(c["pair"] == nlohmann::json::array({0, 1}));
    CHECK(c["poles"]["0"] == 0);
    CHECK(c["poles"]["1"] == 1);
    CHECK(c["pole_edge"] == true);
    CHECK(c["edges"].size() == 1);

    const Graph k6 = Graph::complete(6);
    const auto r = nlohmann::json::parse(decomposition_json(k6, decompose(k6), 0));
    CHECK(r["accepted"] == false);
    CHECK(r["reason"] == "K33");
    CHECK_FALSE(r.contains("components"));
}
