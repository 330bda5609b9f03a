#include "avoidable/generators.hpp"
#include "avoidable/io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace avoidable;
using namespace avoidable::io;

TEST_CASE("edge list parsing")
{
    auto parsed = parse_edge_list("# path\n4 3\n0 1\n\n1 2\n# middle\n2 3\n");
    CHECK(parsed.graph.edges() == make_path(4).edges());
    CHECK(parsed.warnings.empty());

    auto dup = parse_edge_list("3 3\n0 1\n1 0\n1 2\n");
    CHECK(dup.graph.edge_count() == 2);
    CHECK(dup.warnings.size() == 1);

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);

    CHECK(parse_edge_list("0 0\n").graph.order() == 0);
}

TEST_CASE("edge list canonical form")
{
    CHECK(serialize_edge_list(make_cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    // parse . serialize is the identity on canonical documents
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto text = serialize_edge_list(gnp(9, 0.4, Seed{seed}));
        CHECK(serialize_edge_list(parse_edge_list(text).graph) == text);
    }
}

TEST_CASE("graph6 against reference strings")
{
    // produced by networkx.to_graph6_bytes
    CHECK(encode_graph6(make_cycle(5)) == "Dhc");
    CHECK(encode_graph6(make_path(4)) == "Ch");
    CHECK(encode_graph6(make_complete(4)) == "C~");
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    auto petersen = Graph::build(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                         {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
    CHECK(encode_graph6(petersen) == "IheA@GUAo");
    CHECK(parse_graph6("IheA@GUAo\n").edges() == petersen.edges());
    CHECK(parse_graph6(">>graph6<<Dhc").edges() == make_cycle(5).edges());

    auto c70 = encode_graph6(make_cycle(70));
    CHECK(c70.size() == 407);
    CHECK(c70.substr(0, 12) == "~?@EhCGGC@?G");
    CHECK(parse_graph6(c70).edges() == make_cycle(70).edges());

    CHECK_THROWS_AS(parse_graph6("D"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Dhc~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D h"), ParseError);
}

TEST_CASE("graph6 round trip")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gnp(1 + seed % 20, 0.5, Seed{seed});
        CHECK(parse_graph6(encode_graph6(g)).edges() == g.edges());
    }
}

TEST_CASE("read_graphs detects the format")
{
    auto one = read_graphs("# c\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0].graph.edges() == make_cycle(5).edges());

    auto stream = read_graphs("Dhc\nCh\n\nC~\n");
    REQUIRE(stream.size() == 3);
    CHECK(stream[1].graph.edges() == make_path(4).edges());

    CHECK_THROWS_AS(read_graphs("Dhc\nD\n"), ParseError);
    CHECK(read_graphs("Dhc", Format::graph6).size() == 1);
    CHECK_THROWS_AS(read_graphs("Dhc", Format::edge_list), ParseError);
}

TEST_CASE("digest")
{
    auto d = digest(make_cycle(5));
    CHECK(d.rfind("sha256:", 0) == 0);
    CHECK(d.size() == 7 + 64);
    CHECK(d == digest(parse_graph6("Dhc")));
    CHECK(d != digest(make_path(5)));
    // sha256 of "0 0\n"
    CHECK(digest(Graph(0)) == "sha256:0ccdb5a77ba5bf7687f2565a8ed97dfb9c1af45503c496fb646312239fab5101");
}
