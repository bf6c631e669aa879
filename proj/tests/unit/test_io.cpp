#include <canonram/adversaries.hpp>
#include <canonram/errors.hpp>
#include <canonram/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "support/oracles.hpp"

using namespace canonram;

namespace {

std::size_t parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_graph(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(GraphIo, RoundTrip) {
    auto rng = oracle::rng_for(40);
    const auto g = oracle::random_graph(25, 0.3, rng);
    std::stringstream s;
    write_graph(s, g);
    EXPECT_EQ(read_graph(s), g);
}

TEST(GraphIo, CommentsAndBlankLines) {
    std::istringstream in("# header\n\n3 2\n1 2\n# middle\n3 2\n");
    const auto g = read_graph(in);
    EXPECT_EQ(g, OrderedGraph(3, {{1, 2}, {2, 3}}));
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("3 2\n1 2\n2 2\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2\n1 2\n1 4\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2\n1 2\n2 1\n"), 3u);
    EXPECT_EQ(parse_error_line("3 2\n1 x\n"), 2u);
    EXPECT_EQ(parse_error_line("3 2\n1 2 3\n"), 2u);
    EXPECT_EQ(parse_error_line("3 4\n"), 1u);
    EXPECT_NE(parse_error_line("3 2\n1 2\n"), 0u);
    EXPECT_NE(parse_error_line("3 1\n1 2\n2 3\n"), 0u);
}

TEST(ColouringIo, RoundTripWithAndWithoutHost) {
    auto g = oracle::shared(gnp_generate(15, 0.5, 3).graph);
    AdversarySpec s;
    s.kind = AdversaryKind::RandomR;
    s.r = 4;
    s.seed = 5;
    const auto phi = generate_colouring(g, s);
    std::stringstream a;
    write_colouring(a, phi);
    const std::string text = a.str();
    std::istringstream b(text), c(text);
    const auto with_host = read_colouring(b, g);
    const auto standalone = read_colouring(c);
    EXPECT_TRUE(std::equal(phi.colours().begin(), phi.colours().end(), with_host.colours().begin()));
    EXPECT_EQ(standalone.host(), *g);
    EXPECT_TRUE(std::equal(phi.colours().begin(), phi.colours().end(), standalone.colours().begin()));
}

TEST(ColouringIo, MustCoverHost) {
    auto g = oracle::shared(OrderedGraph::complete(3));
    std::istringstream partial("3 2\n1 2 0\n1 3 1\n");
    EXPECT_THROW(read_colouring(partial, g), ParseError);
    std::istringstream foreign("3 3\n1 2 0\n1 3 1\n2 4 0\n");
    EXPECT_THROW(read_colouring(foreign, g), ParseError);
    std::istringstream wrong_n("4 3\n1 2 0\n1 3 1\n2 3 0\n");
    EXPECT_THROW(read_colouring(wrong_n, g), ParseError);
}

TEST(WeightedIo, RoundTripIsExact) {
    auto rng = oracle::rng_for(41);
    const auto f = oracle::random_weights(9, rng, -3, 3);
    std::stringstream s;
    write_weighted(s, f);
    EXPECT_EQ(read_weighted(s), f);
}

TEST(WeightedIo, RejectsBadPairs) {
    std::istringstream out_of_order("3\n1 2 0.5\n2 3 0.5\n1 3 0.5\n");
    EXPECT_THROW(read_weighted(out_of_order), ParseError);
    std::istringstream not_finite("2\n1 2 inf\n");
    EXPECT_THROW(read_weighted(not_finite), ParseError);
}

TEST(FileIo, SaveAndLoad) {
    const auto dir = std::filesystem::temp_directory_path() / "canonram_io_test";
    std::filesystem::create_directories(dir);
    const auto g = OrderedGraph::complete(5);
    save_graph(dir / "g.txt", g);
    EXPECT_EQ(load_graph(dir / "g.txt"), g);
    EXPECT_THROW(load_graph(dir / "missing.txt"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
