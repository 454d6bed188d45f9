#include <gtest/gtest.h>

#include <filesystem>

#include "isolab/edge_list.hpp"
#include "isolab/error.hpp"
#include "isolab/process.hpp"

namespace isolab {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a triangle\nn 3\n\n0 1  # first\n2 1\n0 2\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, CanonicalWriteIsSortedWithHeader) {
  const Graph g = Graph::from_edges(4, {Edge{3, 2}, Edge{1, 0}});
  EXPECT_EQ(write_edge_list(g), "n 4\n0 1\n2 3\n");
}

TEST(EdgeList, RoundTripIsIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = sample_gnp(30, 0.2, seed);
    const std::string text = write_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g);
    EXPECT_EQ(write_edge_list(parse_edge_list(text)), text);
  }
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("n 3\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(error_line("n 3\n0 3\n"), 2u);
  EXPECT_EQ(error_line("n 3\n0 1\n# c\n1 0\n"), 4u);
  EXPECT_EQ(error_line("0 1\n"), 1u);
  EXPECT_EQ(error_line("n 3\n0 x\n"), 2u);
  EXPECT_EQ(error_line("n 3\n0 1 2\n"), 2u);
}

TEST(EdgeList, FileRoundTripAndMissingFile) {
  const auto path = std::filesystem::temp_directory_path() / "isolab_edge_list_test.txt";
  const Graph g = cycle_graph(5);
  write_edge_list_file(g, path.string());
  EXPECT_EQ(read_edge_list_file(path.string()), g);
  std::filesystem::remove(path);
  EXPECT_THROW(read_edge_list_file(path.string()), IoError);
}

}  // namespace
}  // namespace isolab
