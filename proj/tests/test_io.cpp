#include <sstream>

#include "doctest.h"
#include "rdegree/error.hpp"
#include "rdegree/family.hpp"
#include "rdegree/io.hpp"

using namespace rdegree;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rdegree::Error");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("edge list: basic parsing") {
  CHECK(parse_edge_list("0 1\n1 2\n").graph == generate_family({Family::Path, 3}));
  CHECK(parse_edge_list("# comment\n0 1\n").graph == Graph::build(2, {{0, 1}}));
  CHECK(parse_edge_list("\n  0\t1  \n\n# x\n1 2\n").graph.size() == 2);
  CHECK(parse_edge_list("").graph.order() == 0);
}

TEST_CASE("edge list: errors") {
  CHECK(code_of([] { parse_edge_list("0 0\n"); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { parse_edge_list("0 1\n1 0\n"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_edge_list("0 x\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_edge_list("0 -1\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_edge_list("0 1 2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_edge_list("0 1\nn 4\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_edge_list("n 3\n0 3\n"); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("edge list: declared order keeps isolated vertices") {
  const auto parsed = parse_edge_list("n 5\n0 1\n1 2\n");
  CHECK(parsed.graph.order() == 5);
  CHECK(parsed.graph.degree(4) == 0);
  CHECK(parse_edge_list("n 3\n").graph.size() == 0);
}

TEST_CASE("edge list: sparse ids are compacted in order") {
  const auto parsed = parse_edge_list("1 2\n2 3\n3 1\n");
  CHECK(parsed.graph == generate_family({Family::Complete, 3}));
  CHECK(parsed.labels == std::vector<std::uint64_t>{1, 2, 3});

  const auto sparse = parse_edge_list("10 40\n40 7\n");
  CHECK(sparse.labels == std::vector<std::uint64_t>{7, 10, 40});
  CHECK(sparse.graph == Graph::build(3, {{1, 2}, {2, 0}}));
}

TEST_CASE("edge list: writer round-trips") {
  for (Family f : kAllFamilies) {
    const auto g = generate_family({f, 7});
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(parse_edge_list(out.str()).graph == g);
  }
}

TEST_CASE("graph6: decoding") {
  // 'D' = 5 vertices; "?{" = 000000 111100 sets bits 6..9, i.e. edges (0..3, 4).
  CHECK(parse_graph6("D?{") == Graph::build(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(parse_graph6("A_") == Graph::build(2, {{0, 1}}));
  CHECK(parse_graph6("@") == Graph::build(1, {}));
  CHECK(parse_graph6("?") == Graph::build(0, {}));
  CHECK(parse_graph6("EhEG\n") == generate_family({Family::Cycle, 6}));
  CHECK(parse_graph6("DhC\r\n") == generate_family({Family::Path, 5}));
  CHECK(parse_graph6(">>graph6<<C~") == generate_family({Family::Complete, 4}));
}

TEST_CASE("graph6: errors") {
  CHECK(code_of([] { parse_graph6("D? {"); }) == ErrorCode::InvalidCharacter);
  CHECK(code_of([] { parse_graph6("A\x7f"); }) == ErrorCode::InvalidCharacter);
  CHECK(code_of([] { parse_graph6("D?"); }) == ErrorCode::TruncatedData);
  CHECK(code_of([] { parse_graph6("A"); }) == ErrorCode::TruncatedData);
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::TruncatedData);
  CHECK(code_of([] { parse_graph6("A__"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_graph6("~?@?"); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("graph6: encoding") {
  CHECK(write_graph6(Graph::build(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(Graph::build(1, {})) == "@");
  CHECK(write_graph6(generate_family({Family::Cycle, 6})) == "EhEG");
  CHECK(write_graph6(generate_family({Family::Complete, 4})) == "C~");
  CHECK(write_graph6(generate_family({Family::Star, 62})).size() == 1 + (62 * 61 / 2 + 5) / 6);
  CHECK(code_of([] { write_graph6(generate_family({Family::Path, 63})); }) ==
        ErrorCode::OrderTooLarge);
}

TEST_CASE("graph6: round-trip on random graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = generate_random_connected(1 + seed % 62, 0.02 * static_cast<double>(seed % 50), seed);
    const std::string line = write_graph6(g);
    CHECK(parse_graph6(line) == g);
    CHECK(write_graph6(parse_graph6(line)) == line);
  }
}

TEST_CASE("edge list: header only when isolated vertices exist") {
  std::ostringstream plain;
  write_edge_list(generate_family({Family::Cycle, 5}), plain);
  CHECK(plain.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");

  std::ostringstream padded;
  const auto g = Graph::build(4, {{0, 1}});
  write_edge_list(g, padded);
  CHECK(padded.str() == "n 4\n0 1\n");
  CHECK(parse_edge_list(padded.str()).graph == g);
}
