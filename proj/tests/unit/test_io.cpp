#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "multicover/hypergraph.hpp"
#include "multicover/io.hpp"
#include "test_fixtures.hpp"

using namespace multicover;

TEST_CASE("text parse reads 1-based indices and comments") {
  std::istringstream in(
      "# demo instance\n"
      "3 4\n"
      "2 2 2\n"
      "1 2\n"
      "2 3\n"
      "# trailing comment\n"
      "1 3\n"
      "1 2 3\n");
  Hypergraph h = parse_instance_text(in);
  CHECK(h == fixtures::triangle_plus_full());
}

TEST_CASE("text round-trip is identity") {
  Hypergraph h = fixtures::triangle_plus_full();
  std::ostringstream out;
  write_instance_text(out, h);
  std::istringstream in(out.str());
  CHECK(parse_instance_text(in) == h);
}

TEST_CASE("json round-trip is identity") {
  Hypergraph h = fixtures::disjoint_pairs();
  std::ostringstream out;
  write_instance_json(out, h);
  std::istringstream in(out.str());
  CHECK(parse_instance_json(in) == h);
}

TEST_CASE("text parse rejects malformed input") {
  std::istringstream missing("3 4\n2 2 2\n1 2\n");
  CHECK_THROWS_AS(parse_instance_text(missing), ParseError);

  std::istringstream junk("x y\n");
  CHECK_THROWS_AS(parse_instance_text(junk), ParseError);

  std::istringstream short_demands("2 1\n2\n1 2\n");
  CHECK_THROWS_AS(parse_instance_text(short_demands), ParseError);
}

TEST_CASE("json parse rejects malformed input") {
  std::istringstream bad("{\"n\": 2, \"demands\": [2, 2]}");
  CHECK_THROWS_AS(parse_instance_json(bad), ParseError);

  std::istringstream not_json("not json at all");
  CHECK_THROWS_AS(parse_instance_json(not_json), ParseError);
}

TEST_CASE("write_instance_files emits matching text and json") {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "multicover_io_test";
  Hypergraph h = fixtures::triangle_plus_full();
  write_instance_files(base, h);
  Hypergraph from_text = read_instance(base.string() + ".txt");
  Hypergraph from_json = read_instance(base.string() + ".json");
  CHECK(from_text == h);
  CHECK(from_json == h);
  fs::remove(base.string() + ".txt");
  fs::remove(base.string() + ".json");
}
