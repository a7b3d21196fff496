#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cobar/io.hpp"

using namespace cobar;

namespace {
std::string write_temp(const std::string& stem, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / (stem + ".json");
  std::ofstream out(path);
  out << text;
  return path.string();
}
}  // namespace

TEST_CASE("presentations survive a JSON round trip") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const auto original = builtin(name);
    const std::string text = presentation_to_json(original);
    const auto back = presentation_from_json(text);
    CHECK(back.name() == original.name());
    CHECK(back.top_dim() == original.top_dim());
    for (int d = 0; d <= original.top_dim(); ++d) {
      CHECK(back.count(d) == original.count(d));
      for (int i = 0; i < original.count(d); ++i) {
        CHECK(back.generator({d, i}).id == original.generator({d, i}).id);
        CHECK(back.generator({d, i}).faces == original.generator({d, i}).faces);
      }
    }
    CHECK(presentation_to_json(back) == text);
  }
}

TEST_CASE("a hand-written document parses to the projective plane") {
  const std::string text = R"({
    "name": "by-hand",
    "simplices": {
      "0": [ { "id": "v" } ],
      "1": [ { "id": "a", "faces": ["v", "v"] } ],
      "2": [ { "id": "t", "faces": ["a", "s0 v", "a"] } ]
    }
  })";
  const auto s = presentation_from_json(text);
  CHECK(s.name() == "by-hand");
  CHECK(s.count(2) == 1);
  CHECK(s.face(FormalSimplex{{}, s.lookup("t")}, 1).is_degenerate());
  CHECK(s.generator(s.lookup("t")).faces[0] == FormalSimplex{{}, s.lookup("a")});
}

TEST_CASE("malformed presentation documents are rejected") {
  CHECK_THROWS_AS(presentation_from_json("{"), input_error);
  CHECK_THROWS_AS(presentation_from_json("[1, 2]"), input_error);
  CHECK_THROWS_AS(presentation_from_json(R"({"simplices": {}})"), input_error);
  CHECK_THROWS_AS(presentation_from_json(R"({"name": "x"})"), input_error);
  CHECK_THROWS_AS(presentation_from_json(R"({"name": "x", "simplices": []})"), input_error);
  // bad dimension keys
  CHECK_THROWS_AS(presentation_from_json(R"({"name": "x", "simplices": {"one": []}})"),
                  input_error);
  CHECK_THROWS_AS(presentation_from_json(R"({"name": "x", "simplices": {"-1": []}})"),
                  input_error);
  // vertices with faces
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v", "faces": ["v"]}]}})"),
      input_error);
  // missing faces on an edge
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v"}], "1": [{"id": "a"}]}})"),
      input_error);
  // unknown face id
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v"}],
              "1": [{"id": "a", "faces": ["v", "w"]}]}})"),
      input_error);
  // bad degeneracy token
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v"}],
              "1": [{"id": "a", "faces": ["v", "v"]}],
              "2": [{"id": "t", "faces": ["a", "sx v", "a"]}]}})"),
      input_error);
  // wrong face count fails validation
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v"}],
              "1": [{"id": "a", "faces": ["v"]}]}})"),
      input_error);
  // duplicate ids in one dimension fail validation
  CHECK_THROWS_AS(
      presentation_from_json(
          R"({"name": "x", "simplices": {"0": [{"id": "v"}, {"id": "v"}]}})"),
      input_error);
}

TEST_CASE("group tables survive a JSON round trip") {
  for (const FiniteGroupTable& g :
       {cyclic_group(1), cyclic_group(4), symmetric_group_3(), quaternion_group_8()}) {
    CAPTURE(g.name);
    const std::string text = table_to_json(g);
    const FiniteGroupTable back = table_from_json(text);
    CHECK(back.name == g.name);
    CHECK(back.element_names == g.element_names);
    CHECK(back.mult == g.mult);
    CHECK(table_to_json(back) == text);
  }
}

TEST_CASE("malformed group tables are rejected") {
  CHECK_THROWS_AS(table_from_json("null"), input_error);
  CHECK_THROWS_AS(table_from_json(R"({"name": "g"})"), input_error);
  CHECK_THROWS_AS(table_from_json(R"({"name": "g", "elements": ["e"], "table": [[1]]})"),
                  input_error);
  // square but not a group: no identity row
  CHECK_THROWS_AS(
      table_from_json(
          R"({"name": "g", "elements": ["e", "x"], "table": [[1, 0], [0, 1]]})"),
      input_error);
  // ragged table
  CHECK_THROWS_AS(
      table_from_json(R"({"name": "g", "elements": ["e", "x"], "table": [[0, 1], [1]]})"),
      input_error);
}

TEST_CASE("edge maps resolve ids against space and group") {
  const auto rp2 = builtin("rp2");
  const auto z2 = cyclic_group(2);
  CHECK(edge_map_from_json(R"({"a": "t"})", rp2, z2) == std::vector<int>{1});
  CHECK(edge_map_from_json(R"({"a": "1"})", rp2, z2) == std::vector<int>{0});

  const auto torus = builtin("torus");
  CHECK(edge_map_from_json(R"({"a": "t", "b": "1", "c": "t"})", torus, z2) ==
        std::vector<int>{1, 0, 1});

  CHECK_THROWS_AS(edge_map_from_json(R"({})", rp2, z2), input_error);
  CHECK_THROWS_AS(edge_map_from_json(R"({"a": "nope"})", rp2, z2), input_error);
  CHECK_THROWS_AS(edge_map_from_json(R"({"v": "t"})", rp2, z2), input_error);
  CHECK_THROWS_AS(edge_map_from_json(R"({"a": 3})", rp2, z2), input_error);
}

TEST_CASE("specs resolve to builtins, named groups, or files") {
  CHECK(space_from_spec("klein").name() == "klein");
  CHECK(table_from_spec("Z/5").order() == 5);
  CHECK(table_from_spec("S3").order() == 6);
  CHECK(table_from_spec("Q8").order() == 8);

  const std::string path =
      write_temp("cobar_io_space", presentation_to_json(builtin("circle")));
  CHECK(space_from_spec(path).count(1) == 1);
  const std::string gpath = write_temp("cobar_io_group", table_to_json(cyclic_group(3)));
  CHECK(table_from_spec(gpath).order() == 3);
  std::remove(path.c_str());
  std::remove(gpath.c_str());

  CHECK_THROWS_WITH_AS(space_from_spec("nosuch"), "unknown example 'nosuch'", input_error);
  CHECK_THROWS_AS(table_from_spec("Z/x"), input_error);
  CHECK_THROWS_AS(table_from_spec("Z/0"), input_error);
  CHECK_THROWS_AS(read_text_file("/nonexistent/path"), input_error);
}
