#include "bergman/json_io.hpp"

#include <string>

#include "doctest.h"
#include "json.hpp"

#include "bergman/complex.hpp"
#include "bergman/errors.hpp"
#include "bergman/matroid.hpp"
#include "bergman/rational.hpp"
#include "bergman/treespace.hpp"
#include "bergman/weights.hpp"

using bergman::Matroid;
using bergman::Rational;
using bergman::Subset;
using nlohmann::json;

TEST_CASE("rationals from json") {
  CHECK(bergman::rational_from_json(json(3)) == 3);
  CHECK(bergman::rational_from_json(json("3/6")) == Rational(1, 2));
  CHECK(bergman::rational_from_json(json("-1/2")) == Rational(-1, 2));
  CHECK_THROWS_AS(bergman::rational_from_json(json(1.5)),
                  bergman::invalid_input);
  CHECK_THROWS_AS(bergman::rational_from_json(json(true)),
                  bergman::invalid_input);
  CHECK_THROWS_AS(bergman::rational_from_json(json("1/0")),
                  bergman::invalid_input);
}

TEST_CASE("matroids from json") {
  SUBCASE("graphic") {
    const Matroid m = bergman::matroid_from_json(json::parse(R"({
      "type": "graphic", "vertices": 4,
      "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]
    })"));
    CHECK(m.ground_size() == 6);
    CHECK(m.rank() == 3);
    CHECK(m.enumerate_bases().size() == 16);
    CHECK_THROWS_AS(bergman::matroid_from_json(json::parse(
                        R"({"type":"graphic","vertices":3,"edges":[[1]]})")),
                    bergman::invalid_input);
  }

  SUBCASE("uniform") {
    const Matroid m = bergman::matroid_from_json(
        json::parse(R"({"type":"uniform","r":2,"n":4})"));
    CHECK(m.rank() == 2);
    CHECK(m.ground_size() == 4);
    CHECK_THROWS_AS(
        bergman::matroid_from_json(json::parse(R"({"type":"uniform","r":2})")),
        bergman::invalid_input);
  }

  SUBCASE("linear") {
    const Matroid m = bergman::matroid_from_json(json::parse(R"({
      "type": "linear", "matrix": [[1, 0, "1/2"], [0, 1, 0]]
    })"));
    CHECK(m.ground_size() == 3);
    CHECK(m.rank() == 2);
    // third column is parallel to the first
    CHECK(m.rank_of(Subset{1, 3}) == 1);
  }

  SUBCASE("explicit bases") {
    const Matroid m = bergman::matroid_from_json(
        json::parse(R"({"type":"bases","n":3,"bases":[[1],[2]]})"));
    CHECK(m.rank() == 1);
    CHECK(m.loops() == Subset{3});
  }

  SUBCASE("schema errors") {
    CHECK_THROWS_AS(bergman::matroid_from_json(json::parse(R"([])")),
                    bergman::invalid_input);
    CHECK_THROWS_AS(bergman::matroid_from_json(json::parse(R"({"n":3})")),
                    bergman::invalid_input);
    CHECK_THROWS_AS(
        bergman::matroid_from_json(json::parse(R"({"type":"mystery"})")),
        bergman::invalid_input);
  }
}

TEST_CASE("weights to json and back") {
  const bergman::WeightVector w = {Rational(1, 2), 3, Rational(-1, 2)};
  const json j = bergman::weights_to_json(w);
  CHECK(j == json::parse(R"(["1/2","3","-1/2"])"));
  CHECK(bergman::weights_from_json(j) == w);
  CHECK(bergman::weights_from_json(json::parse(R"([1,"2/4"])")) ==
        bergman::WeightVector{1, Rational(1, 2)});
  CHECK_THROWS_AS(bergman::weights_from_json(json::parse(R"({"w":[]})")),
                  bergman::invalid_input);
}

TEST_CASE("flags serialize as their proper sets") {
  const bergman::Flag f =
      bergman::Flag::from_proper(4, {Subset{2}, Subset{2, 3}});
  CHECK(bergman::flag_to_json(f) == json::parse(R"([[2],[2,3]])"));
  CHECK(bergman::flag_to_json(bergman::Flag::trivial(4)) == json::array());
}

TEST_CASE("lattice json shape") {
  const json j = bergman::lattice_to_json(
      bergman::FlatLattice::of(Matroid::uniform(2, 3)));
  CHECK(j["rank"] == 2);
  CHECK(j["num_flats"] == 5);
  REQUIRE(j["flats"].size() == 5);
  CHECK(j["flats"][0] == json::parse(R"({"flat":[],"rank":0})"));
  CHECK(j["flats"][4] == json::parse(R"({"flat":[1,2,3],"rank":2})"));
}

TEST_CASE("complex json shape") {
  const auto sc = bergman::order_complex_fine(Matroid::uniform(2, 3));
  const json j = bergman::complex_to_json(sc);
  REQUIRE(j["vertices"].size() == 3);
  CHECK(j["vertices"][0] == json::parse(R"({"id":0,"flat":[1]})"));
  CHECK(j["maximal_faces"] == json::parse(R"([[0],[1],[2]])"));
}

TEST_CASE("coarse json shape") {
  const Matroid k4 = Matroid::complete_graph(4);
  const auto cells = bergman::coarse_cells(k4);
  const json j = bergman::coarse_to_json(bergman::order_complex_fine(k4), cells);
  CHECK(j["vertices"].size() == 13);
  REQUIRE(j["cells"].size() == 25);
  for (const auto& cell : j["cells"]) {
    CHECK(cell.contains("flags"));
    CHECK(cell["n_bases"].get<int>() > 0);
    for (const auto& flag : cell["flags"]) CHECK(flag.is_array());
  }
}

TEST_CASE("distance json round trip") {
  bergman::DissimilarityMap d(3);
  d.set(1, 2, Rational(3, 2));
  d.set(1, 3, 2);
  d.set(2, 3, 2);
  const json j = bergman::dist_to_json(d);
  CHECK(j["n"] == 3);
  CHECK(j["d"][0] == json::parse(R"(["0","3/2","2"])"));
  CHECK(bergman::dist_from_json(j) == d);

  CHECK_THROWS_AS(bergman::dist_from_json(json::parse(R"([1,2])")),
                  bergman::invalid_input);
  CHECK_THROWS_AS(
      bergman::dist_from_json(json::parse(R"({"n":2,"d":[["0","1"]]})")),
      bergman::invalid_input);
}

TEST_CASE("tree json round trip") {
  using Node = bergman::EquidistantTree::Node;
  Node cherry;
  cherry.height = Rational(1, 2);
  Node a;
  a.leaf = 1;
  Node b;
  b.leaf = 2;
  cherry.children = {a, b};
  Node c;
  c.leaf = 3;
  Node root;
  root.height = 1;
  root.children = {cherry, c};
  const bergman::EquidistantTree t(root, 3);

  const json j = bergman::tree_to_json(t);
  CHECK(j["height"] == "1");
  CHECK(j["children"][0]["height"] == "1/2");
  CHECK(j["children"][0]["children"][0] == json::parse(R"({"leaf":1})"));
  CHECK(bergman::tree_from_json(j) == t);

  SUBCASE("schema errors") {
    CHECK_THROWS_AS(bergman::tree_from_json(json::parse(R"(["leaf"])")),
                    bergman::invalid_input);
    CHECK_THROWS_AS(bergman::tree_from_json(json::parse(R"({"height":"1"})")),
                    bergman::invalid_input);
    CHECK_THROWS_AS(
        bergman::tree_from_json(json::parse(
            R"({"height":"1","children":{"leaf":1}})")),
        bergman::invalid_input);
    // leaf count decides n, so a skipped label is caught downstream
    CHECK_THROWS_AS(
        bergman::tree_from_json(json::parse(
            R"({"height":"1","children":[{"leaf":1},{"leaf":3}]})")),
        bergman::invalid_input);
  }
}

TEST_CASE("dot output") {
  SUBCASE("plain graph with partial labels") {
    bergman::SimpleGraph g;
    g.num_vertices = 3;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(bergman::graph_to_dot(g, "test", {"a", "b"}) ==
          "graph test {\n"
          "  v0 [label=\"a\"];\n"
          "  v1 [label=\"b\"];\n"
          "  v2;\n"
          "  v0 -- v1;\n"
          "  v1 -- v2;\n"
          "}\n");
  }

  SUBCASE("complex vertices are labeled by their flats") {
    const auto sc = bergman::order_complex_fine(Matroid::uniform(2, 3));
    CHECK(bergman::complex_to_dot(sc, "fine") ==
          "graph fine {\n"
          "  v0 [label=\"{1}\"];\n"
          "  v1 [label=\"{2}\"];\n"
          "  v2 [label=\"{3}\"];\n"
          "}\n");
  }

  SUBCASE("dimension above one is refused") {
    bergman::SimplicialComplex sc;
    sc.vertex_flats = {Subset{1}, Subset{2}, Subset{3}};
    sc.maximal_faces = {{0, 1, 2}};
    CHECK_THROWS_AS(bergman::complex_to_dot(sc, "bad"),
                    bergman::invalid_input);
  }
}
