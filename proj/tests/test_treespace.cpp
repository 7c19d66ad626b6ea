#include "bergman/treespace.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "bergman/errors.hpp"
#include "bergman/rational.hpp"
#include "bergman/subset.hpp"

using bergman::DissimilarityMap;
using bergman::EdgeWeighting;
using bergman::EquidistantTree;
using bergman::Rational;
using bergman::Subset;
using bergman::WeightVector;
using Node = bergman::EquidistantTree::Node;

namespace {

Node leaf(int label) {
  Node node;
  node.leaf = label;
  return node;
}

Node join(const Rational& height, std::vector<Node> children) {
  Node node;
  node.height = height;
  node.children = std::move(children);
  return node;
}

// (((1,2),3),4) with joins at 1/2, 3/4, 1
EquidistantTree caterpillar() {
  return EquidistantTree(
      join(1, {join(Rational(3, 4),
                    {join(Rational(1, 2), {leaf(1), leaf(2)}), leaf(3)}),
               leaf(4)}),
      4);
}

DissimilarityMap caterpillar_delta() {
  DissimilarityMap d(4);
  d.set(1, 2, 1);
  d.set(1, 3, Rational(3, 2));
  d.set(2, 3, Rational(3, 2));
  d.set(1, 4, 2);
  d.set(2, 4, 2);
  d.set(3, 4, 2);
  return d;
}

}  // namespace

TEST_CASE("dissimilarity map") {
  DissimilarityMap d(3);
  CHECK(d(1, 2) == 0);
  d.set(2, 1, Rational(7, 2));
  CHECK(d(1, 2) == Rational(7, 2));
  CHECK(d(2, 1) == Rational(7, 2));
  CHECK_THROWS_AS(d.set(2, 2, 1), bergman::invalid_input);
  CHECK_THROWS_AS(d(0, 1), bergman::invalid_input);
  CHECK_THROWS_AS(d(1, 4), bergman::invalid_input);
  CHECK_THROWS_AS(DissimilarityMap(0), bergman::invalid_input);

  SUBCASE("matrix constructor") {
    const DissimilarityMap from_rows(2, {{0, 5}, {5, 0}});
    CHECK(from_rows(1, 2) == 5);
    CHECK_THROWS_AS(DissimilarityMap(2, {{0, 1}}), bergman::invalid_input);
    CHECK_THROWS_AS(DissimilarityMap(2, {{0, 1}, {1}}),
                    bergman::invalid_input);
    CHECK_THROWS_AS(DissimilarityMap(2, {{1, 1}, {1, 0}}),
                    bergman::invalid_input);
    CHECK_THROWS_AS(DissimilarityMap(2, {{0, 1}, {2, 0}}),
                    bergman::invalid_input);
  }
}

TEST_CASE("ultrametric recognition") {
  SUBCASE("constant maps qualify") {
    DissimilarityMap d(4);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) d.set(i, j, 3);
    }
    CHECK(bergman::is_ultrametric(d));
  }

  SUBCASE("single strict maximum is reported") {
    DissimilarityMap d(3);
    d.set(1, 2, 1);
    d.set(1, 3, 2);
    d.set(2, 3, 3);
    const auto witness = bergman::ultrametric_violation(d);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::array<int, 3>{1, 2, 3});
  }

  SUBCASE("first bad triple in lexicographic order") {
    DissimilarityMap d(4);
    d.set(1, 2, 1);
    d.set(1, 3, 2);
    d.set(2, 3, 2);  // fine
    d.set(1, 4, 3);
    d.set(2, 4, 2);  // (1,2,4) has its maximum once
    d.set(3, 4, 3);
    const auto witness = bergman::ultrametric_violation(d);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::array<int, 3>{1, 2, 4});
  }

  SUBCASE("two leaves are always fine") {
    DissimilarityMap d(2);
    d.set(1, 2, -5);
    CHECK(bergman::is_ultrametric(d));
  }
}

TEST_CASE("edge coordinates") {
  // lexicographic pair order for n = 5
  int expected = 1;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      CHECK(bergman::pair_index(5, i, j) == expected);
      CHECK(bergman::pair_index(5, j, i) == expected);
      CHECK(bergman::index_pair(5, expected) == std::make_pair(i, j));
      ++expected;
    }
  }
  CHECK(expected == 11);
  CHECK_THROWS_AS(bergman::pair_index(4, 1, 1), bergman::invalid_input);
  CHECK_THROWS_AS(bergman::pair_index(4, 0, 2), bergman::invalid_input);
  CHECK_THROWS_AS(bergman::pair_index(4, 1, 5), bergman::invalid_input);
  CHECK_THROWS_AS(bergman::index_pair(4, 0), bergman::invalid_input);
  CHECK_THROWS_AS(bergman::index_pair(4, 7), bergman::invalid_input);
}

TEST_CASE("weights and maps translate back and forth") {
  const DissimilarityMap d = caterpillar_delta();
  const EdgeWeighting w = bergman::delta_to_weights(d);
  CHECK(w.w == WeightVector{1, Rational(3, 2), 2, Rational(3, 2), 2, 2});
  CHECK(w.at(2, 3) == Rational(3, 2));
  CHECK(w.at(3, 2) == Rational(3, 2));
  CHECK(bergman::weights_to_delta(w) == d);

  CHECK_THROWS_AS(EdgeWeighting(1, {}), bergman::invalid_input);
  CHECK_THROWS_AS(EdgeWeighting(4, WeightVector(5, 0)),
                  bergman::invalid_input);
}

TEST_CASE("fan membership tests agree on hand-picked weightings") {
  SUBCASE("ultrametric weighting passes all three") {
    const EdgeWeighting w = bergman::delta_to_weights(caterpillar_delta());
    CHECK(bergman::membership_triangle(w));
    CHECK(bergman::membership_cycle(w));
    CHECK(bergman::membership_mst(w));
  }

  SUBCASE("strict maximum in a triangle fails all three") {
    const EdgeWeighting w(3, {1, 2, 3});
    CHECK_FALSE(bergman::membership_triangle(w));
    CHECK_FALSE(bergman::membership_cycle(w));
    CHECK_FALSE(bergman::membership_mst(w));
  }

  SUBCASE("negative entries are allowed") {
    const EdgeWeighting w(3, {-2, 1, 1});
    CHECK(bergman::membership_triangle(w));
    CHECK(bergman::membership_mst(w));
  }

  SUBCASE("cycle enumeration refuses large vertex counts") {
    const EdgeWeighting w(9, WeightVector(36, 1));
    CHECK_THROWS_AS(bergman::membership_cycle(w), bergman::budget_exceeded);
  }
}

TEST_CASE("spanning tree enumeration") {
  using bergman::spanning_trees_of_complete_graph;
  CHECK(spanning_trees_of_complete_graph(2).size() == 1);
  CHECK(spanning_trees_of_complete_graph(3).size() == 3);
  CHECK(spanning_trees_of_complete_graph(4).size() == 16);
  CHECK(spanning_trees_of_complete_graph(5).size() == 125);
  for (const Subset& t : spanning_trees_of_complete_graph(4)) {
    CHECK(t.size() == 3);
  }
  CHECK_THROWS_AS(spanning_trees_of_complete_graph(9, 1000),
                  bergman::budget_exceeded);
}

TEST_CASE("minimum spanning trees") {
  SUBCASE("distinct weights give a unique tree") {
    const EdgeWeighting w(4, {1, 2, 3, 4, 5, 6});
    const auto trees = bergman::all_min_spanning_trees(w);
    CHECK(trees == std::set<Subset>{Subset{1, 2, 3}});
  }

  SUBCASE("constant weights keep every tree") {
    const EdgeWeighting w(4, WeightVector(6, 5));
    CHECK(bergman::all_min_spanning_trees(w).size() == 16);
    const EdgeWeighting w5(5, WeightVector(10, 0));
    CHECK(bergman::all_min_spanning_trees(w5).size() == 125);
  }

  SUBCASE("one expensive edge") {
    WeightVector v(6, 1);
    v[5] = 2;
    const EdgeWeighting w(4, v);
    const auto trees = bergman::all_min_spanning_trees(w);
    CHECK(trees.size() == 8);
    for (const Subset& t : trees) CHECK_FALSE(t.contains(6));
    CHECK(trees == bergman::min_spanning_trees_bruteforce(w));
    CHECK(trees == bergman::min_spanning_trees_reverse_delete(w));
  }

  SUBCASE("too many edge coordinates for the bitmask") {
    const EdgeWeighting w(13, WeightVector(78, 1));
    CHECK_THROWS_AS(bergman::min_spanning_trees_reverse_delete(w),
                    bergman::budget_exceeded);
  }

  SUBCASE("tiny state budget") {
    const EdgeWeighting w(6, WeightVector(15, 1));
    CHECK_THROWS_AS(bergman::min_spanning_trees_reverse_delete(w, 10),
                    bergman::budget_exceeded);
  }
}

TEST_CASE("equidistant tree construction") {
  SUBCASE("children are ordered by smallest leaf") {
    const EquidistantTree scrambled(
        join(1, {leaf(4), join(Rational(3, 4),
                               {leaf(3), join(Rational(1, 2),
                                              {leaf(2), leaf(1)})})}),
        4);
    CHECK(scrambled == caterpillar());
  }

  SUBCASE("negative and zero heights above leaves") {
    CHECK_NOTHROW(EquidistantTree(
        join(Rational(1, 2), {join(-1, {leaf(1), leaf(2)}), leaf(3)}), 3));
    CHECK_NOTHROW(EquidistantTree(join(0, {leaf(1), leaf(2)}), 2));
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(EquidistantTree(join(1, {leaf(1), leaf(3)}), 2),
                    bergman::invalid_input);
    CHECK_THROWS_AS(EquidistantTree(join(1, {leaf(1), leaf(1)}), 2),
                    bergman::invalid_input);
    CHECK_THROWS_AS(EquidistantTree(join(1, {leaf(1), leaf(2)}), 3),
                    bergman::invalid_input);

    Node lifted = leaf(2);
    lifted.height = 1;
    CHECK_THROWS_AS(EquidistantTree(join(1, {leaf(1), lifted}), 2),
                    bergman::invalid_input);

    Node both = join(Rational(1, 2), {leaf(1), leaf(2)});
    both.leaf = 3;
    CHECK_THROWS_AS(EquidistantTree(join(1, {both, leaf(3)}), 3),
                    bergman::invalid_input);

    CHECK_THROWS_AS(
        EquidistantTree(join(1, {join(Rational(1, 2), {leaf(1)}), leaf(2)}),
                        2),
        bergman::invalid_input);

    // internal child at the parent's height
    CHECK_THROWS_AS(
        EquidistantTree(
            join(1, {join(1, {leaf(1), leaf(2)}), leaf(3)}), 3),
        bergman::invalid_input);
  }
}

TEST_CASE("tree to ultrametric") {
  CHECK(bergman::tree_to_ultrametric(caterpillar()) == caterpillar_delta());

  // cherry below zero: distances may be negative
  const EquidistantTree t(
      join(Rational(1, 2), {join(-1, {leaf(1), leaf(2)}), leaf(3)}), 3);
  const DissimilarityMap d = bergman::tree_to_ultrametric(t);
  CHECK(d(1, 2) == -2);
  CHECK(d(1, 3) == 1);
  CHECK(d(2, 3) == 1);
  CHECK(bergman::is_ultrametric(d));
}

TEST_CASE("ultrametric to tree") {
  SUBCASE("rebuilds the caterpillar") {
    CHECK(bergman::ultrametric_to_tree(caterpillar_delta()) == caterpillar());
  }

  SUBCASE("ties merge simultaneously") {
    DissimilarityMap d(4);
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) d.set(i, j, 2);
    }
    const EquidistantTree star = bergman::ultrametric_to_tree(d);
    CHECK(star.root().children.size() == 4);
    CHECK(star.root().height == 1);
    CHECK(bergman::tree_to_ultrametric(star) == d);
  }

  SUBCASE("round trips through negative heights") {
    DissimilarityMap d(3);
    d.set(1, 2, -2);
    d.set(1, 3, 1);
    d.set(2, 3, 1);
    const EquidistantTree t = bergman::ultrametric_to_tree(d);
    CHECK(bergman::tree_to_ultrametric(t) == d);
    CHECK(t.root().children.front().height == -1);
  }

  SUBCASE("violations carry their witness") {
    DissimilarityMap d(3);
    d.set(1, 2, 1);
    d.set(1, 3, 2);
    d.set(2, 3, 3);
    try {
      bergman::ultrametric_to_tree(d);
      FAIL("expected a throw");
    } catch (const bergman::not_ultrametric& e) {
      CHECK(e.i == 1);
      CHECK(e.j == 2);
      CHECK(e.k == 3);
    }
  }
}

TEST_CASE("topology codes") {
  SUBCASE("caterpillar") {
    CHECK(bergman::unranked_topology(caterpillar()).code == "(((1,2),3),4)");
    CHECK(bergman::ranked_topology(caterpillar()).code ==
          "(((1,2):0,3):1,4):2");
  }

  SUBCASE("tied cherries share a rank") {
    const EquidistantTree tied(
        join(1, {join(Rational(1, 2), {leaf(1), leaf(2)}),
                 join(Rational(1, 2), {leaf(3), leaf(4)})}),
        4);
    const EquidistantTree untied(
        join(1, {join(Rational(1, 2), {leaf(1), leaf(2)}),
                 join(Rational(3, 4), {leaf(3), leaf(4)})}),
        4);
    CHECK(bergman::unranked_topology(tied) == bergman::unranked_topology(untied));
    CHECK(bergman::unranked_topology(tied).code == "((1,2),(3,4))");
    CHECK(bergman::ranked_topology(tied).code == "((1,2):0,(3,4):0):1");
    CHECK(bergman::ranked_topology(untied).code == "((1,2):0,(3,4):1):2");
    CHECK(bergman::ranked_topology(tied) != bergman::ranked_topology(untied));
  }
}

TEST_CASE("topology from a minimum-basis family") {
  using bergman::BasisFamily;
  const auto family_of = [](int rank, std::vector<Subset> bases) {
    BasisFamily family;
    family.rank = rank;
    for (Subset& b : bases) family.bases.insert(std::move(b));
    return family;
  };

  SUBCASE("matches the tree behind an ultrametric") {
    BasisFamily family;
    family.rank = 3;
    family.bases = bergman::all_min_spanning_trees(
        bergman::delta_to_weights(caterpillar_delta()));
    CHECK(family.bases.size() == 6);
    CHECK(bergman::topology_from_min_bases(4, family) ==
          bergman::unranked_topology(caterpillar()));
  }

  SUBCASE("three leaves") {
    CHECK(bergman::topology_from_min_bases(
              3, family_of(2, {Subset{1, 2}, Subset{2, 3}}))
              .code == "((1,3),2)");
    CHECK(bergman::topology_from_min_bases(
              3, family_of(2, {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}))
              .code == "(1,2,3)");
  }

  SUBCASE("rejects families that fit no tree") {
    using bergman::invalid_input;
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(1, family_of(0, {Subset{}})),
        invalid_input);
    CHECK_THROWS_AS(bergman::topology_from_min_bases(3, family_of(2, {})),
                    invalid_input);
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(4, family_of(2, {Subset{1, 2, 3}})),
        invalid_input);
    // a triangle is not spanning
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(
            4, family_of(3, {Subset{1, 2, 4}, Subset{1, 2, 3}})),
        invalid_input);
    // edge 4 missing from the family
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(4, family_of(3, {Subset{1, 2, 3}})),
        invalid_input);
    // triangle on 1,2,3 sees two strictly light edges
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(
            4, family_of(3, {Subset{1, 2, 6}, Subset{3, 4, 5}})),
        invalid_input);
    // swap-consistent family whose closeness relation joins all leaves
    CHECK_THROWS_AS(
        bergman::topology_from_min_bases(
            4, family_of(3, {Subset{1, 2, 5}, Subset{1, 2, 6}, Subset{1, 3, 6},
                             Subset{1, 4, 5}, Subset{1, 5, 6},
                             Subset{2, 3, 5}})),
        invalid_input);
  }
}

TEST_CASE("newick export") {
  CHECK(bergman::tree_to_newick(caterpillar()) ==
        "(((1:0.5,2:0.5):0.25,3:0.75):0.25,4:1);");
  const EquidistantTree below(
      join(Rational(1, 2), {join(-1, {leaf(1), leaf(2)}), leaf(3)}), 3);
  CHECK(bergman::tree_to_newick(below) == "((1:-1,2:-1):1.5,3:0.5);");
}
