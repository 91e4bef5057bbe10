#include <catch2/catch_amalgamated.hpp>

#include <catalan_zeta/trees.hpp>

#include <string>
#include <vector>

using namespace catalan_zeta;

namespace {

AreaSequence seq(std::vector<int> e) { return area_sequence_from_entries(std::move(e)); }

}  // namespace

TEST_CASE("the nine-vertex example tree") {
  const PlantedTree t = tree_from_area_sequence(seq({0, 1, 2, 2, 2, 3, 1, 2}));
  CHECK(t.vertex_count() == 9);
  CHECK(t.parent_array_str() == "[-1,0,1,2,2,2,5,1,7]");
  CHECK(t.children(0) == std::vector<int>{1});
  CHECK(t.children(1) == std::vector<int>{2, 7});
  CHECK(t.children(2) == std::vector<int>{3, 4, 5});
  CHECK(t.children(5) == std::vector<int>{6});
  CHECK(t.children(7) == std::vector<int>{8});
  CHECK(t.root_degree() == 1);
  CHECK(t.generation(0) == -1);
  CHECK(t.generation(1) == 0);
  CHECK(t.generation(6) == 3);
  CHECK(t.parenthesis_str() == "((()()(()))(()))");
  CHECK(area_sequence_from_tree(t) == seq({0, 1, 2, 2, 2, 3, 1, 2}));
  CHECK(crucial_vertices(t) == std::vector<int>{0, 1});
}

TEST_CASE("small trees") {
  const PlantedTree star = tree_from_area_sequence(seq({0, 0, 0}));
  CHECK(star.children(0) == std::vector<int>{1, 2, 3});
  CHECK(crucial_vertices(star) == std::vector<int>{0});

  const PlantedTree edge = tree_from_area_sequence(seq({0}));
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.parent(1) == 0);

  const PlantedTree chain = tree_from_area_sequence(seq({0, 1, 2}));
  CHECK(chain.parent_array_str() == "[-1,0,1,2]");
  CHECK(crucial_vertices(chain) == std::vector<int>{0, 1, 2});

  const PlantedTree single = PlantedTree();
  CHECK(single.vertex_count() == 1);
  CHECK(single.root_degree() == 0);
  CHECK(crucial_vertices(single).empty());
  CHECK(area_sequence_from_tree(single) == seq({}));
  CHECK(single.parenthesis_str() == "");
}

TEST_CASE("parent links go to the latest vertex one generation up") {
  // the 1 at the end attaches to vertex 2, not vertex 1
  const PlantedTree t = tree_from_area_sequence(seq({0, 0, 1}));
  CHECK(t.parent(3) == 2);
  CHECK(crucial_vertices(t) == std::vector<int>{0, 2});
}

TEST_CASE("tree parsing") {
  const PlantedTree t = tree_from_area_sequence(seq({0, 1, 2, 2, 2, 3, 1, 2}));
  CHECK(parse_tree("((()()(()))(()))") == t);
  CHECK(parse_tree("[-1,0,1,2,2,2,5,1,7]") == t);
  CHECK(parse_tree(" ((()()(()))(())) ") == t);
  CHECK(parse_tree("") == PlantedTree());
  CHECK(parse_tree("[-1]") == PlantedTree());
  CHECK_THROWS_AS(parse_tree("(()"), UnbalancedPath);
  CHECK_THROWS_AS(parse_tree("))(("), BelowDiagonal);
  CHECK_THROWS_AS(parse_tree("(a)"), InvalidFormat);
  CHECK_THROWS_AS(parse_tree("[0,1]"), NotPlantedTree);
  CHECK_THROWS_AS(parse_tree("[-1,2,1]"), NotPlantedTree);
  CHECK_THROWS_AS(parse_tree("[-1,0,"), InvalidFormat);
  CHECK_THROWS_AS(parse_tree("x"), InvalidFormat);
}

TEST_CASE("children lists must be preorder labeled") {
  CHECK_THROWS_AS(tree_from_children({{2}, {}, {1}}), NotPlantedTree);
  CHECK_THROWS_AS(tree_from_children({{1}, {1}}), NotPlantedTree);
  CHECK_THROWS_AS(tree_from_children({{1}, {3}, {}}), NotPlantedTree);
  CHECK_THROWS_AS(tree_from_children({{}, {}}), NotPlantedTree);
  CHECK(tree_from_children({{1, 3}, {2}, {}, {}}).parent_array_str() == "[-1,0,1,0]");
}

TEST_CASE("the five four-vertex trees carry the published pairs") {
  // (crucial count, root degree) in path order
  const std::vector<std::pair<int, int>> expected = {{3, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}};
  const auto paths = all_paths(3);
  REQUIRE(paths.size() == expected.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const PlantedTree t = tree_from_area_sequence(area_sequence_of(paths[i]));
    CHECK(static_cast<int>(crucial_vertices(t).size()) == expected[i].first);
    CHECK(t.root_degree() == expected[i].second);
  }
}

TEST_CASE("count tables") {
  const StatTable t3 = stat_table(3);
  CHECK(t3.total() == 5);
  CHECK(t3.at(3, 1) == 1);
  CHECK(t3.at(2, 1) == 1);
  CHECK(t3.at(2, 2) == 1);
  CHECK(t3.at(1, 2) == 1);
  CHECK(t3.at(1, 3) == 1);
  CHECK(t3.at(1, 1) == 0);
  CHECK(t3.polynomial_str() == "x^3y + x^2y^2 + x^2y + xy^3 + xy^2");

  CHECK(stat_table(0).polynomial_str() == "1");
  CHECK(stat_table(1).polynomial_str() == "xy");
  CHECK(stat_table(2).polynomial_str() == "x^2y + xy^2");
  CHECK(stat_table(4).polynomial_str() ==
        "x^4y + x^3y^2 + 2x^3y + x^2y^3 + 2x^2y^2 + 2x^2y + xy^4 + 2xy^3 + 2xy^2");
  CHECK(tutte_polynomial(5).total() == 42);
}

TEST_CASE("arch merge on published examples") {
  CHECK(speyer_step(parse_path("NENENE")).str() == "NNEENE");
  CHECK(speyer_step(parse_path("NNEENE")).str() == "NNNEEE");
  CHECK(speyer_step(parse_path("NENNEE")).str() == "NNENEE");
  CHECK(speyer_step_inverse(parse_path("NNEENE")).str() == "NENENE");
  CHECK(speyer_step_inverse(parse_path("NNNEEE")).str() == "NNEENE");
  CHECK(speyer_step_inverse(parse_path("NNENEE")).str() == "NENNEE");
  CHECK_THROWS_AS(speyer_step(parse_path("NNNEEE")), TooFewReturns);
  CHECK_THROWS_AS(speyer_step(parse_path("")), TooFewReturns);
  CHECK_THROWS_AS(speyer_step_inverse(parse_path("NENENE")), TooFewRises);
  CHECK_THROWS_AS(speyer_step_inverse(parse_path("")), TooFewRises);
}

TEST_CASE("arch merge round trips at small sizes") {
  for (int n = 0; n <= 6; ++n)
    for (const DyckPath& p : all_paths(n)) {
      if (returns(p) < 2) continue;
      const DyckPath q = speyer_step(p);
      CHECK(returns(q) == returns(p) - 1);
      CHECK(rises(q) == rises(p) + 1);
      CHECK(speyer_step_inverse(q) == p);
    }
}

TEST_CASE("tree operator trades a crucial vertex for a root child") {
  const PlantedTree chain = tree_from_area_sequence(seq({0, 1, 2}));
  const PlantedTree stepped = tree_operator(chain);
  CHECK(stepped.parent_array_str() == "[-1,0,0,2]");
  CHECK(crucial_vertices(stepped) == std::vector<int>{0, 2});
  CHECK(stepped.root_degree() == 2);

  CHECK_THROWS_AS(tree_operator(tree_from_area_sequence(seq({0, 0, 0}))), TooFewCrucial);
  CHECK_THROWS_AS(tree_operator(PlantedTree()), TooFewCrucial);
}
