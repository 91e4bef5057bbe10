#include <catch2/catch_amalgamated.hpp>

#include <catalan_zeta/words.hpp>

#include <string>
#include <vector>

using namespace catalan_zeta;

namespace {

Word w(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("word construction and parsing") {
  CHECK(word_from_entries({0, 1, 0}).str() == "0,1,0");
  CHECK(word_from_entries({0, 10, 2}).str() == "0,10,2");
  CHECK_THROWS_AS(word_from_entries({}), InvalidFormat);
  CHECK_THROWS_AS(word_from_entries({0, -1}), InvalidFormat);

  CHECK(w("0,1,0") == word_from_entries({0, 1, 0}));
  CHECK(w(" 0 , 1 , 0 ") == word_from_entries({0, 1, 0}));
  CHECK(w("010") == word_from_entries({0, 1, 0}));  // digit shorthand
  CHECK(w("0,10") == word_from_entries({0, 10}));
  CHECK(w("7") == word_from_entries({7}));
  CHECK_THROWS_AS(parse_word(""), InvalidFormat);
  CHECK_THROWS_AS(parse_word("0,,1"), InvalidFormat);
  CHECK_THROWS_AS(parse_word("0,x"), InvalidFormat);
  CHECK_THROWS_AS(parse_word("0,1,"), InvalidFormat);
  CHECK_THROWS_AS(parse_word("-1"), InvalidFormat);
}

TEST_CASE("property classification on known words") {
  const PropertyReport all = classify(w("0,1,0"));
  CHECK(all.satisfies_a());
  CHECK(all.satisfies_b());
  CHECK(all.satisfies_c());
  CHECK(all.satisfies_d());
  CHECK(!all.first_violation);

  // 0,1: the 1 never sees a 0 to its right
  const PropertyReport r01 = classify(w("0,1"));
  CHECK(!r01.satisfies_a());
  CHECK(!r01.satisfies_b());
  CHECK(!r01.satisfies_c());
  CHECK(r01.satisfies_d());
  REQUIRE(r01.first_violation);
  CHECK(r01.first_violation->property == WordProperty::A2);
  CHECK(r01.first_violation->value == 1);

  // 0,2: jumps over 1, so (A2), (B1) and (C3) all fail at index 2
  const PropertyReport r02 = classify(w("0,2"));
  CHECK(r02.satisfies_a1);
  CHECK(!r02.satisfies_a2);
  CHECK(!r02.satisfies_b1);
  CHECK(r02.satisfies_c1);
  CHECK(!r02.satisfies_c3);
  REQUIRE(r02.first_violation);
  CHECK(r02.first_violation->property == WordProperty::A2);
  CHECK(r02.first_violation->describe().find("value 2") != std::string::npos);

  const PropertyReport r10 = classify(w("1,0"));
  CHECK(!r10.satisfies_a2);
  CHECK(!r10.satisfies_c1);

  // 0,2,0 has a drop of two
  const PropertyReport r020 = classify(w("0,2,0"));
  CHECK(!r020.satisfies_a1);

  // area sequence that is neither an (A)- nor a (B)-word
  const PropertyReport r = classify(w("0,1,2,1,2"));
  CHECK(r.satisfies_d());
  CHECK(!r.satisfies_a2);

  CHECK(classify(w("0,1,0,2,1,0")).satisfies_a());
  CHECK(!classify(w("0,1,0,2,1,0")).satisfies_b1);
}

TEST_CASE("properties (B) and (C) coincide on spot checks") {
  for (const char* text : {"0,1,0", "0,0,0", "0,1,2,0,1", "0,1,1,0", "0,1,2,1,2", "0,2",
                           "1,0", "0,1,2,2,0,1"}) {
    const PropertyReport r = classify(w(text));
    CHECK(r.satisfies_b() == r.satisfies_c());
  }
}

TEST_CASE("the eight published swap pairs, both directions") {
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"001021", "001201"}, {"011021", "011201"}, {"010021", "012001"},
      {"010210", "012010"}, {"010211", "012011"}, {"010212", "012012"},
      {"012102", "012120"}, {"010221", "012201"}};
  for (const auto& [a, b] : pairs) {
    CHECK(a_to_b(w(a)) == w(b));
    CHECK(b_to_a(w(b)) == w(a));
  }
}

TEST_CASE("words in both families are fixed by both swaps") {
  for (const char* text : {"0", "0,0", "0,1,0", "0,1,1,0", "0,1,2,1,0"}) {
    CHECK(a_to_b(w(text)) == w(text));
    CHECK(b_to_a(w(text)) == w(text));
  }
  // one-sided inputs move
  CHECK(b_to_a(w("0,1,2,0,1")) == w("0,1,0,2,1"));
  CHECK(a_to_b(w("0,1,0,2,1")) == w("0,1,2,0,1"));
}

TEST_CASE("swap preconditions") {
  CHECK_THROWS_AS(a_to_b(w("0,2")), NotPropertyA);
  CHECK_THROWS_AS(b_to_a(w("0,1")), NotPropertyB);
  try {
    a_to_b(w("0,2,0"));
    FAIL("expected NotPropertyA");
  } catch (const NotPropertyA& e) {
    CHECK(std::string(e.what()).find("(A") != std::string::npos);
  }
}

TEST_CASE("enumeration of property (A) words") {
  const auto len1 = all_words_a(1);
  REQUIRE(len1.size() == 1);
  CHECK(len1[0].str() == "0");

  const auto len3 = all_words_a(3);
  REQUIRE(len3.size() == 2);
  CHECK(len3[0].str() == "0,0,0");
  CHECK(len3[1].str() == "0,1,0");

  const std::vector<const char*> len4 = {"0000", "0010", "0100", "0101", "0110"};
  const auto got4 = all_words_a(4);
  REQUIRE(got4.size() == len4.size());
  for (std::size_t i = 0; i < len4.size(); ++i) CHECK(got4[i] == w(len4[i]));

  CHECK(all_words_a(6).size() == 42);
  CHECK(all_words_a(7).size() == 132);
  CHECK(all_words_a(8).size() == 429);
  CHECK_THROWS_AS(all_words_a(0), InvalidFormat);
}

TEST_CASE("enumerated words are lexicographically sorted and valid") {
  for (int n = 1; n <= 7; ++n) {
    const auto words = all_words_a(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(classify(words[i]).satisfies_a());
      if (i) CHECK(words[i - 1].entries() < words[i].entries());
    }
  }
}
