#include <catch2/catch_amalgamated.hpp>

#include <catalan_zeta/dyck.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace catalan_zeta;

namespace {

DyckPath path(const char* s) { return parse_path(s); }

std::vector<int> entries(const AreaSequence& a) { return a.entries(); }

}  // namespace

TEST_CASE("path parsing accepts every documented alphabet") {
  CHECK(path("NNEE").str() == "NNEE");
  CHECK(path("UUDD").str() == "NNEE");
  CHECK(path("1100").str() == "NNEE");
  CHECK(path("nNeE").str() == "NNEE");
  CHECK(path("  NE \n").str() == "NE");
  CHECK(path("").empty());
  CHECK(path("").semilength() == 0);
}

TEST_CASE("path parsing rejects garbage and non-paths") {
  CHECK_THROWS_AS(parse_path("NXE"), InvalidFormat);
  CHECK_THROWS_AS(parse_path("NEE"), UnbalancedPath);
  CHECK_THROWS_AS(parse_path("NNE"), UnbalancedPath);
  CHECK_THROWS_AS(parse_path("ENNE"), BelowDiagonal);
  CHECK_THROWS_AS(parse_path("NEEN"), BelowDiagonal);
  try {
    parse_path("ENNE");
    FAIL("expected BelowDiagonal");
  } catch (const BelowDiagonal& e) {
    CHECK(std::string(e.name()) == "BelowDiagonal");
    CHECK(std::string(e.what()).find("index 1") != std::string::npos);
  }
}

TEST_CASE("area sequence of known paths") {
  CHECK(entries(area_sequence_of(path(""))) == std::vector<int>{});
  CHECK(entries(area_sequence_of(path("NE"))) == std::vector<int>{0});
  CHECK(entries(area_sequence_of(path("NENE"))) == std::vector<int>{0, 0});
  CHECK(entries(area_sequence_of(path("NNEE"))) == std::vector<int>{0, 1});
  CHECK(entries(area_sequence_of(path("NNEENE"))) == std::vector<int>{0, 1, 0});
  CHECK(entries(area_sequence_of(path("NNNENENNEEENNEEE"))) ==
        std::vector<int>{0, 1, 2, 2, 2, 3, 1, 2});
}

TEST_CASE("paths rebuild from area sequences") {
  const std::vector<std::vector<int>> cases = {
      {}, {0}, {0, 0}, {0, 1}, {0, 1, 0}, {0, 1, 2, 0, 1}, {0, 1, 2, 2, 2, 3, 1, 2}};
  const std::vector<std::string> expected = {
      "", "NE", "NENE", "NNEE", "NNEENE", "NNNEEENNEE", "NNNENENNEEENNEEE"};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const AreaSequence a = area_sequence_from_entries(cases[i]);
    CHECK(path_from_area_sequence(a).str() == expected[i]);
    CHECK(area_sequence_of(path_from_area_sequence(a)) == a);
  }
}

TEST_CASE("area sequence validation") {
  CHECK_THROWS_AS(area_sequence_from_entries({1}), NotAreaSequence);
  CHECK_THROWS_AS(area_sequence_from_entries({0, 2}), NotAreaSequence);
  CHECK_THROWS_AS(area_sequence_from_entries({0, -1}), NotAreaSequence);
  CHECK_THROWS_AS(area_sequence_from_entries({0, 1, 3}), NotAreaSequence);
  CHECK(area_sequence_from_entries({0, 1, 2, 2, 0, 1}).str() == "0,1,2,2,0,1");
  CHECK(area_sequence_from_entries({}).str() == "");
}

TEST_CASE("statistics on three hand-computed paths") {
  const DyckPath a = path("NENENE");
  CHECK(area(a) == 0);
  CHECK(dinv(a) == 3);
  CHECK(bounce(a) == 3);
  CHECK(rises(a) == 1);
  CHECK(returns(a) == 3);
  CHECK(inner_touch_points(a) == 2);

  const DyckPath b = path("NNNEEE");
  CHECK(area(b) == 3);
  CHECK(dinv(b) == 0);
  CHECK(bounce(b) == 0);
  CHECK(rises(b) == 3);
  CHECK(returns(b) == 1);
  CHECK(inner_touch_points(b) == 0);

  const DyckPath c = path("NNEENE");
  CHECK(area(c) == 1);
  CHECK(dinv(c) == 2);
  CHECK(bounce(c) == 1);
  CHECK(rises(c) == 2);
  CHECK(returns(c) == 2);
  CHECK(inner_touch_points(c) == 1);
}

TEST_CASE("statistics on the long worked example") {
  const DyckPath p = path("NNNENENNEEENNEEE");
  CHECK(area(p) == 13);
  CHECK(dinv(p) == 11);
  CHECK(rises(p) == 3);
  CHECK(returns(p) == 1);
}

TEST_CASE("statistics of the empty path") {
  const DyckPath p = path("");
  CHECK(area(p) == 0);
  CHECK(dinv(p) == 0);
  CHECK(bounce(p) == 0);
  CHECK(rises(p) == 0);
  CHECK(returns(p) == 0);
  CHECK(inner_touch_points(p) == 0);
}

TEST_CASE("catalan numbers") {
  const std::vector<std::uint64_t> expected = {1,   1,    2,    5,     14,   42,
                                               132, 429,  1430, 4862,  16796};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(catalan_number(static_cast<int>(n)) == expected[n]);
  CHECK(catalan_number(12) == 208012);
  CHECK(catalan_number(30) == 3814986502092304ull);
}

TEST_CASE("enumeration is lexicographic and complete") {
  CHECK(all_paths(0).size() == 1);
  CHECK(all_paths(0).front().str() == "");
  CHECK(all_paths(1).front().str() == "NE");

  const std::vector<std::string> d3 = {"NNNEEE", "NNENEE", "NNEENE", "NENNEE", "NENENE"};
  const auto got = all_paths(3);
  REQUIRE(got.size() == d3.size());
  for (std::size_t i = 0; i < d3.size(); ++i) CHECK(got[i].str() == d3[i]);

  for (int n = 0; n <= 7; ++n) {
    const auto paths = all_paths(n);
    CHECK(paths.size() == catalan_number(n));
    std::set<std::string> distinct;
    for (const auto& p : paths) distinct.insert(p.str());
    CHECK(distinct.size() == paths.size());
    for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1].steps() < paths[i].steps());
  }
}

TEST_CASE("enumerators are independent") {
  DyckPathEnumerator a(2), b(2);
  CHECK(a.next()->str() == "NNEE");
  CHECK(b.next()->str() == "NNEE");
  CHECK(a.next()->str() == "NENE");
  CHECK(b.next()->str() == "NENE");
  CHECK(!a.next());
  CHECK(!b.next());
  CHECK_THROWS_AS(DyckPathEnumerator(-1), InvalidFormat);
}

TEST_CASE("brute force path enumeration agrees at small sizes") {
  // all 2n-step N/E strings, filtered by validity
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::string> brute;
    for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
      std::string s;
      for (int i = 0; i < 2 * n; ++i) s.push_back(mask & (1u << i) ? 'E' : 'N');
      int h = 0;
      bool ok = true;
      for (char c : s) {
        h += c == 'N' ? 1 : -1;
        if (h < 0) ok = false;
      }
      if (ok && h == 0) brute.push_back(s);
    }
    std::sort(brute.begin(), brute.end(), [](const std::string& x, const std::string& y) {
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] == 'N';
      return false;
    });
    const auto got = all_paths(n);
    REQUIRE(got.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(got[i].str() == brute[i]);
  }
}
