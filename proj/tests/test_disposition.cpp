#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "dispo/disposition.hpp"
#include "dispo/error.hpp"
#include "oracles.hpp"

using namespace dispo;

namespace {

const Disposition kNineInEight({{2, 9}, {7, 4}, {}, {5}, {}, {6, 1, 8}, {3}, {}});

}  // namespace

TEST_CASE("rl_min") {
  CHECK(rl_min(std::vector<Element>{2, 9}) == 2);
  CHECK(rl_min(std::vector<Element>{6, 1, 8}) == 2);
  CHECK(rl_min(std::vector<Element>{}) == 0);
  CHECK_THROWS_AS(rl_min(std::vector<Element>{3, 1, 3}), InvalidArgument);
}

TEST_CASE("rl_min_positions") {
  CHECK(rl_min_positions(std::vector<Element>{6, 1, 8}) == std::vector<std::size_t>{1, 2});
  CHECK(rl_min_positions(std::vector<Element>{7, 4}) == std::vector<std::size_t>{1});
  CHECK(rl_min_positions(std::vector<Element>{1, 2, 3}) == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(rl_min_positions(std::vector<Element>{2, 2}), InvalidArgument);
}

TEST_CASE("disposition of [9] into 8 segments") {
  CHECK(kNineInEight.m() == 9);
  CHECK(kNineInEight.n() == 8);
  CHECK(disposition_stats(kNineInEight).rlmin == std::vector<std::size_t>{2, 1, 0, 1, 0, 2, 1, 0});
  CHECK(gdes(kNineInEight) == 2);
  CHECK(kNineInEight.to_text() == "[2 9|7 4||5||6 1 8|3|]");
  CHECK(parse_disposition("[2 9|7 4||5||6 1 8|3|]") == kNineInEight);
  CHECK(parse_disposition(kNineInEight.to_json()) == kNineInEight);
  CHECK(kNineInEight.to_json() == R"({"m":9,"n":8,"segments":[[2,9],[7,4],[],[5],[],[6,1,8],[3],[]]})");
}

TEST_CASE("gdes") {
  CHECK(gdes(Disposition({{1}, {3}, {2}})) == 0);
  CHECK(gdes(Disposition({{3, 2, 1}})) == 2);
}

TEST_CASE("invalid dispositions are rejected") {
  CHECK_THROWS_AS(Disposition({{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Disposition({{1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Disposition(std::vector<Segment>{}), InvalidArgument);
  CHECK_THROWS_AS(parse_disposition("[1 2"), ParseError);
  CHECK_THROWS_AS(parse_disposition("[1 x]"), ParseError);
  CHECK_THROWS_AS(parse_disposition("[2]"), ParseError);
  CHECK_THROWS_AS(parse_disposition(R"({"m":3,"segments":[[1],[2]]})"), ParseError);
  CHECK_THROWS_AS(parse_disposition("{oops"), ParseError);
  CHECK(parse_disposition("[]") == Disposition::empty(1));
}

TEST_CASE("insert_element") {
  const Disposition d({{2, 1}});
  const auto appended = insert_element(d, 1, 2);
  CHECK(appended.segment(1) == Segment{2, 1, 3});
  CHECK(rl_min(d.segment(1)) == 1);
  CHECK(rl_min(appended.segment(1)) == 2);

  const auto into_empty = insert_element(Disposition({{1}, {}}), 2, 0);
  CHECK(into_empty.segment(2) == Segment{2});
  CHECK(rl_min(into_empty.segment(2)) == 1);

  CHECK_THROWS_AS(insert_element(d, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(insert_element(d, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(insert_element(d, 1, 3), InvalidArgument);

  SUBCASE("append adds one RL minimum, any other slot adds none") {
    for (const auto& base : enumerate_dispositions(3, 2)) {
      const auto before = disposition_stats(base).rlmin;
      for (std::size_t i = 1; i <= base.n(); ++i)
        for (std::size_t pos = 0; pos <= base.segment(i).size(); ++pos) {
          auto after = disposition_stats(insert_element(base, i, pos)).rlmin;
          auto expected = before;
          if (pos == base.segment(i).size()) ++expected[i - 1];
          CHECK(after == expected);
        }
    }
  }
}

TEST_CASE("enumerate_dispositions") {
  CHECK(enumerate_dispositions(0, 3) == std::vector<Disposition>{Disposition::empty(3)});
  CHECK(enumerate_dispositions(1, 2).size() == 2);
  CHECK(enumerate_dispositions(2, 2).size() == 6);

  SUBCASE("order follows the insertion construction") {
    const auto all = enumerate_dispositions(2, 2);
    std::vector<std::string> texts;
    for (const auto& d : all) texts.push_back(d.to_text());
    CHECK(texts == std::vector<std::string>{"[2 1|]", "[1 2|]", "[1|2]", "[2|1]", "[|2 1]", "[|1 2]"});
  }

  SUBCASE("cardinality is the rising factorial") {
    for (std::size_t m = 0; m <= 6; ++m)
      for (std::size_t n = 1; n <= 4; ++n) {
        std::uint64_t count = 0;
        for_each_disposition(m, n, [&](const Disposition&) { ++count; });
        CHECK(count == rising_factorial(n, m));
      }
  }

  SUBCASE("same set as the function-then-order brute force") {
    for (int m = 0; m <= 4; ++m)
      for (int n = 1; n <= 3; ++n) {
        std::vector<oracle::Segments> mine;
        for (const auto& d : enumerate_dispositions(m, n)) mine.push_back(d.segments());
        std::sort(mine.begin(), mine.end());
        CHECK(mine == oracle::all_dispositions(m, n));
      }
  }

  SUBCASE("statistics agree with the definitions") {
    for (std::size_t m = 0; m <= 5; ++m)
      for (std::size_t n = 1; n <= 4; ++n)
        for_each_disposition(m, n, [&](const Disposition& d) {
          const auto st = disposition_stats(d);
          std::size_t total = 0;
          for (std::size_t i = 0; i < n; ++i) {
            CHECK(st.rlmin[i] == oracle::rl_min(d.segments()[i]));
            CHECK(st.rlmin[i] <= d.segments()[i].size());
            total += st.rlmin[i];
          }
          CHECK(st.gdes == oracle::gdes(d.segments()));
          CHECK(st.gdes == m - total);
        });
  }
}

TEST_CASE("insertion is a bijection onto the next level") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<Disposition> images;
      std::size_t produced = 0;
      for (const auto& base : enumerate_dispositions(m - 1, n))
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t pos = 0; pos <= base.segment(i).size(); ++pos) {
            images.insert(insert_element(base, i, pos));
            ++produced;
          }
      const auto all = enumerate_dispositions(m, n);
      CHECK(produced == all.size());
      CHECK(images == std::set<Disposition>(all.begin(), all.end()));
    }
}

TEST_CASE("disposition_generating_function") {
  CHECK(disposition_generating_function(1, 2).to_text() == "x1 + x2");
  CHECK(disposition_generating_function(2, 1).to_text() == "x1^2 + x1*t");
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      CHECK(disposition_generating_function(m, n) == homogeneous_disposition_polynomial(m, n));
}

TEST_CASE("sample_uniform") {
  CHECK(sample_uniform(0, 4, 99) == Disposition::empty(4));
  CHECK(sample_uniform(5, 3, 11) == sample_uniform(5, 3, 11));
  CHECK(DispositionSampler::kAlgorithm == "mt19937_64");

  SUBCASE("m = 1, n = 2 splits evenly") {
    DispositionSampler s(1);
    int first = 0;
    for (int i = 0; i < 4000; ++i) first += s(1, 2).segment(1).empty() ? 0 : 1;
    // sd = sqrt(4000 / 4) ~ 31.6
    CHECK(std::abs(first - 2000) < 5 * 31.7);
  }

  SUBCASE("uniform over D_{3,2}") {
    DispositionSampler s(20240601);
    std::map<Disposition, int> counts;
    constexpr int kSamples = 24000;
    for (int i = 0; i < kSamples; ++i) ++counts[s(3, 2)];
    REQUIRE(counts.size() == 24);
    const double p = 1.0 / 24;
    const double sd = std::sqrt(kSamples * p * (1 - p));
    for (const auto& [d, c] : counts) CHECK(std::abs(c - 1000) <= 5 * sd);
  }
}
