#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "oracle.hpp"
#include "pbw/polytope.hpp"
#include "pbw/weyl.hpp"

using namespace pbw;

TEST_CASE("membership") {
  for (int m = 0; m <= 4; ++m)
    for (int k = 0; k <= 6; ++k)
      CHECK(contains(make_spec(Family::A, 1), {m}, MultiExponent(std::vector<int>{k})) == (k <= m));
  CHECK(contains(make_spec(Family::C, 2), {2, 1}, MultiExponent(std::vector<int>{2, 1, 0, 0})));
  CHECK_FALSE(contains(make_spec(Family::A, 2), {1, 1}, MultiExponent(std::vector<int>{1, 1, 1})));
  CHECK_THROWS_AS(contains(make_spec(Family::A, 2), {1}, MultiExponent(3)), std::invalid_argument);
}

TEST_CASE("point counts") {
  CHECK(enumerate_points(make_spec(Family::A, 1), {4}).size() == 5);
  CHECK(enumerate_points(make_spec(Family::A, 2), {1, 1}).size() == 8);
  CHECK(enumerate_points(make_spec(Family::C, 2), {2, 1}).size() == 35);
  CHECK(enumerate_points(make_spec(Family::C, 3), {0, 0, 0}).size() == 1);
}

TEST_CASE("enumeration matches the box search") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 24; ++trial) {
    const auto spec = gen::spec(rng, 3);
    RootSystem rs(spec);
    const auto m = gen::weight(rng, spec.rank, 2);
    auto want = brute::points(rs, m);
    Polytope poly(rs, m);
    auto got = poly.points();
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    CHECK(poly.count() == want.size());
    CHECK(poly.points_serial() == poly.points());
  }
}

TEST_CASE("parallel and serial kernels agree") {
  for (auto spec : {make_spec(Family::A, 4), make_spec(Family::C, 3)}) {
    Polytope poly(RootSystem(spec), DominantWeight(static_cast<std::size_t>(spec.rank), 1));
    CHECK(poly.points() == poly.points_serial());
    CHECK(poly.character() == poly.character_serial());
  }
  const auto spec = make_spec(Family::C, 3);
  auto a = minkowski_subset(spec, {1, 0, 1}, {0, 1, 1});
  auto b = minkowski_subset_serial(spec, {1, 0, 1}, {0, 1, 1});
  CHECK(a.subset == b.subset);
  CHECK(a.sum_size == b.sum_size);
  CHECK(a.target_size == b.target_size);
}

TEST_CASE("graded character") {
  auto ch = graded_character(make_spec(Family::A, 1), {2});
  CHECK(ch.size() == 3);
  CHECK(ch.at({0}) == std::vector<std::int64_t>{1});
  CHECK(ch.at({1}) == std::vector<std::int64_t>{0, 1});
  CHECK(ch.at({2}) == std::vector<std::int64_t>{0, 0, 1});

  auto c2 = graded_character(make_spec(Family::C, 2), {2, 1});
  CHECK(c2.at({3, 1}) == std::vector<std::int64_t>{0, 0, 1, 1});
  CHECK(c2.at({4, 2}) == std::vector<std::int64_t>{0, 0, 1, 1, 1});
  CHECK(c2.count({2, 4}) == 0);

  // total over q = 1 is the dimension
  std::int64_t total = 0;
  for (const auto& [d, p] : c2) total = std::accumulate(p.begin(), p.end(), total);
  CHECK(total == 35);
}

TEST_CASE("character is determined by the points") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const auto spec = gen::spec(rng, 3);
    RootSystem rs(spec);
    const auto m = gen::weight(rng, spec.rank, 2);
    GradedCharacter want;
    for (const auto& s : brute::points(rs, m)) {
      auto& p = want[weight_drop(rs, s)];
      if (p.size() <= static_cast<std::size_t>(s.degree())) p.resize(static_cast<std::size_t>(s.degree()) + 1, 0);
      ++p[static_cast<std::size_t>(s.degree())];
    }
    CHECK(graded_character(spec, m) == want);
  }
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("2,1", 2) == DominantWeight{2, 1});
  CHECK(parse_weight(" 0, 3 ,1", 3) == DominantWeight{0, 3, 1});
  CHECK_THROWS_WITH_AS(parse_weight("1,x", 2), doctest::Contains("'x'"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,-1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1", 2), std::invalid_argument);
}

TEST_CASE("Minkowski inclusion") {
  auto r = minkowski_subset(make_spec(Family::A, 2), {1, 0}, {0, 1});
  CHECK(r.subset);
  CHECK(minkowski_subset(make_spec(Family::C, 2), {1, 0}, {1, 1}).subset);
  CHECK(minkowski_subset(make_spec(Family::C, 3), {2, 1, 0}, {0, 0, 0}).subset);

  // the explicit sumset agrees
  const auto spec = make_spec(Family::C, 2);
  auto sum = sumset(enumerate_points(spec, {1, 0}), enumerate_points(spec, {1, 1}));
  for (const auto& s : sum) CHECK(contains(spec, {2, 1}, s));
  auto rep = minkowski_subset(spec, {1, 0}, {1, 1});
  REQUIRE(rep.cardinality_checked);
  CHECK(rep.sum_size == sum.size());
}

TEST_CASE("points equal the Weyl dimension") {
  for (auto f : {Family::A, Family::C})
    for (int n = 1; n <= 3; ++n) {
      gen::Rng rng(static_cast<std::uint64_t>(n));
      for (int t = 0; t < 4; ++t) {
        const auto spec = make_spec(f, n);
        const auto m = gen::weight(rng, n, 2);
        CHECK(mpz_class(static_cast<unsigned long>(enumerate_points(spec, m).size())) == weyl_dim(spec, m));
      }
    }
}
