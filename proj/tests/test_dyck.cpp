#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "pbw/dyck.hpp"

using namespace pbw;

namespace {

PositiveRoot pl(int i, int j) { return {i, ColumnIndex::plain(j)}; }
PositiveRoot br(int i, int j) { return {i, ColumnIndex::bar(j)}; }

}  // namespace

TEST_CASE("small path lists") {
  CHECK(enumerate_paths(make_spec(Family::A, 1)) == std::vector<std::vector<PositiveRoot>>{{pl(1, 1)}});

  auto a2 = enumerate_paths(make_spec(Family::A, 2));
  CHECK(a2.size() == 3);
  CHECK(std::count(a2.begin(), a2.end(), std::vector<PositiveRoot>{pl(1, 1), pl(1, 2), pl(2, 2)}) == 1);

  auto c2 = enumerate_paths(make_spec(Family::C, 2));
  CHECK(c2.size() == 4);
  CHECK(std::count(c2.begin(), c2.end(), std::vector<PositiveRoot>{pl(1, 1), pl(1, 2), br(1, 1)}) == 1);
  CHECK(std::count(c2.begin(), c2.end(), std::vector<PositiveRoot>{pl(2, 2)}) == 1);
}

TEST_CASE("enumeration matches brute force") {
  for (auto f : {Family::A, Family::C})
    for (int n = 1; n <= 5; ++n) {
      RootSystem rs(make_spec(f, n));
      std::set<std::vector<RootId>> want;
      for (const auto& p : brute::paths(f, n)) want.insert(brute::ids(rs, p));
      const auto got = enumerate_paths(rs);
      std::set<std::vector<RootId>> got_set;
      for (const auto& p : got) got_set.insert(p.roots);
      CHECK(got.size() == got_set.size());
      CHECK(got_set == want);
    }
}

TEST_CASE("type A path count is Catalan-like") {
  // paths of A_n: one per pair i <= j
  for (int n = 1; n <= 6; ++n) {
    std::size_t expect = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        // lattice paths from (i,i) to (j,j) staying in i <= row <= col
        std::vector<std::vector<long>> w(static_cast<std::size_t>(n + 2), std::vector<long>(static_cast<std::size_t>(n + 2), 0));
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int r = i; r <= j; ++r)
          for (int c = r; c <= j; ++c) {
            if (r == i && c == i) continue;
            auto& x = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (c - 1 >= r) x += w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
            if (r - 1 >= i) x += w[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
          }
        expect += static_cast<std::size_t>(w[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
      }
    CHECK(enumerate_paths(RootSystem(make_spec(Family::A, n))).size() == expect);
  }
}

TEST_CASE("path recognition") {
  const auto a2 = make_spec(Family::A, 2);
  CHECK_FALSE(is_path(a2, std::vector<PositiveRoot>{pl(1, 1), pl(2, 2)}));
  CHECK_FALSE(is_path(a2, std::vector<PositiveRoot>{pl(1, 1), pl(1, 2)}));
  CHECK(is_path(a2, std::vector<PositiveRoot>{pl(1, 1), pl(1, 2), pl(2, 2)}));
  CHECK(is_path(make_spec(Family::C, 2), std::vector<PositiveRoot>{pl(1, 1), pl(1, 2), br(1, 1)}));
  CHECK_FALSE(is_path(make_spec(Family::C, 2), std::vector<PositiveRoot>{}));
  CHECK_FALSE(is_path(make_spec(Family::C, 3), std::vector<PositiveRoot>{pl(1, 2)}));
}

TEST_CASE("path inequalities") {
  RootSystem a2(make_spec(Family::A, 2));
  auto ineq = path_inequality(a2, DyckPath{{0, 1, 2}});
  CHECK(ineq.low == 1);
  CHECK(ineq.high == 2);
  CHECK(ineq.bound(std::vector<int>{3, 5}) == 8);

  RootSystem c2(make_spec(Family::C, 2));
  auto top = path_inequality(c2, DyckPath{{c2.index(pl(1, 1)), c2.index(pl(1, 2)), c2.index(br(1, 1))}});
  CHECK(top.bound(std::vector<int>{2, 1}) == 3);

  RootSystem a3(make_spec(Family::A, 3));
  CHECK(path_inequality(a3, DyckPath{{a3.index(pl(2, 2))}}).bound(std::vector<int>{1, 7, 4}) == 7);
  CHECK_THROWS_AS(path_inequality(a3, DyckPath{{a3.index(pl(1, 2))}}), std::invalid_argument);
}
