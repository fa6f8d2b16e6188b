#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "gen.hpp"
#include "properties.hpp"
#include "pbw/module.hpp"
#include "pbw/straighten.hpp"
#include "pbw/verify.hpp"

using namespace pbw;

namespace {

MultiExponent ex(std::vector<int> v) { return MultiExponent(std::move(v)); }

/// The largest term under the monomial order.
std::pair<MultiExponent, mpz_class> leading(const RootSystem& rs, const DPPolynomial& p) {
  auto it = std::max_element(p.terms().begin(), p.terms().end(),
                             [&](const auto& x, const auto& y) { return compare(rs, x.first, y.first) < 0; });
  return *it;
}

}  // namespace

TEST_CASE("d-statistic") {
  const auto c2 = make_spec(Family::C, 2);
  CHECK(d_stat(c2, ex({1, 2, 1, 0})) == std::vector<int>{0, 4});
  CHECK(d_stat(c2, MultiExponent(4)) == std::vector<int>{0, 0});
  const auto c3 = make_spec(Family::C, 3);
  RootSystem rs(c3);
  MultiExponent s(rs.size());
  s[static_cast<std::size_t>(rs.index({2, ColumnIndex::plain(2)}))] = 5;
  CHECK(d_stat(c3, s) == std::vector<int>{0, 5, 0});
  CHECK_THROWS_AS(d_stat(make_spec(Family::A, 2), MultiExponent(3)), std::invalid_argument);
}

TEST_CASE("monomial order") {
  const auto c2 = make_spec(Family::C, 2);
  CHECK(compare(c2, ex({3, 0, 0, 0}), ex({0, 0, 0, 2})) > 0);
  CHECK(compare(c2, ex({1, 2, 1, 0}), ex({1, 2, 1, 0})) == 0);
  // d = (0,4) against (1,3)
  CHECK(compare(c2, ex({1, 2, 1, 0}), ex({1, 1, 1, 1})) > 0);
  // type A: the last variable weighs most
  const auto a2 = make_spec(Family::A, 2);
  CHECK(compare(a2, ex({0, 0, 1}), ex({1, 0, 0})) > 0);
  CHECK(compare(a2, ex({2, 0, 1}), ex({0, 3, 0})) > 0);

  gen::Rng rng(5);
  auto tot = props::order_totality(rng, 500);
  CHECK_MESSAGE(tot.ok(), tot.summary());
  auto comp = props::order_compatibility(rng, 500);
  CHECK_MESSAGE(comp.ok(), comp.summary());
}

TEST_CASE("finding a violated path") {
  const auto a2 = make_spec(Family::A, 2);
  auto v = find_violation(a2, {1, 1}, ex({1, 1, 1}));
  REQUIRE(v);
  CHECK(v->roots == std::vector<RootId>{0, 1, 2});
  CHECK_FALSE(find_violation(a2, {1, 1}, ex({1, 0, 1})));
  auto w = find_violation(make_spec(Family::A, 1), {1}, ex({2}));
  REQUIRE(w);
  CHECK(w->roots == std::vector<RootId>{0});
}

TEST_CASE("straightening elements") {
  // sl2: the relation itself
  CHECK(straightening_element(make_spec(Family::A, 1), {3}, DyckPath{{0}}, ex({4})) ==
        DPPolynomial::power(1, 0, 4));

  RootSystem a2(make_spec(Family::A, 2));
  auto e = straightening_element(a2.spec(), {1, 1}, DyckPath{{0, 1, 2}}, ex({1, 1, 1}));
  CHECK(e.terms().begin()->first.degree() == 3);
  auto [top, c] = leading(a2, e);
  CHECK(top == ex({1, 1, 1}));
  CHECK(c == 1);

  RootSystem c2(make_spec(Family::C, 2));
  auto f = straightening_element(c2.spec(), {0, 0}, DyckPath{{0, 1, 2}}, ex({1, 1, 1, 0}));
  auto [ftop, fc] = leading(c2, f);
  CHECK(ftop == ex({1, 1, 1, 0}));
  CHECK(fc == 1);
  for (const auto& [s, coef] : f.terms()) CHECK(s.degree() == 3);

  // not a violation
  CHECK_THROWS_AS(straightening_element(a2.spec(), {1, 1}, DyckPath{{0, 1, 2}}, ex({1, 1, 0})),
                  std::invalid_argument);
}

TEST_CASE("straightening elements vanish on the highest weight vector modulo lower degree") {
  gen::Rng rng(17);
  for (auto spec : {make_spec(Family::A, 2), make_spec(Family::C, 2), make_spec(Family::A, 3)}) {
    RootSystem rs(spec);
    for (const DominantWeight& m : {DominantWeight(static_cast<std::size_t>(spec.rank), 1),
                                    gen::weight(rng, spec.rank, 2)}) {
      ExplicitModule mod(rs, m);
      Straightener st(rs, m);
      const auto& paths = st.polytope().paths();
      for (std::size_t p = 0; p < paths.size(); ++p) {
        for (int trial = 0; trial < 6; ++trial) {
          MultiExponent sp(rs.size());
          const long long over = st.polytope().bound(p) + gen::uniform(rng, 1, 2);
          for (long long k = 0; k < over; ++k) {
            const auto& r = paths[p].roots;
            ++sp[static_cast<std::size_t>(r[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(r.size()) - 1))])];
          }
          const auto& el = st.element(p, sp);
          // zero in the associated graded module
          CHECK(mod.in_filtration(weight_drop(rs, sp), mod.evaluate(el), sp.degree() - 1));
          auto [top, c] = leading(rs, el);
          CHECK(top == sp);
          CHECK(c == 1);
        }
      }
    }
  }
}

TEST_CASE("reduction") {
  const auto a1 = make_spec(Family::A, 1);
  CHECK(reduce_to_basis(a1, {1}, ex({2})).is_zero());
  CHECK(reduce_to_basis(a1, {3}, ex({2})) == DPPolynomial::monomial(ex({2})));

  const auto c2 = make_spec(Family::C, 2);
  for (const auto& s : enumerate_points(c2, {2, 1})) CHECK(reduce_to_basis(c2, {2, 1}, s) == DPPolynomial::monomial(s));

  RootSystem a2(make_spec(Family::A, 2));
  ExplicitModule mod(a2, {1, 1});
  Straightener st(a2, {1, 1});
  auto rep = check_straightening(mod, st, exponents_up_to(a2.size(), 4));
  CHECK_MESSAGE(rep.pass(), rep.first_failure);
  CHECK(rep.cases == exponents_up_to(a2.size(), 4).size());
}

TEST_CASE("reduction is sound on random exponents") {
  gen::Rng rng(23);
  for (auto spec : {make_spec(Family::C, 2), make_spec(Family::C, 3), make_spec(Family::A, 3)}) {
    RootSystem rs(spec);
    const auto m = gen::weight(rng, spec.rank, 1);
    ExplicitModule mod(rs, m);
    Straightener st(rs, m);
    std::vector<MultiExponent> cases;
    for (int k = 0; k < 40; ++k) cases.push_back(random_exponent(rs.size(), 5, rng));
    auto rep = check_straightening(mod, st, cases);
    CHECK_MESSAGE(rep.pass(), rep.first_failure);
  }
}
