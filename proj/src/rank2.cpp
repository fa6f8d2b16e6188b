#include "pbw/rank2.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "pbw/chevalley.hpp"

namespace pbw {

namespace {

using Key = std::tuple<int, int, long, long>;

std::shared_mutex cache_mutex;
std::map<Key, std::vector<Rank2Term>>& cache() {
  static std::map<Key, std::vector<Rank2Term>> c;
  return c;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::vector<Rank2Term> compute(int k, int m, long n1, long n2) {
  // ordinary polynomial in x, y, z; key (a, b, c)
  std::map<std::tuple<int, int, int>, mpz_class> p{{{0, 0, m}, 1}};
  for (int step = 0; step < k; ++step) {
    std::map<std::tuple<int, int, int>, mpz_class> q;
    for (const auto& [e, coef] : p) {
      auto [a, b, c] = e;
      if (c > 0) q[{a, b + 1, c - 1}] += coef * c * n1;
      if (b > 0) q[{a + 1, b - 1, c}] += coef * b * n2;
    }
    p = std::move(q);
  }
  const mpz_class denom = factorial(k) * factorial(m);
  std::vector<Rank2Term> out;
  for (const auto& [e, coef] : p) {
    if (coef == 0) continue;
    auto [a, b, c] = e;
    mpz_class num = coef * factorial(a) * factorial(b) * factorial(c);
    if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t()))
      throw std::logic_error("rank-2 coefficient not integral");
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    out.push_back({a, b, c, r});
  }
  return out;
}

}  // namespace

const std::vector<Rank2Term>& rank2_expand(int k, int m, long n1, long n2) {
  if (m < 0 || k < 0 || k > 2 * m)
    throw std::domain_error("rank2 expansion needs 0 <= k <= 2m, got k=" + std::to_string(k) +
                            " m=" + std::to_string(m));
  const Key key{k, m, n1, n2};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto terms = compute(k, m, n1, n2);
  std::unique_lock lock(cache_mutex);
  return cache().try_emplace(key, std::move(terms)).first->second;
}

std::pair<long, long> rank2_magnitudes() {
  static const std::pair<long, long> mags = [] {
    RootSystem rs(make_spec(Family::C, 2));
    Chevalley ch(rs);
    const RootId g = rs.index({1, ColumnIndex::plain(1)});
    const RootId top = rs.index({1, ColumnIndex::bar(1)});
    const RootId mid = *rs.difference(top, g);
    return std::pair<long, long>{static_cast<long>(ch.magnitude(g, top)), static_cast<long>(ch.magnitude(g, mid))};
  }();
  return mags;
}

const std::vector<Rank2Term>& rank2_ad(int k, int m) {
  auto [n1, n2] = rank2_magnitudes();
  return rank2_expand(k, m, n1, n2);
}

}  // namespace pbw
