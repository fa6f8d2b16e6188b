#pragma once

// Brute-force references written directly from the definitions, sharing no
// code with the library beyond the data types.

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "pbw/polytope.hpp"

namespace brute {

// Roots as (i, column position in J), position p in 1..2n-1; barred k has
// position 2n-k.  Type A uses positions 1..n only.
struct R {
  int i, p;
  auto operator<=>(const R&) const = default;
};

inline bool valid(pbw::Family f, int n, R r) {
  if (r.i < 1 || r.i > n || r.p < r.i) return false;
  if (f == pbw::Family::A) return r.p <= n;
  // barred k = 2n - p must be >= i
  return r.p <= n || (r.p <= 2 * n - 1 && 2 * n - r.p >= r.i);
}

inline bool is_end(pbw::Family f, int n, R r) {
  if (r.p == r.i) return true;  // simple
  return f == pbw::Family::C && (r.p == 2 * n - r.i || (r.i == n && r.p == n));
}

inline pbw::PositiveRoot to_root(int n, R r) {
  if (r.p <= n) return {r.i, pbw::ColumnIndex::plain(r.p)};
  return {r.i, pbw::ColumnIndex::bar(2 * n - r.p)};
}

/// Every sequence from a simple root following (p,q)->(p,q+1)|(p+1,q) that
/// ends at an admissible root.
inline std::set<std::vector<R>> paths(pbw::Family f, int n) {
  std::set<std::vector<R>> out;
  std::vector<std::vector<R>> stack;
  for (int i = 1; i <= n; ++i) stack.push_back({{i, i}});
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (is_end(f, n, cur.back())) out.insert(cur);
    for (R nx : {R{cur.back().i, cur.back().p + 1}, R{cur.back().i + 1, cur.back().p}}) {
      if (!valid(f, n, nx)) continue;
      auto next = cur;
      next.push_back(nx);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

inline std::vector<pbw::RootId> ids(const pbw::RootSystem& rs, const std::vector<R>& path) {
  std::vector<pbw::RootId> v;
  for (R r : path) v.push_back(rs.index(to_root(rs.rank(), r)));
  return v;
}

/// Points of the box [0, max bound]^N satisfying every path inequality.
inline std::vector<pbw::MultiExponent> points(const pbw::RootSystem& rs, const pbw::DominantWeight& m) {
  const int n = rs.rank();
  std::vector<std::pair<std::vector<pbw::RootId>, int>> ineq;
  int top = 0;
  for (const auto& p : paths(rs.family(), n)) {
    const int lo = p.front().i;
    const R last = p.back();
    const int hi = last.p == last.i ? last.p : n;
    int b = 0;
    for (int k = lo; k <= hi; ++k) b += m[static_cast<std::size_t>(k - 1)];
    top = std::max(top, b);
    ineq.emplace_back(ids(rs, p), b);
  }
  const std::size_t N = rs.size();
  std::vector<pbw::MultiExponent> out;
  std::vector<int> s(N, 0);
  for (;;) {
    bool ok = true;
    for (const auto& [roots, b] : ineq) {
      int sum = 0;
      for (auto id : roots) sum += s[static_cast<std::size_t>(id)];
      if (sum > b) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(s);
    // odometer, last coordinate fastest so the output is lexicographic
    std::size_t k = N;
    while (k > 0 && s[k - 1] == top) s[--k] = 0;
    if (k == 0) break;
    ++s[k - 1];
  }
  return out;
}

/// D^k z^m / (k! m!) in divided powers, via exp(tD) z = z + t y + t^2 x
/// (for D z = y, D y = 2x): every coefficient is 1.
inline std::map<std::tuple<int, int, int>, int> rank2(int k, int m) {
  std::map<std::tuple<int, int, int>, int> out;
  for (int a = 0; 2 * a <= k; ++a) {
    const int b = k - 2 * a, c = m - a - b;
    if (c >= 0) out[{a, b, c}] = 1;
  }
  return out;
}

/// The non-trivial d_beta f_alpha listed for type C_n, as (op, var, result)
/// with a[i,~n] written as a[i,n].
inline std::set<std::tuple<pbw::RootId, pbw::RootId, pbw::RootId>> result_root_table(const pbw::RootSystem& rs) {
  using pbw::ColumnIndex;
  const int n = rs.rank();
  auto pl = [&](int i, int j) { return rs.index({i, ColumnIndex::plain(j)}); };
  auto br = [&](int i, int j) { return rs.index({i, ColumnIndex::bar(j)}); };
  std::set<std::tuple<pbw::RootId, pbw::RootId, pbw::RootId>> t;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const auto a = pl(i, j);
      for (int s = i; s < j; ++s) t.insert({pl(i, s), a, pl(s + 1, j)});
      for (int s = i + 1; s <= j; ++s) t.insert({pl(s, j), a, pl(i, s - 1)});

      const auto ab = br(i, j);
      for (int s = i; s < j; ++s) t.insert({pl(i, s), ab, br(s + 1, j)});
      for (int s = j; s <= n - 1; ++s) t.insert({pl(i, s), ab, br(j, s + 1)});
      for (int s = j + 1; s <= n; ++s) t.insert({br(i, s), ab, pl(j, s - 1)});
      for (int s = i; s < j; ++s) t.insert({br(s + 1, j), ab, pl(i, s)});
      for (int s = j; s <= n - 1; ++s) t.insert({br(j, s + 1), ab, pl(i, s)});
      for (int s = j + 1; s <= n; ++s) t.insert({pl(j, s - 1), ab, br(i, s)});
    }
  return t;
}

}  // namespace brute
