#include "pbw/linalg.hpp"

#include <stdexcept>

namespace pbw {

void axpy(SparseVec& y, const mpz_class& a, const SparseVec& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k, a * v);
    if (fresh) continue;
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

void make_primitive(SparseVec& v) {
  if (v.empty()) return;
  mpz_class g = 0;
  for (const auto& [k, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (v.begin()->second < 0) g = -g;
  if (g == 1) return;
  for (auto& [k, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

SparseVec scaled(const SparseVec& v, const mpz_class& a) {
  SparseVec r;
  if (a == 0) return r;
  for (const auto& [k, x] : v) r.emplace(k, a * x);
  return r;
}

SparseVec Echelon::reduce(SparseVec v, int max_level) const {
  std::uint64_t lo = 0;
  for (;;) {
    const Row* row = nullptr;
    auto it = v.lower_bound(lo);
    for (; it != v.end(); ++it) {
      auto r = rows_.find(it->first);
      if (r != rows_.end() && r->second.level <= max_level) {
        row = &r->second;
        break;
      }
    }
    if (!row) return v;
    const std::uint64_t p = it->first;
    const mpz_class& a = row->v.begin()->second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), it->second.get_mpz_t());
    const mpz_class ca = a / g, cb = it->second / g;
    // rows only have entries at or after their pivot
    for (auto& [k, x] : v) x *= ca;
    axpy(v, -cb, row->v);
    make_primitive(v);
    lo = p + 1;
  }
}

bool Echelon::insert(SparseVec v, int level) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  make_primitive(v);
  const std::uint64_t p = v.begin()->first;
  rows_.emplace(p, Row{std::move(v), level});
  return true;
}

std::size_t Echelon::rank_up_to(int level) const {
  std::size_t r = 0;
  for (const auto& [p, row] : rows_)
    if (row.level <= level) ++r;
  return r;
}

std::size_t rank(const std::vector<SparseVec>& vs) {
  Echelon e;
  for (const auto& v : vs) e.insert(v, 0);
  return e.rank();
}

std::optional<std::vector<mpq_class>> solve(const std::vector<SparseVec>& cols, const SparseVec& rhs) {
  // dense system on the union of supports
  std::map<std::uint64_t, std::size_t> rowid;
  for (const auto& c : cols)
    for (const auto& [k, x] : c) rowid.try_emplace(k, 0);
  for (const auto& [k, x] : rhs) rowid.try_emplace(k, 0);
  std::size_t nr = 0;
  for (auto& [k, id] : rowid) id = nr++;
  const std::size_t nc = cols.size();
  std::vector<std::vector<mpq_class>> a(nr, std::vector<mpq_class>(nc + 1, 0));
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& [k, x] : cols[j]) a[rowid[k]][j] = x;
  for (const auto& [k, x] : rhs) a[rowid[k]][nc] = x;

  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t j = 0; j < nc && r < nr; ++j) {
    std::size_t p = r;
    while (p < nr && a[p][j] == 0) ++p;
    if (p == nr) throw std::invalid_argument("solve: columns are linearly dependent");
    std::swap(a[p], a[r]);
    const mpq_class inv = 1 / a[r][j];
    for (std::size_t c = j; c <= nc; ++c) a[r][c] *= inv;
    for (std::size_t q = 0; q < nr; ++q) {
      if (q == r || a[q][j] == 0) continue;
      const mpq_class f = a[q][j];
      for (std::size_t c = j; c <= nc; ++c) a[q][c] -= f * a[r][c];
    }
    pivcol.push_back(j);
    ++r;
  }
  if (pivcol.size() < nc) throw std::invalid_argument("solve: columns are linearly dependent");
  for (std::size_t q = r; q < nr; ++q)
    if (a[q][nc] != 0) return std::nullopt;
  std::vector<mpq_class> x(nc);
  for (std::size_t q = 0; q < r; ++q) x[pivcol[q]] = a[q][nc];
  return x;
}

}  // namespace pbw
