#include "pbw/weyl.hpp"

#include <set>
#include <stdexcept>

namespace pbw {

std::vector<int> weight_eps(const RootSystem& rs, const DominantWeight& m) {
  const int n = rs.rank();
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("weight length != rank");
  const int dim = rs.family() == Family::A ? n + 1 : n;
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < i; ++k) v[static_cast<std::size_t>(k)] += m[static_cast<std::size_t>(i - 1)];
  return v;
}

namespace {

long long dot(std::span<const int> a, std::span<const long long> b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

long long dot(std::span<const long long> a, std::span<const long long> b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::vector<long long> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

mpz_class weyl_dim(const RootSystemSpec& spec, const DominantWeight& m) {
  RootSystem rs(spec);
  auto lam = widen(weight_eps(rs, m));
  auto rho = widen(weight_eps(rs, DominantWeight(static_cast<std::size_t>(rs.rank()), 1)));
  mpq_class d = 1;
  for (RootId b = 0; b < static_cast<RootId>(rs.size()); ++b) {
    auto beta = rs.eps_coords(b);
    const long long r = dot(beta, rho);
    long long l = 0;
    for (std::size_t k = 0; k < lam.size(); ++k) l += beta[k] * (lam[k] + rho[k]);
    d *= mpq_class(static_cast<long>(l), static_cast<long>(r));
  }
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return d.get_num();
}

std::map<SimpleRootVector, std::int64_t> freudenthal(const RootSystemSpec& spec, const DominantWeight& m) {
  RootSystem rs(spec);
  const int n = rs.rank();
  const std::size_t N = rs.size();
  auto lam = widen(weight_eps(rs, m));
  auto rho = widen(weight_eps(rs, DominantWeight(static_cast<std::size_t>(n), 1)));
  std::vector<long long> lr(lam.size());
  for (std::size_t k = 0; k < lam.size(); ++k) lr[k] = lam[k] + rho[k];
  const long long top = dot(lr, lr);

  std::vector<std::vector<long long>> simple_eps;
  for (int i = 1; i <= n; ++i) {
    auto e = rs.eps_coords(rs.simple(i));
    simple_eps.emplace_back(e.begin(), e.end());
  }
  auto to_eps = [&](const SimpleRootVector& drop) {
    std::vector<long long> mu = lam;
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < mu.size(); ++k) mu[k] -= drop[static_cast<std::size_t>(i)] * simple_eps[static_cast<std::size_t>(i)][k];
    return mu;
  };

  std::map<SimpleRootVector, std::int64_t> mult;
  mult[SimpleRootVector(static_cast<std::size_t>(n), 0)] = 1;
  std::set<SimpleRootVector> level{SimpleRootVector(static_cast<std::size_t>(n), 0)};
  while (!level.empty()) {
    std::set<SimpleRootVector> cand;
    for (const auto& d : level)
      for (int i = 0; i < n; ++i) {
        auto e = d;
        ++e[static_cast<std::size_t>(i)];
        cand.insert(e);
      }
    std::set<SimpleRootVector> next;
    for (const auto& d : cand) {
      auto mu = to_eps(d);
      std::vector<long long> mr(mu.size());
      for (std::size_t k = 0; k < mu.size(); ++k) mr[k] = mu[k] + rho[k];
      const long long denom = top - dot(mr, mr);
      if (denom <= 0) continue;
      long long num = 0;
      for (std::size_t b = 0; b < N; ++b) {
        auto bc = rs.simple_coords(static_cast<RootId>(b));
        auto be = rs.eps_coords(static_cast<RootId>(b));
        for (int k = 1;; ++k) {
          SimpleRootVector up = d;
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            up[static_cast<std::size_t>(i)] -= k * bc[static_cast<std::size_t>(i)];
            if (up[static_cast<std::size_t>(i)] < 0) ok = false;
          }
          if (!ok) break;
          auto it = mult.find(up);
          if (it == mult.end()) continue;
          auto upe = to_eps(up);
          num += it->second * dot(be, upe);
        }
      }
      num *= 2;
      if (num % denom != 0) throw std::logic_error("Freudenthal recursion not integral");
      const long long v = num / denom;
      if (v > 0) {
        mult[d] = v;
        next.insert(d);
      }
    }
    level = std::move(next);
  }
  return mult;
}

}  // namespace pbw
