#include "pbw/module.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "pbw/weyl.hpp"

namespace pbw {

std::size_t module_cap() {
  if (const char* env = std::getenv("PBW_MODULE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000;
}

namespace {

void combinations(int d, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int a = start; a < d; ++a) {
    cur.push_back(a);
    combinations(d, k, a + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExplicitModule::Image ExplicitModule::wedge_image(const Factor& fac, const IntMatrix& x, int basis) const {
  std::map<int, std::int64_t> acc;
  const auto& set = fac.subsets[static_cast<std::size_t>(basis)];
  for (std::size_t pos = 0; pos < set.size(); ++pos) {
    const int a = set[pos];
    for (int b = 0; b < x.dim(); ++b) {
      const auto c = x(b, a);
      if (c == 0) continue;
      if (b != a && std::find(set.begin(), set.end(), b) != set.end()) continue;
      auto img = set;
      img[pos] = b;
      // sort, tracking the sign of the permutation
      int sign = 1;
      for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = 0; j + 1 < img.size() - i; ++j)
          if (img[j] > img[j + 1]) {
            std::swap(img[j], img[j + 1]);
            sign = -sign;
          }
      acc[fac.index.at(img)] += sign * c;
    }
  }
  Image out;
  for (auto [k, c] : acc)
    if (c != 0) out.emplace_back(k, c);
  return out;
}

template <class Lookup>
SparseVec ExplicitModule::act(const SparseVec& v, Lookup&& image) const {
  SparseVec out;
  for (const auto& [idx, c] : v) {
    for (std::size_t slot = 0; slot < size_.size(); ++slot) {
      const auto digit = static_cast<int>((idx / radix_[slot]) % size_[slot]);
      const Image& img = image(static_cast<std::size_t>(factor_of_slot_[slot]), digit);
      for (auto [d, x] : img) {
        const std::uint64_t j = idx - static_cast<std::uint64_t>(digit) * radix_[slot] +
                                static_cast<std::uint64_t>(d) * radix_[slot];
        auto [it, fresh] = out.try_emplace(j, c * x);
        if (fresh) continue;
        it->second += c * x;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

ExplicitModule::ExplicitModule(const RootSystem& rs, DominantWeight m, std::size_t cap) : ch_(rs), m_(std::move(m)) {
  const int n = rs.rank();
  if (static_cast<int>(m_.size()) != n) throw std::invalid_argument("weight length != rank");
  const mpz_class wd = weyl_dim(rs.spec(), m_);
  if (wd > cap)
    throw std::length_error("module dimension " + wd.get_str() + " exceeds cap " + std::to_string(cap) +
                            " (set PBW_MODULE_CAP to raise it)");

  const int d = ch_.dim();
  std::map<int, int> kind_of_degree;
  for (int i = 1; i <= n; ++i) {
    if (m_[static_cast<std::size_t>(i - 1)] == 0) continue;
    Factor fac;
    fac.degree = i;
    std::vector<int> cur;
    combinations(d, i, 0, cur, fac.subsets);
    for (std::size_t k = 0; k < fac.subsets.size(); ++k) fac.index[fac.subsets[k]] = static_cast<int>(k);
    kind_of_degree[i] = static_cast<int>(kinds_.size());
    kinds_.push_back(std::move(fac));
  }
  for (auto& fac : kinds_) {
    for (RootId b = 0; b < static_cast<RootId>(rs.size()); ++b) {
      const IntMatrix f = ch_.f(b);
      auto& table = fac.f_action.emplace_back();
      for (int k = 0; k < static_cast<int>(fac.subsets.size()); ++k) table.push_back(wedge_image(fac, f, k));
    }
  }
  std::uint64_t stride = 1;
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < m_[static_cast<std::size_t>(i - 1)]; ++c) {
      const int kind = kind_of_degree.at(i);
      const auto sz = static_cast<std::uint64_t>(kinds_[static_cast<std::size_t>(kind)].subsets.size());
      factor_of_slot_.push_back(kind);
      radix_.push_back(stride);
      size_.push_back(sz);
      if (stride > std::numeric_limits<std::uint64_t>::max() / sz)
        throw std::length_error("ambient tensor space too large to index");
      stride *= sz;
    }
  top_[0] = 1;

  // PBW filtration, one level at a time
  const SimpleRootVector zero(static_cast<std::size_t>(n), 0);
  spaces_[zero].insert(top_, 0);
  poincare_[zero] = {1};
  std::vector<std::pair<SimpleRootVector, SparseVec>> fresh{{zero, top_}};
  int level = 0;
  while (!fresh.empty()) {
    ++level;
    std::vector<std::pair<SimpleRootVector, SparseVec>> next;
    for (const auto& [drop, w] : fresh)
      for (RootId b = 0; b < static_cast<RootId>(rs.size()); ++b) {
        SparseVec u = apply_f(b, w);
        if (u.empty()) continue;
        SimpleRootVector nd = drop;
        auto c = rs.simple_coords(b);
        for (int k = 0; k < n; ++k) nd[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k)];
        if (!spaces_[nd].insert(u, level)) continue;
        auto& poly = poincare_[nd];
        if (poly.size() <= static_cast<std::size_t>(level)) poly.resize(static_cast<std::size_t>(level) + 1, 0);
        ++poly[static_cast<std::size_t>(level)];
        next.emplace_back(nd, std::move(u));
      }
    fresh = std::move(next);
  }
  levels_ = level - 1;
  for (const auto& [drop, e] : spaces_) dim_ += e.rank();
  if (mpz_class(static_cast<unsigned long>(dim_)) != wd)
    throw std::logic_error("cyclic span has dimension " + std::to_string(dim_) + ", Weyl formula gives " + wd.get_str());
}

SparseVec ExplicitModule::apply(const IntMatrix& x, const SparseVec& v) const {
  std::map<std::pair<std::size_t, int>, Image> memo;
  return act(v, [&](std::size_t kind, int digit) -> const Image& {
    auto [it, fresh] = memo.try_emplace({kind, digit});
    if (fresh) it->second = wedge_image(kinds_[kind], x, digit);
    return it->second;
  });
}

SparseVec ExplicitModule::apply_f(RootId b, const SparseVec& v) const {
  return act(v, [&](std::size_t kind, int digit) -> const Image& {
    return kinds_[kind].f_action[static_cast<std::size_t>(b)][static_cast<std::size_t>(digit)];
  });
}

SparseVec ExplicitModule::apply_f_power(RootId b, int k, SparseVec v) const {
  for (int t = 0; t < k && !v.empty(); ++t) v = apply_f(b, v);
  if (k <= 1) return v;
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  for (auto& [idx, c] : v) {
    if (!mpz_divisible_p(c.get_mpz_t(), f.get_mpz_t())) throw std::logic_error("divided power not integral");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), f.get_mpz_t());
  }
  return v;
}

SparseVec ExplicitModule::apply_monomial(const MultiExponent& s, const SparseVec& v) const {
  if (s.size() != roots().size()) throw std::invalid_argument("exponent size mismatch");
  SparseVec r = v;
  for (std::size_t b = s.size(); b-- > 0 && !r.empty();)
    if (s[b] > 0) r = apply_f_power(static_cast<RootId>(b), s[b], std::move(r));
  return r;
}

SparseVec ExplicitModule::evaluate(const DPPolynomial& p) const {
  SparseVec out;
  for (const auto& [s, c] : p.terms()) axpy(out, c, apply_monomial(s, top_));
  return out;
}

bool ExplicitModule::in_filtration(const SimpleRootVector& drop, const SparseVec& v, int level) const {
  if (v.empty()) return true;
  if (level < 0) return false;
  auto it = spaces_.find(drop);
  if (it == spaces_.end()) return false;
  return it->second.contains(v, level);
}

bool ExplicitModule::in_module(const SimpleRootVector& drop, const SparseVec& v) const {
  return in_filtration(drop, v, std::numeric_limits<int>::max());
}

}  // namespace pbw
