#include "pbw/straighten.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbw {

std::vector<int> d_stat(const RootSystem& rs, const MultiExponent& s) {
  if (rs.family() != Family::C) throw std::invalid_argument("d-statistic is defined for family C only");
  if (s.size() != rs.size()) throw std::invalid_argument("exponent size mismatch");
  const int n = rs.rank();
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (std::size_t b = 0; b < s.size(); ++b) d[static_cast<std::size_t>(n - rs.root(static_cast<RootId>(b)).i)] += s[b];
  return d;
}

std::strong_ordering compare(const RootSystem& rs, const MultiExponent& s, const MultiExponent& t) {
  if (s.size() != t.size()) throw std::invalid_argument("exponent size mismatch");
  if (auto c = s.degree() <=> t.degree(); c != 0) return c;
  if (rs.family() == Family::C) {
    // smaller d wins
    if (auto c = d_stat(rs, t) <=> d_stat(rs, s); c != 0) return c;
  }
  for (std::size_t b = s.size(); b-- > 0;)
    if (s[b] != t[b]) return s[b] <=> t[b];
  return std::strong_ordering::equal;
}

Straightener::Straightener(const RootSystem& rs, DominantWeight m) : poly_(rs, std::move(m)), act_(rs) {}

namespace {

struct Tallies {
  const RootSystem& rs;
  const MultiExponent& sp;

  int col(ColumnIndex c) const {
    if (c.barred && c.k == rs.rank()) c.barred = false;
    int sum = 0;
    for (std::size_t b = 0; b < sp.size(); ++b)
      if (rs.root(static_cast<RootId>(b)).j == c) sum += sp[b];
    return sum;
  }
  int row(int i) const {
    int sum = 0;
    for (std::size_t b = 0; b < sp.size(); ++b)
      if (rs.root(static_cast<RootId>(b)).i == i) sum += sp[b];
    return sum;
  }
};

bool symplectic_end(const RootSystem& rs, const DyckPath& p) { return rs.is_symplectic_top(p.roots.back()); }

}  // namespace

RootId Straightener::top_of(std::size_t path) const {
  const auto& rs = roots();
  const auto& q = poly_.inequalities()[path];
  if (symplectic_end(rs, poly_.paths()[path])) return rs.index({q.low, ColumnIndex::bar(q.low)});
  return rs.index({q.low, ColumnIndex::plain(q.high)});
}

DPPolynomial Straightener::seed(std::size_t path, const MultiExponent& sp) const {
  return DPPolynomial::power(roots().size(), top_of(path), sp.degree());
}

std::vector<PartialOperator> Straightener::word(std::size_t path, const MultiExponent& sp) const {
  const auto& rs = roots();
  const auto& p = poly_.paths().at(path);
  if (sp.size() != rs.size()) throw std::invalid_argument("exponent size mismatch");
  for (std::size_t b = 0; b < sp.size(); ++b)
    if (sp[b] != 0 && std::find(p.roots.begin(), p.roots.end(), static_cast<RootId>(b)) == p.roots.end())
      throw std::invalid_argument("exponent not supported on path " + path_string(rs, p));

  Tallies t{rs, sp};
  std::vector<PartialOperator> w;
  auto push = [&](int i, ColumnIndex j, int k) {
    if (k > 0) w.push_back({rs.index({i, j}), k});
  };
  using CI = ColumnIndex;
  const auto& q = poly_.inequalities()[path];
  const int a = q.low;

  if (!symplectic_end(rs, p)) {
    const int b = q.high, N = b - a + 1;
    for (int u = 2; u <= N; ++u) push(a + u - 1, CI::plain(b), t.col(CI::plain(a + u - 2)));
    for (int u = N - 1; u >= 1; --u) push(a, CI::plain(a + u - 1), t.row(a + u));
    return w;
  }

  const int n = rs.rank();
  const int N = n - a + 1;
  const int Ip = rs.root(p.roots.back()).i - a + 1;
  for (int u = 1; u <= Ip - 1; ++u) push(a, CI::bar(a + u), t.col(CI::plain(a + u - 1)));
  for (int u = Ip; u <= N - 1; ++u)
    push(a, CI::plain(a + u - 1), t.col(CI::plain(a + u - 1)) + t.col(CI::bar(a + u)));
  for (int u = N; u >= Ip + 1; --u) push(a + u - 1, CI::bar(a + u - 1), t.col(CI::plain(a + u - 2)));
  if (Ip >= 2) push(a, CI::plain(a + Ip - 2), t.col(CI::bar(a + Ip - 1)) + t.row(a + Ip - 1));
  for (int u = Ip - 2; u >= 1; --u) push(a, CI::plain(a + u - 1), t.row(a + u));
  return w;
}

const DPPolynomial& Straightener::element(std::size_t path, const MultiExponent& sp) const {
  const auto key = std::make_pair(path, sp);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const auto& rs = roots();
  if (sp.degree() <= poly_.bound(path))
    throw std::invalid_argument("exponent " + format_exponent(rs, sp) + " does not violate path " +
                                path_string(rs, poly_.paths()[path]));

  DPPolynomial e = act_.apply_word(word(path, sp), seed(path, sp));
  if (e.is_zero()) throw std::logic_error("straightening word annihilated the seed");
  auto lead = std::max_element(e.terms().begin(), e.terms().end(), [&](const auto& x, const auto& y) {
    return compare(rs, x.first, y.first) < 0;
  });
  if (lead->first != sp || (lead->second != 1 && lead->second != -1))
    throw std::logic_error("straightening word for " + format_exponent(rs, sp) + " on path " +
                           path_string(rs, poly_.paths()[path]) + " led with " + lead->second.get_str() + " * " +
                           format_exponent(rs, lead->first));
  if (lead->second < 0) e *= -1;

  std::lock_guard lock(mu_);
  return cache_.try_emplace(key, std::move(e)).first->second;
}

DPPolynomial Straightener::reduce(const MultiExponent& s) const {
  const auto& rs = roots();
  if (s.size() != rs.size()) throw std::invalid_argument("exponent size mismatch");
  for (int x : s)
    if (x < 0) throw std::invalid_argument("negative exponent");

  // Each popped term is strictly smaller than the previous one, so the loop
  // visits every exponent of this degree at most once.
  mpz_class cap;
  mpz_bin_uiui(cap.get_mpz_t(), static_cast<unsigned long>(s.degree()) + rs.size() - 1, rs.size() - 1);

  std::map<MultiExponent, mpz_class, MonomialLess> work(MonomialLess{&rs});
  work.emplace(s, 1);
  DPPolynomial out;
  mpz_class steps = 0;
  while (!work.empty()) {
    if (++steps > cap) throw std::logic_error("straightening did not terminate for " + format_exponent(rs, s));
    auto node = work.extract(std::prev(work.end()));
    const MultiExponent& u = node.key();
    const mpz_class& c = node.mapped();
    const int p = poly_.first_violation(u);
    if (p < 0) {
      out.add_term(u, c);
      continue;
    }
    MultiExponent on(u.size()), off = u;
    for (RootId b : poly_.paths()[static_cast<std::size_t>(p)].roots) {
      on[static_cast<std::size_t>(b)] = u[static_cast<std::size_t>(b)];
      off[static_cast<std::size_t>(b)] = 0;
    }
    // f^(on) = -(tail) modulo the annihilator, and f^(u) = f^(on) f^(off)
    for (const auto& [t, x] : element(static_cast<std::size_t>(p), on).terms()) {
      if (t == on) continue;
      mpz_class y = -c * x * dp_product_coeff(t, off);
      auto [it, fresh] = work.try_emplace(t + off, y);
      if (!fresh) {
        it->second += y;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return out;
}

std::vector<int> d_stat(const RootSystemSpec& spec, const MultiExponent& s) { return d_stat(RootSystem(spec), s); }

std::strong_ordering compare(const RootSystemSpec& spec, const MultiExponent& s, const MultiExponent& t) {
  return compare(RootSystem(spec), s, t);
}

std::optional<DyckPath> find_violation(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s) {
  Polytope poly(RootSystem(spec), m);
  const int p = poly.first_violation(s);
  if (p < 0) return std::nullopt;
  return poly.paths()[static_cast<std::size_t>(p)];
}

DPPolynomial straightening_element(const RootSystemSpec& spec, const DominantWeight& m, const DyckPath& path,
                                   const MultiExponent& sp) {
  Straightener st(RootSystem(spec), m);
  const auto& paths = st.polytope().paths();
  auto it = std::find(paths.begin(), paths.end(), path);
  if (it == paths.end()) throw std::invalid_argument("not a Dyck path: " + path_string(st.roots(), path));
  return st.element(static_cast<std::size_t>(it - paths.begin()), sp);
}

DPPolynomial reduce_to_basis(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s) {
  return Straightener(RootSystem(spec), m).reduce(s);
}

}  // namespace pbw
