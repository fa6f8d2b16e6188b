#include "pbw/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace pbw {

DominantWeight parse_weight(std::string_view text, int rank) {
  DominantWeight m;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(start, comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 0)
      throw std::invalid_argument("bad weight token '" + std::string(tok) + "': expected a non-negative integer");
    m.push_back(v);
    start = comma + 1;
  }
  if (static_cast<int>(m.size()) != rank)
    throw std::invalid_argument("weight '" + std::string(text) + "' has " + std::to_string(m.size()) +
                                " entries, rank is " + std::to_string(rank));
  return m;
}

Polytope::Polytope(const RootSystem& rs, DominantWeight m) : rs_(rs), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != rs_.rank())
    throw std::invalid_argument("weight length " + std::to_string(m_.size()) + " != rank " +
                                std::to_string(rs_.rank()));
  for (int x : m_)
    if (x < 0) throw std::invalid_argument("weight entries must be non-negative");
  paths_ = enumerate_paths(rs_);
  through_.resize(rs_.size());
  for (std::size_t p = 0; p < paths_.size(); ++p) {
    ineq_.push_back(path_inequality(rs_, paths_[p]));
    bounds_.push_back(ineq_.back().bound(m_));
    for (RootId b : paths_[p].roots) through_[static_cast<std::size_t>(b)].push_back(static_cast<int>(p));
  }
  for (const auto& t : through_)
    if (t.empty()) throw std::logic_error("root on no Dyck path");
}

int Polytope::first_violation(const MultiExponent& s) const {
  if (s.size() != rs_.size())
    throw std::invalid_argument("exponent has " + std::to_string(s.size()) + " entries, system has " +
                                std::to_string(rs_.size()) + " roots");
  for (std::size_t p = 0; p < ineq_.size(); ++p) {
    long long sum = 0;
    for (RootId b : ineq_[p].roots) sum += s[static_cast<std::size_t>(b)];
    if (sum > bounds_[p]) return static_cast<int>(p);
  }
  return -1;
}

bool Polytope::contains(const MultiExponent& s) const {
  for (int x : s)
    if (x < 0) return false;
  return first_violation(s) < 0;
}

template <class Visit>
void Polytope::dfs(std::vector<int>& cur, std::vector<long long>& partial, std::size_t pos, Visit&& visit) const {
  if (pos == cur.size()) {
    visit(cur);
    return;
  }
  long long hi = std::numeric_limits<long long>::max();
  for (int p : through_[pos]) hi = std::min(hi, bounds_[static_cast<std::size_t>(p)] - partial[static_cast<std::size_t>(p)]);
  for (int v = 0; v <= hi; ++v) {
    cur[pos] = v;
    dfs(cur, partial, pos + 1, visit);
    for (int p : through_[pos]) ++partial[static_cast<std::size_t>(p)];
  }
  for (int p : through_[pos]) partial[static_cast<std::size_t>(p)] -= hi + 1;
  cur[pos] = 0;
}

std::vector<std::vector<int>> Polytope::prefixes(std::size_t depth) const {
  std::vector<std::vector<int>> out;
  std::function<void(std::vector<int>&, std::vector<long long>&, std::size_t)> rec =
      [&](std::vector<int>& cur, std::vector<long long>& partial, std::size_t pos) {
        if (pos == depth) {
          out.emplace_back(cur.begin(), cur.begin() + static_cast<long>(depth));
          return;
        }
        long long hi = std::numeric_limits<long long>::max();
        for (int p : through_[pos]) hi = std::min(hi, bounds_[static_cast<std::size_t>(p)] - partial[static_cast<std::size_t>(p)]);
        for (int v = 0; v <= hi; ++v) {
          cur[pos] = v;
          for (int p : through_[pos]) partial[static_cast<std::size_t>(p)] += v;
          rec(cur, partial, pos + 1);
          for (int p : through_[pos]) partial[static_cast<std::size_t>(p)] -= v;
        }
        cur[pos] = 0;
      };
  std::vector<int> cur(rs_.size(), 0);
  std::vector<long long> partial(paths_.size(), 0);
  rec(cur, partial, 0);
  return out;
}

std::size_t Polytope::split_depth() const {
  const std::size_t want = 16 * static_cast<std::size_t>(omp_get_max_threads());
  std::size_t d = 0;
  while (d < rs_.size() && prefixes(d).size() < want) ++d;
  return d;
}

namespace {

// Runs body(prefix_index, cur, partial) for each prefix with state restored.
template <class Body>
void for_each_prefix_parallel(const std::vector<std::vector<int>>& pre, std::size_t nroots,
                              const std::vector<std::vector<int>>& through, Body&& body, std::size_t npaths) {
  const long count = static_cast<long>(pre.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    std::vector<int> cur(nroots, 0);
    std::vector<long long> partial(npaths, 0);
    const auto& p = pre[static_cast<std::size_t>(t)];
    for (std::size_t b = 0; b < p.size(); ++b) {
      cur[b] = p[b];
      for (int q : through[b]) partial[static_cast<std::size_t>(q)] += p[b];
    }
    body(static_cast<std::size_t>(t), cur, partial, p.size());
  }
}

void accumulate(const RootSystem& rs, const std::vector<int>& s, GradedCharacter& ch) {
  SimpleRootVector drop(static_cast<std::size_t>(rs.rank()), 0);
  int deg = 0;
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (s[b] == 0) continue;
    deg += s[b];
    auto c = rs.simple_coords(static_cast<RootId>(b));
    for (std::size_t k = 0; k < drop.size(); ++k) drop[k] += s[b] * c[k];
  }
  auto& poly = ch[drop];
  if (poly.size() <= static_cast<std::size_t>(deg)) poly.resize(static_cast<std::size_t>(deg) + 1, 0);
  ++poly[static_cast<std::size_t>(deg)];
}

void merge_into(GradedCharacter& dst, const GradedCharacter& src) {
  for (const auto& [w, poly] : src) {
    auto& d = dst[w];
    if (d.size() < poly.size()) d.resize(poly.size(), 0);
    for (std::size_t k = 0; k < poly.size(); ++k) d[k] += poly[k];
  }
}

}  // namespace

std::vector<MultiExponent> Polytope::points_serial() const {
  std::vector<MultiExponent> out;
  std::vector<int> cur(rs_.size(), 0);
  std::vector<long long> partial(paths_.size(), 0);
  dfs(cur, partial, 0, [&](const std::vector<int>& s) { out.emplace_back(s); });
  return out;
}

std::vector<MultiExponent> Polytope::points() const {
  const auto pre = prefixes(split_depth());
  std::vector<std::vector<MultiExponent>> parts(pre.size());
  for_each_prefix_parallel(
      pre, rs_.size(), through_,
      [&](std::size_t t, std::vector<int>& cur, std::vector<long long>& partial, std::size_t depth) {
        dfs(cur, partial, depth, [&](const std::vector<int>& s) { parts[t].emplace_back(s); });
      },
      paths_.size());
  std::vector<MultiExponent> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts)
    for (auto& s : p) out.push_back(std::move(s));
  return out;
}

std::size_t Polytope::count() const {
  const auto pre = prefixes(split_depth());
  std::size_t total = 0;
  const long n = static_cast<long>(pre.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long t = 0; t < n; ++t) {
    std::vector<int> cur(rs_.size(), 0);
    std::vector<long long> partial(paths_.size(), 0);
    const auto& p = pre[static_cast<std::size_t>(t)];
    for (std::size_t b = 0; b < p.size(); ++b) {
      cur[b] = p[b];
      for (int q : through_[b]) partial[static_cast<std::size_t>(q)] += p[b];
    }
    std::size_t local = 0;
    dfs(cur, partial, p.size(), [&](const std::vector<int>&) { ++local; });
    total += local;
  }
  return total;
}

GradedCharacter Polytope::character_serial() const {
  GradedCharacter ch;
  std::vector<int> cur(rs_.size(), 0);
  std::vector<long long> partial(paths_.size(), 0);
  dfs(cur, partial, 0, [&](const std::vector<int>& s) { accumulate(rs_, s, ch); });
  return ch;
}

GradedCharacter Polytope::character() const {
  const auto pre = prefixes(split_depth());
  std::vector<GradedCharacter> local(static_cast<std::size_t>(omp_get_max_threads()));
  for_each_prefix_parallel(
      pre, rs_.size(), through_,
      [&](std::size_t, std::vector<int>& cur, std::vector<long long>& partial, std::size_t depth) {
        auto& ch = local[static_cast<std::size_t>(omp_get_thread_num())];
        dfs(cur, partial, depth, [&](const std::vector<int>& s) { accumulate(rs_, s, ch); });
      },
      paths_.size());
  GradedCharacter out;
  for (const auto& ch : local) merge_into(out, ch);
  return out;
}

std::vector<long long> Polytope::max_path_sums() const {
  const auto pre = prefixes(split_depth());
  const std::size_t np = ineq_.size();
  std::vector<std::vector<long long>> local(static_cast<std::size_t>(omp_get_max_threads()),
                                            std::vector<long long>(np, 0));
  for_each_prefix_parallel(
      pre, rs_.size(), through_,
      [&](std::size_t, std::vector<int>& cur, std::vector<long long>& partial, std::size_t depth) {
        auto& mx = local[static_cast<std::size_t>(omp_get_thread_num())];
        dfs(cur, partial, depth, [&](const std::vector<int>& s) {
          for (std::size_t p = 0; p < np; ++p) {
            long long sum = 0;
            for (RootId b : ineq_[p].roots) sum += s[static_cast<std::size_t>(b)];
            mx[p] = std::max(mx[p], sum);
          }
        });
      },
      paths_.size());
  std::vector<long long> out(np, 0);
  for (const auto& mx : local)
    for (std::size_t p = 0; p < np; ++p) out[p] = std::max(out[p], mx[p]);
  return out;
}

bool contains(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s) {
  return Polytope(RootSystem(spec), m).contains(s);
}

std::vector<MultiExponent> enumerate_points(const RootSystemSpec& spec, const DominantWeight& m) {
  return Polytope(RootSystem(spec), m).points();
}

GradedCharacter graded_character(const RootSystemSpec& spec, const DominantWeight& m) {
  return Polytope(RootSystem(spec), m).character();
}

namespace {

// Does u split as s + t with s in S(l) and t in S(m)?  Depth first over the
// coordinates of s with both families of partial path sums kept feasible.
bool splits(const Polytope& pl, const Polytope& pm, const std::vector<std::vector<int>>& through,
            const std::vector<int>& u) {
  const std::size_t n = u.size();
  const std::size_t np = pl.inequalities().size();
  std::vector<long long> ps(np, 0), pt(np, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    long long hs = u[pos], ht = u[pos];
    for (int p : through[pos]) {
      hs = std::min(hs, pl.bound(static_cast<std::size_t>(p)) - ps[static_cast<std::size_t>(p)]);
      ht = std::min(ht, pm.bound(static_cast<std::size_t>(p)) - pt[static_cast<std::size_t>(p)]);
    }
    // s_pos in [u_pos - ht, hs]
    for (long long v = std::max(0LL, u[pos] - ht); v <= hs; ++v) {
      for (int p : through[pos]) {
        ps[static_cast<std::size_t>(p)] += v;
        pt[static_cast<std::size_t>(p)] += u[pos] - v;
      }
      const bool ok = rec(pos + 1);
      for (int p : through[pos]) {
        ps[static_cast<std::size_t>(p)] -= v;
        pt[static_cast<std::size_t>(p)] -= u[pos] - v;
      }
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

std::vector<std::vector<int>> through_table(const Polytope& p) {
  std::vector<std::vector<int>> t(p.roots().size());
  for (std::size_t q = 0; q < p.paths().size(); ++q)
    for (RootId b : p.paths()[q].roots) t[static_cast<std::size_t>(b)].push_back(static_cast<int>(q));
  return t;
}

DominantWeight add(const DominantWeight& a, const DominantWeight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  DominantWeight c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

MinkowskiReport minkowski_impl(const RootSystemSpec& spec, const DominantWeight& l, const DominantWeight& m,
                               std::size_t card_cap, bool parallel) {
  RootSystem rs(spec);
  Polytope pl(rs, l), pm(rs, m), ps(rs, add(l, m));
  MinkowskiReport rep;

  std::vector<long long> ml, mm;
  if (parallel) {
    ml = pl.max_path_sums();
    mm = pm.max_path_sums();
  } else {
    auto maxes = [](const Polytope& p) {
      std::vector<long long> mx(p.inequalities().size(), 0);
      for (const auto& s : p.points_serial())
        for (std::size_t q = 0; q < mx.size(); ++q) {
          long long sum = 0;
          for (RootId b : p.inequalities()[q].roots) sum += s[static_cast<std::size_t>(b)];
          mx[q] = std::max(mx[q], sum);
        }
      return mx;
    };
    ml = maxes(pl);
    mm = maxes(pm);
  }
  rep.subset = true;
  for (std::size_t q = 0; q < ml.size(); ++q)
    if (ml[q] + mm[q] > ps.bound(q)) rep.subset = false;

  rep.target_size = parallel ? ps.count() : ps.points_serial().size();
  if (rep.target_size > card_cap) return rep;

  const auto through = through_table(ps);
  std::size_t hits = 0;
  if (parallel) {
    const auto pts = ps.points();
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
    for (long k = 0; k < n; ++k)
      if (splits(pl, pm, through, pts[static_cast<std::size_t>(k)].values())) ++hits;
  } else {
    for (const auto& u : ps.points_serial())
      if (splits(pl, pm, through, u.values())) ++hits;
  }
  rep.cardinality_checked = true;
  rep.sum_size = hits;
  rep.cardinality_equal = rep.subset && hits == rep.target_size;
  return rep;
}

}  // namespace

MinkowskiReport minkowski_subset(const RootSystemSpec& spec, const DominantWeight& l, const DominantWeight& m,
                                 std::size_t card_cap) {
  return minkowski_impl(spec, l, m, card_cap, true);
}

MinkowskiReport minkowski_subset_serial(const RootSystemSpec& spec, const DominantWeight& l, const DominantWeight& m,
                                        std::size_t card_cap) {
  return minkowski_impl(spec, l, m, card_cap, false);
}

std::vector<MultiExponent> sumset(const std::vector<MultiExponent>& a, const std::vector<MultiExponent>& b) {
  std::set<MultiExponent> out;
  for (const auto& s : a)
    for (const auto& t : b) out.insert(s + t);
  return {out.begin(), out.end()};
}

}  // namespace pbw
