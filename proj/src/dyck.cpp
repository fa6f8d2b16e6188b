#include "pbw/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbw {

long long PathInequality::bound(std::span<const int> m) const {
  long long b = 0;
  for (int k = low; k <= high; ++k) b += m[static_cast<std::size_t>(k - 1)];
  return b;
}

namespace {

bool is_end(const RootSystem& rs, RootId id) { return rs.is_simple(id) || rs.is_symplectic_top(id); }

void extend(const RootSystem& rs, std::vector<RootId>& cur, std::vector<DyckPath>& out) {
  const RootId last = cur.back();
  if (is_end(rs, last)) out.push_back({cur});
  for (RootId s : rs.successors(last)) {
    cur.push_back(s);
    extend(rs, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(const RootSystem& rs) {
  std::vector<DyckPath> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<RootId> cur{rs.simple(i)};
    extend(rs, cur, out);
  }
  return out;
}

std::vector<std::vector<PositiveRoot>> enumerate_paths(const RootSystemSpec& spec) {
  RootSystem rs(spec);
  std::vector<std::vector<PositiveRoot>> out;
  for (const auto& p : enumerate_paths(rs)) {
    auto& v = out.emplace_back();
    for (RootId id : p.roots) v.push_back(rs.root(id));
  }
  return out;
}

bool is_path(const RootSystem& rs, std::span<const RootId> seq) {
  if (seq.empty()) return false;
  for (RootId id : seq)
    if (id < 0 || id >= static_cast<RootId>(rs.size())) return false;
  if (!rs.is_simple(seq.front()) || !is_end(rs, seq.back())) return false;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
    auto next = rs.successors(seq[t]);
    if (std::find(next.begin(), next.end(), seq[t + 1]) == next.end()) return false;
  }
  return true;
}

bool is_path(const RootSystemSpec& spec, std::span<const PositiveRoot> seq) {
  RootSystem rs(spec);
  std::vector<RootId> ids;
  for (const auto& r : seq) {
    auto id = rs.find(r);
    if (!id) return false;
    ids.push_back(*id);
  }
  return is_path(rs, ids);
}

PathInequality path_inequality(const RootSystem& rs, const DyckPath& path) {
  if (!is_path(rs, path.roots)) throw std::invalid_argument("not a Dyck path: " + path_string(rs, path));
  PathInequality q;
  q.roots = path.roots;
  q.low = rs.root(path.roots.front()).i;
  const RootId last = path.roots.back();
  q.high = rs.is_symplectic_top(last) ? rs.rank() : rs.root(last).j.k;
  return q;
}

std::string path_string(const RootSystem& rs, const DyckPath& path) {
  std::string s;
  for (RootId id : path.roots) {
    if (!s.empty()) s += ' ';
    s += id >= 0 && id < static_cast<RootId>(rs.size()) ? rs.token(id) : "?";
  }
  return s;
}

}  // namespace pbw
