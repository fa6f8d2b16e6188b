#include "pbw/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace pbw {

char family_letter(Family f) { return f == Family::A ? 'A' : 'C'; }

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::Kill: return "Kill";
    case PairKind::TypeA2: return "TypeA2";
    case PairKind::C2_ad2: return "C2_ad2";
    case PairKind::C2_ad3: return "C2_ad3";
    case PairKind::C2_ad4: return "C2_ad4";
    case PairKind::C2_ad5: return "C2_ad5";
  }
  return "?";
}

RootSystemSpec make_spec(Family family, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(rank));
  return RootSystemSpec{family, rank};
}

int j_position(ColumnIndex c, int rank) {
  if (!c.barred || c.k == rank) return c.k;
  return 2 * rank - c.k;
}

namespace {

bool valid_root(const RootSystemSpec& spec, const PositiveRoot& r) {
  const int n = spec.rank;
  if (r.i < 1 || r.i > n) return false;
  if (!r.j.barred) return r.i <= r.j.k && r.j.k <= n;
  if (spec.family == Family::A) return false;
  // barred n is the same root as plain n
  return r.i <= r.j.k && r.j.k <= n;
}

PositiveRoot canonical(const RootSystemSpec& spec, PositiveRoot r) {
  if (r.j.barred && r.j.k == spec.rank) r.j.barred = false;
  return r;
}

}  // namespace

RootSystem::RootSystem(RootSystemSpec spec) : spec_(make_spec(spec.family, spec.rank)) {
  const int n = spec_.rank;
  const int width = 2 * n;
  lookup_.assign(static_cast<std::size_t>(n * width), -1);

  for (int i = 1; i <= n; ++i) {
    for (int k = i; k <= n; ++k) roots_.push_back({i, ColumnIndex::plain(k)});
    if (spec_.family == Family::C)
      for (int k = n - 1; k >= i; --k) roots_.push_back({i, ColumnIndex::bar(k)});
  }

  const int dim = spec_.family == Family::A ? n + 1 : n;
  for (std::size_t id = 0; id < roots_.size(); ++id) {
    const PositiveRoot& r = roots_[id];
    lookup_[static_cast<std::size_t>((r.i - 1) * width + j_position(r.j, n) - 1)] = static_cast<int>(id);

    std::vector<int> sc(static_cast<std::size_t>(n), 0);
    std::vector<int> ec(static_cast<std::size_t>(dim), 0);
    if (!r.j.barred) {
      for (int k = r.i; k <= r.j.k; ++k) sc[k - 1] = 1;
      ec[r.i - 1] += 1;
      if (spec_.family == Family::C && r.j.k == n)
        ec[n - 1] += 1;
      else
        ec[r.j.k] -= 1;
    } else {
      for (int k = r.i; k <= n; ++k) sc[k - 1] += 1;
      for (int k = r.j.k; k <= n - 1; ++k) sc[k - 1] += 1;
      ec[r.i - 1] += 1;
      ec[r.j.k - 1] += 1;
    }
    simple_.push_back(std::move(sc));
    eps_.push_back(std::move(ec));
  }
}

std::optional<RootId> RootSystem::find(PositiveRoot r) const {
  if (!valid_root(spec_, r)) return std::nullopt;
  r = canonical(spec_, r);
  const int pos = j_position(r.j, spec_.rank);
  const int id = lookup_[static_cast<std::size_t>((r.i - 1) * 2 * spec_.rank + pos - 1)];
  if (id < 0) return std::nullopt;
  return id;
}

RootId RootSystem::index(PositiveRoot r) const {
  auto id = find(r);
  if (!id) throw std::out_of_range("root " + root_token(r) + " not in " + family_letter(spec_.family) +
                                   std::to_string(spec_.rank));
  return *id;
}

RootId RootSystem::simple(int i) const { return index({i, ColumnIndex::plain(i)}); }

bool RootSystem::is_simple(RootId id) const {
  const auto& r = root(id);
  return !r.j.barred && r.j.k == r.i;
}

bool RootSystem::is_symplectic_top(RootId id) const {
  if (spec_.family != Family::C) return false;
  const auto& r = root(id);
  if (r.j.barred) return r.j.k == r.i;
  return r.i == spec_.rank && r.j.k == spec_.rank;
}

int RootSystem::height(RootId id) const {
  int h = 0;
  for (int c : simple_coords(id)) h += c;
  return h;
}

bool RootSystem::is_long(RootId id) const {
  if (spec_.family != Family::C) return false;
  for (int c : eps_coords(id))
    if (c == 2) return true;
  return false;
}

std::optional<RootId> RootSystem::from_eps(std::span<const int> v) const {
  for (std::size_t id = 0; id < eps_.size(); ++id)
    if (std::equal(v.begin(), v.end(), eps_[id].begin(), eps_[id].end())) return static_cast<RootId>(id);
  return std::nullopt;
}

std::optional<RootId> RootSystem::difference(RootId var, RootId op) const {
  auto a = eps_coords(var);
  auto b = eps_coords(op);
  std::vector<int> d(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) d[t] = a[t] - b[t];
  return from_eps(d);
}

std::vector<RootId> RootSystem::successors(RootId id) const {
  const int n = spec_.rank;
  const PositiveRoot r = root(id);
  std::vector<RootId> out;

  std::optional<ColumnIndex> next;
  if (!r.j.barred) {
    if (r.j.k < n)
      next = ColumnIndex::plain(r.j.k + 1);
    else if (spec_.family == Family::C && n > 1)
      next = ColumnIndex::bar(n - 1);
  } else if (r.j.k > 1) {
    next = ColumnIndex::bar(r.j.k - 1);
  }
  if (next) {
    if (auto s = find(r.i, *next)) out.push_back(*s);
  }
  if (auto s = find(r.i + 1, r.j)) out.push_back(*s);
  return out;
}

PairKind RootSystem::classify(RootId op, RootId var) const {
  if (op == var) return PairKind::Kill;
  auto rho = difference(var, op);
  if (!rho) return PairKind::Kill;
  if (spec_.family == Family::A) return PairKind::TypeA2;

  const bool lt = is_long(op), lb = is_long(var), lr = is_long(*rho);
  if (!lt && !lb && !lr) return PairKind::TypeA2;
  if (lt && !lb && !lr) return PairKind::C2_ad2;
  if (!lt && !lb && lr) return PairKind::C2_ad4;
  if (!lt && lb && !lr) return difference(*rho, op) ? PairKind::C2_ad5 : PairKind::C2_ad3;
  throw std::logic_error("unexpected root lengths in classify");
}

int RootSystem::pairing(RootId beta, int i) const {
  auto e = eps_coords(beta);
  const int n = spec_.rank;
  if (i < 1 || i > n) throw std::out_of_range("simple root index " + std::to_string(i));
  if (spec_.family == Family::C && i == n) return e[n - 1];
  return e[i - 1] - e[i];
}

std::string RootSystem::token(RootId id) const { return root_token(root(id)); }

std::string root_token(const PositiveRoot& r) {
  std::string s = "a[" + std::to_string(r.i) + ",";
  if (r.j.barred) s += "~";
  s += std::to_string(r.j.k) + "]";
  return s;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

RootId RootSystem::parse_token(std::string_view tok) const {
  auto bad = [&](const char* why) {
    return std::invalid_argument("bad root token '" + std::string(tok) + "': " + why);
  };
  if (tok.size() < 6 || tok.substr(0, 2) != "a[" || tok.back() != ']') throw bad("expected a[i,j] or a[i,~j]");
  auto body = tok.substr(2, tok.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw bad("missing comma");
  auto si = body.substr(0, comma);
  auto sj = body.substr(comma + 1);
  bool barred = false;
  if (!sj.empty() && sj.front() == '~') {
    barred = true;
    sj.remove_prefix(1);
  }
  int i = 0, j = 0;
  if (!parse_int(si, i) || !parse_int(sj, j)) throw bad("indices must be integers");
  auto id = find(i, ColumnIndex{j, barred});
  if (!id) throw bad("not a positive root of this system");
  return *id;
}

std::vector<PositiveRoot> positive_roots(const RootSystemSpec& spec) {
  RootSystem rs(spec);
  return {rs.roots().begin(), rs.roots().end()};
}

SimpleRootVector to_simple_coords(const RootSystemSpec& spec, const PositiveRoot& r) {
  RootSystem rs(spec);
  auto id = rs.find(r);
  if (!id) throw std::invalid_argument("root " + root_token(r) + " not in system");
  auto c = rs.simple_coords(*id);
  return {c.begin(), c.end()};
}

std::vector<PositiveRoot> root_successors(const RootSystemSpec& spec, const PositiveRoot& r) {
  RootSystem rs(spec);
  std::vector<PositiveRoot> out;
  for (RootId s : rs.successors(rs.index(r))) out.push_back(rs.root(s));
  return out;
}

PairKind classify_pair(const RootSystemSpec& spec, const PositiveRoot& op, const PositiveRoot& var) {
  RootSystem rs(spec);
  return rs.classify(rs.index(op), rs.index(var));
}

}  // namespace pbw
