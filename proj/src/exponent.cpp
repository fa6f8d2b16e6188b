#include "pbw/exponent.hpp"

#include <charconv>
#include <stdexcept>

namespace pbw {

int MultiExponent::degree() const {
  int d = 0;
  for (int x : s_) d += x;
  return d;
}

bool MultiExponent::is_zero() const {
  for (int x : s_)
    if (x != 0) return false;
  return true;
}

MultiExponent& MultiExponent::operator+=(const MultiExponent& o) {
  if (o.size() != size()) throw std::invalid_argument("exponent size mismatch");
  for (std::size_t b = 0; b < s_.size(); ++b) s_[b] += o.s_[b];
  return *this;
}

SimpleRootVector weight_drop(const RootSystem& rs, const MultiExponent& s) {
  if (s.size() != rs.size()) throw std::invalid_argument("exponent size mismatch");
  SimpleRootVector w(static_cast<std::size_t>(rs.rank()), 0);
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (s[b] == 0) continue;
    auto c = rs.simple_coords(static_cast<RootId>(b));
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += s[b] * c[k];
  }
  return w;
}

std::string format_exponent(const RootSystem& rs, const MultiExponent& s) {
  std::string out;
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (s[b] == 0) continue;
    if (!out.empty()) out += ',';
    out += rs.token(static_cast<RootId>(b)) + "=" + std::to_string(s[b]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

}  // namespace

MultiExponent parse_exponent(const RootSystem& rs, std::string_view text) {
  MultiExponent s(rs.size());
  text = trim(text);
  if (text.empty()) return s;
  // split on commas that are not inside brackets
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t p = 0; p <= text.size(); ++p) {
    if (p < text.size()) {
      if (text[p] == '[') ++depth;
      if (text[p] == ']') --depth;
      if (text[p] != ',' || depth != 0) continue;
    }
    auto item = trim(text.substr(start, p - start));
    start = p + 1;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("bad exponent token '" + std::string(item) + "': expected root=count");
    RootId id = rs.parse_token(trim(item.substr(0, eq)));
    auto num = trim(item.substr(eq + 1));
    int k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || k < 0)
      throw std::invalid_argument("bad exponent token '" + std::string(item) + "': count must be a non-negative integer");
    s[static_cast<std::size_t>(id)] += k;
  }
  return s;
}

namespace {

void fill(std::vector<int>& cur, std::size_t pos, int left, std::vector<MultiExponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int v = 0; v <= left; ++v) {
    cur[pos] = v;
    fill(cur, pos + 1, left - v, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiExponent> exponents_of_degree(std::size_t n, int d) {
  std::vector<MultiExponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> cur(n, 0);
  fill(cur, 0, d, out);
  return out;
}

}  // namespace pbw
