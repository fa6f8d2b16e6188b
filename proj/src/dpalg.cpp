#include "pbw/dpalg.hpp"

#include <stdexcept>

namespace pbw {

DPPolynomial DPPolynomial::monomial(const MultiExponent& s, const mpz_class& c) {
  DPPolynomial p;
  if (c != 0) p.terms_.emplace(s, c);
  return p;
}

DPPolynomial DPPolynomial::power(std::size_t nroots, RootId b, int k, const mpz_class& c) {
  MultiExponent s(nroots);
  s[static_cast<std::size_t>(b)] = k;
  return monomial(s, c);
}

mpz_class DPPolynomial::coeff(const MultiExponent& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void DPPolynomial::add_term(const MultiExponent& s, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

DPPolynomial& DPPolynomial::operator+=(const DPPolynomial& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

DPPolynomial& DPPolynomial::operator-=(const DPPolynomial& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

DPPolynomial& DPPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

mpz_class dp_product_coeff(const MultiExponent& s, const MultiExponent& t) {
  if (s.size() != t.size()) throw std::invalid_argument("exponent size mismatch");
  mpz_class c = 1, b;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 0 || t[k] == 0) continue;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s[k] + t[k]), static_cast<unsigned long>(s[k]));
    c *= b;
  }
  return c;
}

DPPolynomial operator*(const DPPolynomial& a, const DPPolynomial& b) {
  DPPolynomial r;
  for (const auto& [s, x] : a.terms_)
    for (const auto& [t, y] : b.terms_) r.add_term(s + t, x * y * dp_product_coeff(s, t));
  return r;
}

DPPolynomial mul(const DPPolynomial& p, const DPPolynomial& q) { return p * q; }

DPPolynomial monomial(const MultiExponent& s, const mpz_class& c) { return DPPolynomial::monomial(s, c); }

DPPolynomial degree_filter(const DPPolynomial& p, int d) {
  DPPolynomial r;
  for (const auto& [s, c] : p.terms())
    if (s.degree() == d) r.add_term(s, c);
  return r;
}

std::string to_string(const RootSystem& rs, const DPPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + " *";
    bool any = false;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s[b] == 0) continue;
      const auto& r = rs.root(static_cast<RootId>(b));
      out += " f[" + std::to_string(r.i) + "," + (r.j.barred ? "~" : "") + std::to_string(r.j.k) + "]^(" +
             std::to_string(s[b]) + ")";
      any = true;
    }
    if (!any) out += " 1";
  }
  return out;
}

}  // namespace pbw
