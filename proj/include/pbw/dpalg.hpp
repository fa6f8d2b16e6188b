#pragma once

// The divided-power algebra S_Z(n^-): Z-combinations of f^(s) with
// f_b^(m) f_b^(k) = binom(m+k, m) f_b^(m+k).

#include <gmpxx.h>

#include <map>
#include <string>

#include "pbw/exponent.hpp"

namespace pbw {

class DPPolynomial {
 public:
  using Terms = std::map<MultiExponent, mpz_class>;

  DPPolynomial() = default;

  static DPPolynomial monomial(const MultiExponent& s, const mpz_class& c = 1);
  static DPPolynomial unit(std::size_t nroots) { return monomial(MultiExponent(nroots)); }
  /// c f_b^(k) in a system with nroots roots.
  static DPPolynomial power(std::size_t nroots, RootId b, int k, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coeff(const MultiExponent& s) const;

  /// Adds c f^(s), dropping the term if it cancels.
  void add_term(const MultiExponent& s, const mpz_class& c);

  DPPolynomial& operator+=(const DPPolynomial& o);
  DPPolynomial& operator-=(const DPPolynomial& o);
  DPPolynomial& operator*=(const mpz_class& c);
  friend DPPolynomial operator+(DPPolynomial a, const DPPolynomial& b) { return a += b; }
  friend DPPolynomial operator-(DPPolynomial a, const DPPolynomial& b) { return a -= b; }
  friend DPPolynomial operator*(DPPolynomial a, const mpz_class& c) { return a *= c; }
  friend DPPolynomial operator*(const DPPolynomial& a, const DPPolynomial& b);

  friend bool operator==(const DPPolynomial&, const DPPolynomial&) = default;

 private:
  Terms terms_;
};

/// binom(s+t, s) over all coordinates.
mpz_class dp_product_coeff(const MultiExponent& s, const MultiExponent& t);

DPPolynomial mul(const DPPolynomial& p, const DPPolynomial& q);
DPPolynomial monomial(const MultiExponent& s, const mpz_class& c);
DPPolynomial degree_filter(const DPPolynomial& p, int d);

/// "c * f[1,2]^(3) f[2,~2]^(1) + ..."; zero prints as "0", the unit as "1 * 1".
std::string to_string(const RootSystem& rs, const DPPolynomial& p);

}  // namespace pbw
