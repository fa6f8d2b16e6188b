#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/rootsys.hpp"

namespace pbw {

/// Dense exponent vector s = (s_b) indexed by RootId.
class MultiExponent {
 public:
  MultiExponent() = default;
  explicit MultiExponent(std::size_t n) : s_(n, 0) {}
  explicit MultiExponent(std::vector<int> s) : s_(std::move(s)) {}

  std::size_t size() const { return s_.size(); }
  int& operator[](std::size_t b) { return s_[b]; }
  int operator[](std::size_t b) const { return s_[b]; }
  const std::vector<int>& values() const { return s_; }
  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }

  int degree() const;
  bool is_zero() const;

  MultiExponent& operator+=(const MultiExponent& o);
  friend MultiExponent operator+(MultiExponent a, const MultiExponent& b) { return a += b; }

  friend auto operator<=>(const MultiExponent&, const MultiExponent&) = default;
  friend bool operator==(const MultiExponent&, const MultiExponent&) = default;

 private:
  std::vector<int> s_;
};

/// sum_b s_b * b in simple-root coordinates.
SimpleRootVector weight_drop(const RootSystem& rs, const MultiExponent& s);

/// "a[1,1]=1,a[1,2]=2"; the zero exponent prints as "".
std::string format_exponent(const RootSystem& rs, const MultiExponent& s);
/// Inverse of format_exponent; repeated roots add up.  Throws
/// std::invalid_argument naming the offending token.
MultiExponent parse_exponent(const RootSystem& rs, std::string_view text);

/// All exponents of total degree d, in increasing lexicographic order.
std::vector<MultiExponent> exponents_of_degree(std::size_t n, int d);

}  // namespace pbw
