#pragma once

// Exact linear algebra on sparse integer vectors.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace pbw {

using SparseVec = std::map<std::uint64_t, mpz_class>;

void axpy(SparseVec& y, const mpz_class& a, const SparseVec& x);
/// Divides by the gcd of the entries and makes the leading entry positive.
void make_primitive(SparseVec& v);
SparseVec scaled(const SparseVec& v, const mpz_class& a);

/// Fraction-free row echelon form with distinct pivots (the smallest index of
/// each row).  Rows carry a level tag so that prefixes can be queried.
class Echelon {
 public:
  /// Reduces v against the rows with level <= max_level; returns the remainder.
  SparseVec reduce(SparseVec v, int max_level = 1 << 30) const;
  /// Adds v if independent of the current rows; returns whether it was added.
  bool insert(SparseVec v, int level);
  bool contains(const SparseVec& v, int max_level = 1 << 30) const { return reduce(v, max_level).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t rank_up_to(int level) const;

 private:
  struct Row {
    SparseVec v;
    int level;
  };
  std::map<std::uint64_t, Row> rows_;  // pivot -> row
};

std::size_t rank(const std::vector<SparseVec>& vs);

/// Exact solution x of sum_k x_k cols[k] = rhs over the rationals, when one
/// exists; cols must be linearly independent.
std::optional<std::vector<mpq_class>> solve(const std::vector<SparseVec>& cols, const SparseVec& rhs);

}  // namespace pbw
