#pragma once

// Chevalley generators of sl_{n+1} / sp_{2n} in the vector representation,
// and the sign normalization used by the partial derivatives.

#include <cstdint>
#include <vector>

#include "pbw/rootsys.hpp"

namespace pbw {

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

  int dim() const { return n_; }
  std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix scaled(std::int64_t s) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

inline IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

/// Matrix realization with raw structure constants and the normalized signs.
///
/// Raw constants: [e_op, f_var] = N(op,var) f_{var-op}.  The normalization
/// picks tau_op, sigma_b in {+1,-1} with f'_b = sigma_b f_b and
/// d_op = tau_op ad e_op, so that as many rules as possible read with a
/// positive sign (greedily, in canonical (op, var) order).
class Chevalley {
 public:
  explicit Chevalley(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  int dim() const { return dim_; }

  const IntMatrix& e(RootId b) const { return e_[static_cast<std::size_t>(b)]; }
  /// Raw f_b (transpose of e_b).
  const IntMatrix& f_raw(RootId b) const { return f_[static_cast<std::size_t>(b)]; }
  /// Normalized f'_b = sigma_b f_b.
  IntMatrix f(RootId b) const { return f_raw(b).scaled(sigma(b)); }
  /// Coroot h_b = [e_b, f_b].
  IntMatrix h(RootId b) const { return commutator(e(b), f_raw(b)); }

  /// 0 unless var - op is a positive root.
  std::int64_t raw_constant(RootId op, RootId var) const;
  int sigma(RootId b) const { return sigma_[static_cast<std::size_t>(b)]; }
  int tau(RootId b) const { return tau_[static_cast<std::size_t>(b)]; }
  /// Sign of d_op f'_var in terms of f'_{var-op}; 0 if the pair is killed.
  int sign(RootId op, RootId var) const;
  /// |N(op,var)|.
  std::int64_t magnitude(RootId op, RootId var) const;

 private:
  RootSystem rs_;
  int dim_ = 0;
  std::vector<IntMatrix> e_, f_;
  std::vector<std::int64_t> n_;  // size*size raw constants
  std::vector<int> sigma_, tau_;
};

}  // namespace pbw
