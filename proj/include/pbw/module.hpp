#pragma once

// V(lambda) as the cyclic span of v_lambda inside the tensor product of
// exterior powers of the vector representation, with its PBW filtration.

#include <cstdint>
#include <map>
#include <vector>

#include "pbw/chevalley.hpp"
#include "pbw/dpalg.hpp"
#include "pbw/linalg.hpp"
#include "pbw/polytope.hpp"

namespace pbw {

/// PBW_MODULE_CAP from the environment, else 2000.
std::size_t module_cap();

class ExplicitModule {
 public:
  /// Throws std::length_error when weyl_dim(lambda) exceeds cap.
  ExplicitModule(const RootSystem& rs, DominantWeight m, std::size_t cap = module_cap());

  const RootSystem& roots() const { return ch_.roots(); }
  const Chevalley& chevalley() const { return ch_; }
  const DominantWeight& weight() const { return m_; }
  const SparseVec& highest() const { return top_; }

  std::size_t dimension() const { return dim_; }
  int top_level() const { return levels_; }
  /// Per drop, the rank increments of V_s cap weight space, s = 0, 1, ...
  const GradedCharacter& poincare() const { return poincare_; }

  /// x acting on the tensor product as a derivation.
  SparseVec apply(const IntMatrix& x, const SparseVec& v) const;
  /// Normalized f'_b.
  SparseVec apply_f(RootId b, const SparseVec& v) const;
  SparseVec apply_f_power(RootId b, int k, SparseVec v) const;
  /// f_{b_1}^(s_1) ... f_{b_N}^(s_N) v, the rightmost factor acting first.
  SparseVec apply_monomial(const MultiExponent& s, const SparseVec& v) const;
  /// p v_lambda.
  SparseVec evaluate(const DPPolynomial& p) const;

  /// Is v (of the given drop) in V_level?  V_{-1} = 0.
  bool in_filtration(const SimpleRootVector& drop, const SparseVec& v, int level) const;
  /// Is v in V(lambda) at this drop?
  bool in_module(const SimpleRootVector& drop, const SparseVec& v) const;

 private:
  struct Factor {
    int degree;                                   // i of Lambda^i
    std::vector<std::vector<int>> subsets;        // sorted index sets
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<std::vector<std::pair<int, std::int64_t>>>> f_action;  // root, basis -> image
  };
  using Image = std::vector<std::pair<int, std::int64_t>>;
  Image wedge_image(const Factor& fac, const IntMatrix& x, int basis) const;
  template <class Lookup>
  SparseVec act(const SparseVec& v, Lookup&& image) const;

  Chevalley ch_;
  DominantWeight m_;
  std::vector<int> factor_of_slot_;  // slot -> factor kind
  std::vector<Factor> kinds_;
  std::vector<std::uint64_t> radix_;  // slot strides
  std::vector<std::uint64_t> size_;   // slot sizes
  SparseVec top_;
  std::size_t dim_ = 0;
  int levels_ = 0;
  std::map<SimpleRootVector, Echelon> spaces_;
  GradedCharacter poincare_;
};

}  // namespace pbw
