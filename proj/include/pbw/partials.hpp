#pragma once

// The operators d_a^(k) on S_Z(n^-): the divided powers of +-ad e_a acting
// by derivations, with signs fixed by the Chevalley normalization.

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>

#include "pbw/chevalley.hpp"
#include "pbw/dpalg.hpp"

namespace pbw {

struct PartialOperator {
  RootId alpha = 0;
  int k = 1;
};

class PartialAction {
 public:
  explicit PartialAction(const RootSystem& rs);

  const RootSystem& roots() const { return ch_.roots(); }
  const Chevalley& chevalley() const { return ch_; }
  PairKind kind(RootId op, RootId var) const { return kinds_[static_cast<std::size_t>(op * nroots() + var)]; }

  /// d_op^(k) f_beta^(m); homogeneous of degree m.
  const DPPolynomial& apply_to_power(RootId op, int k, RootId beta, int m) const;
  /// Leibniz extension, linear in p.
  DPPolynomial apply(RootId op, int k, const DPPolynomial& p) const;
  DPPolynomial apply(const PartialOperator& d, const DPPolynomial& p) const { return apply(d.alpha, d.k, p); }
  /// d_{ops[last]}^(k) ... d_{ops[0]}^(k): applies the word left to right.
  DPPolynomial apply_word(const std::vector<PartialOperator>& word, DPPolynomial p) const;

 private:
  int nroots() const { return static_cast<int>(roots().size()); }
  DPPolynomial compute_power(RootId op, int k, RootId beta, int m) const;
  DPPolynomial apply_monomial(RootId op, int k, const MultiExponent& s) const;

  Chevalley ch_;
  std::vector<PairKind> kinds_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::tuple<int, int, int, int>, DPPolynomial> cache_;
};

DPPolynomial apply_to_power(const RootSystemSpec& spec, const PositiveRoot& op, int k, const PositiveRoot& beta,
                            int m);

}  // namespace pbw
