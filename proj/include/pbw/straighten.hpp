#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <optional>

#include "pbw/dpalg.hpp"
#include "pbw/partials.hpp"
#include "pbw/polytope.hpp"

namespace pbw {

/// (s_{n,.}, s_{n-1,.}, ..., s_{1,.}); type C only.
std::vector<int> d_stat(const RootSystem& rs, const MultiExponent& s);

/// Monomial order: total degree first.  Type C then prefers the smaller
/// d-statistic.  Ties are broken lexicographically, the variable with the
/// largest canonical index being the most significant.
std::strong_ordering compare(const RootSystem& rs, const MultiExponent& s, const MultiExponent& t);

struct MonomialLess {
  const RootSystem* rs;
  bool operator()(const MultiExponent& s, const MultiExponent& t) const { return compare(*rs, s, t) < 0; }
};

class Straightener {
 public:
  Straightener(const RootSystem& rs, DominantWeight m);

  const RootSystem& roots() const { return poly_.roots(); }
  const Polytope& polytope() const { return poly_; }
  const PartialAction& partials() const { return act_; }

  /// Operator word (applied first to last) that turns f_top^(sum s') into
  /// f^(s') plus smaller terms; s' must be supported on the path.
  std::vector<PartialOperator> word(std::size_t path, const MultiExponent& sp) const;
  /// The starting power f_top^(sum s').
  DPPolynomial seed(std::size_t path, const MultiExponent& sp) const;

  /// Annihilator of v_lambda with leading term exactly f^(s'); requires
  /// sum s' > bound of the path.  Throws std::logic_error if the word fails
  /// to produce a unimodular leading term.
  const DPPolynomial& element(std::size_t path, const MultiExponent& sp) const;

  /// f^(s) v_lambda as a combination of f^(t) v_lambda, t in S(lambda).
  DPPolynomial reduce(const MultiExponent& s) const;

 private:
  RootId top_of(std::size_t path) const;

  Polytope poly_;
  PartialAction act_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, MultiExponent>, DPPolynomial> cache_;
};

std::vector<int> d_stat(const RootSystemSpec& spec, const MultiExponent& s);
std::strong_ordering compare(const RootSystemSpec& spec, const MultiExponent& s, const MultiExponent& t);
std::optional<DyckPath> find_violation(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s);
DPPolynomial straightening_element(const RootSystemSpec& spec, const DominantWeight& m, const DyckPath& path,
                                   const MultiExponent& sp);
DPPolynomial reduce_to_basis(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s);

}  // namespace pbw
