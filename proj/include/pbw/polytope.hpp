#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pbw/dyck.hpp"
#include "pbw/exponent.hpp"
#include "pbw/rootsys.hpp"

namespace pbw {

/// lambda = sum m_i omega_i.
using DominantWeight = std::vector<int>;

/// weight drop -> coefficients of q^0, q^1, ...
using GradedCharacter = std::map<SimpleRootVector, std::vector<std::int64_t>>;

DominantWeight parse_weight(std::string_view text, int rank);

/// The lattice points S(lambda) of the FFL polytope.  The *_serial members
/// are straightforward single-threaded references for the OpenMP versions.
class Polytope {
 public:
  Polytope(const RootSystem& rs, DominantWeight m);

  const RootSystem& roots() const { return rs_; }
  const DominantWeight& weight() const { return m_; }
  const std::vector<DyckPath>& paths() const { return paths_; }
  const std::vector<PathInequality>& inequalities() const { return ineq_; }
  long long bound(std::size_t p) const { return bounds_[p]; }

  bool contains(const MultiExponent& s) const;
  /// Index of the first path whose inequality s violates, or -1.
  int first_violation(const MultiExponent& s) const;

  std::vector<MultiExponent> points() const;
  std::vector<MultiExponent> points_serial() const;
  std::size_t count() const;

  GradedCharacter character() const;
  GradedCharacter character_serial() const;

  /// Largest path sum attained on S(lambda), one entry per path.
  std::vector<long long> max_path_sums() const;

 private:
  template <class Visit>
  void dfs(std::vector<int>& cur, std::vector<long long>& partial, std::size_t pos, Visit&& visit) const;
  std::vector<std::vector<int>> prefixes(std::size_t depth) const;
  std::size_t split_depth() const;

  RootSystem rs_;
  DominantWeight m_;
  std::vector<DyckPath> paths_;
  std::vector<PathInequality> ineq_;
  std::vector<long long> bounds_;
  std::vector<std::vector<int>> through_;  // root -> paths containing it
};

bool contains(const RootSystemSpec& spec, const DominantWeight& m, const MultiExponent& s);
std::vector<MultiExponent> enumerate_points(const RootSystemSpec& spec, const DominantWeight& m);
GradedCharacter graded_character(const RootSystemSpec& spec, const DominantWeight& m);

struct MinkowskiReport {
  bool subset = false;
  /// Informational: whether every point of S(lambda+mu) splits as s + t.
  bool cardinality_checked = false;
  bool cardinality_equal = false;
  std::size_t sum_size = 0;     // |S(lambda) + S(mu)|, when checked
  std::size_t target_size = 0;  // |S(lambda+mu)|
};

/// The subset test is exact: S(l)+S(m) lies in S(l+m) iff for every path the
/// largest path sums over S(l) and S(m) add up to at most the bound at l+m.
/// The cardinality comparison is skipped when |S(l+m)| exceeds card_cap.
MinkowskiReport minkowski_subset(const RootSystemSpec& spec, const DominantWeight& l, const DominantWeight& m,
                                 std::size_t card_cap = 5'000'000);
MinkowskiReport minkowski_subset_serial(const RootSystemSpec& spec, const DominantWeight& l, const DominantWeight& m,
                                        std::size_t card_cap = 5'000'000);

/// Reference: the explicit sumset, for small cases.
std::vector<MultiExponent> sumset(const std::vector<MultiExponent>& a, const std::vector<MultiExponent>& b);

}  // namespace pbw
