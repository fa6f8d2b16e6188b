#pragma once

// Random inputs for property tests.

#include <random>
#include <vector>

#include "pbw/dpalg.hpp"
#include "pbw/polytope.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Each coordinate uniform in [0, max_entry].
inline pbw::MultiExponent exponent(Rng& rng, std::size_t n, int max_entry) {
  pbw::MultiExponent s(n);
  for (std::size_t b = 0; b < n; ++b) s[b] = uniform(rng, 0, max_entry);
  return s;
}

/// Exactly degree d, spread over random roots.
inline pbw::MultiExponent exponent_of_degree(Rng& rng, std::size_t n, int d) {
  pbw::MultiExponent s(n);
  for (int k = 0; k < d; ++k) ++s[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
  return s;
}

inline pbw::DPPolynomial polynomial(Rng& rng, std::size_t n, int terms, int max_entry) {
  pbw::DPPolynomial p;
  for (int t = 0; t < terms; ++t) p.add_term(exponent(rng, n, max_entry), uniform(rng, -5, 5));
  return p;
}

inline pbw::DominantWeight weight(Rng& rng, int rank, int max_coeff) {
  pbw::DominantWeight m(static_cast<std::size_t>(rank));
  for (auto& x : m) x = uniform(rng, 0, max_coeff);
  return m;
}

inline pbw::RootSystemSpec spec(Rng& rng, int max_rank) {
  const auto f = uniform(rng, 0, 1) == 0 ? pbw::Family::A : pbw::Family::C;
  return pbw::make_spec(f, uniform(rng, 1, max_rank));
}

}  // namespace gen
