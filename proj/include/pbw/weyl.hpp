#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>

#include "pbw/polytope.hpp"

namespace pbw {

/// lambda in eps-coordinates (omega_i = eps_1 + ... + eps_i in both families).
std::vector<int> weight_eps(const RootSystem& rs, const DominantWeight& m);

/// Weyl's product formula.
mpz_class weyl_dim(const RootSystemSpec& spec, const DominantWeight& m);

/// Weight multiplicities keyed by drop (lambda - mu in simple-root coordinates).
std::map<SimpleRootVector, std::int64_t> freudenthal(const RootSystemSpec& spec, const DominantWeight& m);

}  // namespace pbw
