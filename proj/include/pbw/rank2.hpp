#pragma once

// ad e_g^(k) f_{a+2g}^(m) in the C_2 pattern g short, a long:
//   [e_g, f_{a+2g}] = n1 f_{a+g},  [e_g, f_{a+g}] = n2 f_a,  [e_g, f_a] = 0.
// The three f's commute, so the action is D^k/k! for the derivation D on
// Z[x, y, z] (x = f_a, y = f_{a+g}, z = f_{a+2g}).

#include <gmpxx.h>

#include <vector>

namespace pbw {

struct Rank2Term {
  int a = 0, b = 0, c = 0;  // exponents of f_a, f_{a+g}, f_{a+2g}
  mpz_class r;
};

/// Divided-power expansion of D^(k) z^(m), with D z = n1 y, D y = n2 x.
/// Entries satisfy a+b+c = m, b+2c = 2m-k, sorted by a.  Valid for
/// 0 <= k <= 2m; throws std::domain_error otherwise.
const std::vector<Rank2Term>& rank2_expand(int k, int m, long n1, long n2);

/// |n1|, |n2| read from the 4x4 symplectic realization.
std::pair<long, long> rank2_magnitudes();

/// rank2_expand with the C_2 magnitudes.  The (0,k,m-k) entry, present when
/// k <= m, has coefficient +1.
const std::vector<Rank2Term>& rank2_ad(int k, int m);

}  // namespace pbw
