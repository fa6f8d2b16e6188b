#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// runner.  Each returns a tally; the first failure is kept for the report.

#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "gen.hpp"
#include "oracle.hpp"
#include "pbw/partials.hpp"
#include "pbw/rank2.hpp"
#include "pbw/straighten.hpp"

namespace props {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  bool ok() const { return failures == 0 && cases > 0; }
  std::string summary() const {
    std::ostringstream o;
    o << cases - failures << "/" << cases;
    if (failures) o << "; first failure: " << first;
    return o.str();
  }
};

inline std::string show(const pbw::MultiExponent& s) {
  std::string r = "(";
  for (std::size_t b = 0; b < s.size(); ++b) r += (b ? "," : "") + std::to_string(s[b]);
  return r + ")";
}

inline mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Tally dp_associativity(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto p = gen::polynomial(rng, n, 3, 2), q = gen::polynomial(rng, n, 3, 2), r = gen::polynomial(rng, n, 3, 2);
    t.check((p * q) * r == p * (q * r), [&] { return "associativity with " + std::to_string(n) + " roots"; });
  }
  return t;
}

inline Tally dp_commutativity(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    auto p = gen::polynomial(rng, n, 4, 3), q = gen::polynomial(rng, n, 4, 3);
    t.check(p * q == q * p, [&] { return "commutativity with " + std::to_string(n) + " roots"; });
  }
  return t;
}

/// f^(a) f^(b) = binom(a+b, a) f^(a+b), and f^k = k! f^(k).
inline Tally dp_divided_power(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const auto b = static_cast<pbw::RootId>(gen::uniform(rng, 0, static_cast<int>(n) - 1));
    const int a = gen::uniform(rng, 0, 12), d = gen::uniform(rng, 0, 12);
    using pbw::DPPolynomial;
    t.check(DPPolynomial::power(n, b, a) * DPPolynomial::power(n, b, d) == DPPolynomial::power(n, b, a + d, binom(a + d, a)),
            [&] { return "f^(" + std::to_string(a) + ") f^(" + std::to_string(d) + ")"; });

    const int k = gen::uniform(rng, 0, 8);
    DPPolynomial prod = DPPolynomial::unit(n);
    for (int i = 0; i < k; ++i) prod = prod * DPPolynomial::power(n, b, 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    t.check(prod == DPPolynomial::power(n, b, k, fact), [&] { return "f^" + std::to_string(k) + " != k! f^(k)"; });
  }
  return t;
}

/// Three exponents, often sharing a degree so the later tie-breaks are hit.
inline std::array<pbw::MultiExponent, 3> triple(gen::Rng& rng, std::size_t n) {
  const int d = gen::uniform(rng, 0, 6);
  auto pick = [&] { return gen::uniform(rng, 0, 3) == 0 ? gen::exponent(rng, n, 2) : gen::exponent_of_degree(rng, n, d); };
  return {pick(), pick(), pick()};
}

/// Antisymmetry, equality exactly on equal exponents, and transitivity.
inline Tally order_totality(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const pbw::RootSystem rs(gen::spec(rng, 4));
    auto [s, u, v] = triple(rng, rs.size());
    if (gen::uniform(rng, 0, 9) == 0) u = s;
    const auto su = pbw::compare(rs, s, u), us = pbw::compare(rs, u, s);
    const auto uv = pbw::compare(rs, u, v), sv = pbw::compare(rs, s, v);
    const bool anti = (su < 0) == (us > 0) && (su == 0) == (us == 0);
    const bool eq = (su == 0) == (s == u);
    const bool trans = !(su < 0 && uv < 0) || sv < 0;
    t.check(anti && eq && trans, [&] { return show(s) + " " + show(u) + " " + show(v); });
  }
  return t;
}

/// s < t implies s + m < t + m.
inline Tally order_compatibility(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const pbw::RootSystem rs(gen::spec(rng, 4));
    auto [s, u, m] = triple(rng, rs.size());
    if (m.is_zero()) m[0] = 1;
    t.check(pbw::compare(rs, s, u) == pbw::compare(rs, s + m, u + m),
            [&] { return show(s) + " " + show(u) + " + " + show(m); });
  }
  return t;
}

/// Every term of d_op^(k) f^(s) has drop(s) - k op and degree deg(s); the
/// action is linear; d^(a) d^(b) = binom(a+b, a) d^(a+b).
inline Tally partial_laws(gen::Rng& rng, int cases) {
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const pbw::RootSystem rs(gen::spec(rng, 4));
    const pbw::PartialAction act(rs);
    const auto n = rs.size();
    const auto op = static_cast<pbw::RootId>(gen::uniform(rng, 0, static_cast<int>(n) - 1));
    const int k = gen::uniform(rng, 1, 3);
    const auto s = gen::exponent(rng, n, 3);
    const auto r = act.apply(op, k, pbw::DPPolynomial::monomial(s));

    auto want = pbw::weight_drop(rs, s);
    for (int i = 0; i < rs.rank(); ++i)
      want[static_cast<std::size_t>(i)] -= k * rs.simple_coords(op)[static_cast<std::size_t>(i)];
    bool ok = true;
    for (const auto& [u, coef] : r.terms()) ok = ok && pbw::weight_drop(rs, u) == want && u.degree() == s.degree();
    t.check(ok, [&] { return "weight/degree of d_" + rs.token(op) + "^(" + std::to_string(k) + ") " + show(s); });

    const auto p = gen::polynomial(rng, n, 3, 2), q = gen::polynomial(rng, n, 3, 2);
    t.check(act.apply(op, k, p + q) == act.apply(op, k, p) + act.apply(op, k, q),
            [&] { return "linearity of d_" + rs.token(op); });

    const int a = gen::uniform(rng, 1, 2), b = gen::uniform(rng, 1, 2);
    t.check(act.apply(op, a, act.apply(op, b, p)) == act.apply(op, a + b, p) * binom(a + b, a),
            [&] { return "d^(a) d^(b) for d_" + rs.token(op); });
  }
  return t;
}

/// The result roots of the non-vanishing d_beta f_alpha against the listed
/// table, for C ranks 1..max_rank.
inline Tally result_root_table(int max_rank) {
  Tally t;
  for (int n = 1; n <= max_rank; ++n) {
    const pbw::RootSystem rs(pbw::make_spec(pbw::Family::C, n));
    const pbw::PartialAction act(rs);
    std::set<std::tuple<pbw::RootId, pbw::RootId, pbw::RootId>> got;
    const auto N = static_cast<pbw::RootId>(rs.size());
    for (pbw::RootId op = 0; op < N; ++op)
      for (pbw::RootId var = 0; var < N; ++var) {
        const auto r = act.apply_to_power(op, 1, var, 1);
        if (r.is_zero()) continue;
        // a single f_rho with rho = var - op
        if (r.size() != 1 || r.terms().begin()->first.degree() != 1) {
          t.check(false, [&] { return "d_" + rs.token(op) + " f_" + rs.token(var) + " not a single root"; });
          continue;
        }
        const auto& u = r.terms().begin()->first;
        pbw::RootId rho = 0;
        while (u[static_cast<std::size_t>(rho)] == 0) ++rho;
        got.insert({op, var, rho});
      }
    const auto want = brute::result_root_table(rs);
    t.check(got == want, [&] {
      return "C" + std::to_string(n) + ": " + std::to_string(got.size()) + " nonzero pairs, table lists " +
             std::to_string(want.size());
    });
  }
  return t;
}

/// Rank-2 expansion against its closed form.
inline Tally rank2_closed_form(int max_m) {
  Tally t;
  for (int m = 0; m <= max_m; ++m)
    for (int k = 0; k <= 2 * m; ++k) {
      std::map<std::tuple<int, int, int>, int> got;
      for (const auto& e : pbw::rank2_ad(k, m)) got[{e.a, e.b, e.c}] = static_cast<int>(e.r.get_si());
      t.check(got == brute::rank2(k, m), [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m); });
    }
  return t;
}

}  // namespace props
