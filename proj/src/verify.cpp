#include "pbw/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pbw/weyl.hpp"

namespace pbw {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string weight_str(const DominantWeight& m) {
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
  return s;
}

std::string case_name(Family f, const DominantWeight& m) {
  return std::string(1, family_letter(f)) + std::to_string(m.size()) + " (" + weight_str(m) + ")";
}

std::string drop_str(const SimpleRootVector& d) { return "drop (" + weight_str(d) + ")"; }

std::string poly_str(const std::vector<std::int64_t>& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(p[k]) + "q^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool wants(const VerifyOptions& o, Family f) { return !o.family || *o.family == f; }

// every weight with entries in [0, c]
std::vector<DominantWeight> weights_up_to(int rank, int c) {
  std::vector<DominantWeight> out;
  DominantWeight m(static_cast<std::size_t>(rank), 0);
  for (;;) {
    out.push_back(m);
    int k = 0;
    while (k < rank && m[static_cast<std::size_t>(k)] == c) m[static_cast<std::size_t>(k++)] = 0;
    if (k == rank) break;
    ++m[static_cast<std::size_t>(k)];
  }
  return out;
}

struct Case {
  Family family;
  DominantWeight m;
};

const std::vector<Case>& character_cases() {
  static const std::vector<Case> cases{
      {Family::A, {1, 1}}, {Family::A, {2, 1}}, {Family::A, {1, 0, 1}},
      {Family::C, {1, 1}}, {Family::C, {2, 1}}, {Family::C, {1, 2}},
  };
  return cases;
}

}  // namespace

std::string character_mismatch(const GradedCharacter& a, const GradedCharacter& b) {
  std::set<SimpleRootVector> keys;
  for (const auto& [w, p] : a) keys.insert(w);
  for (const auto& [w, p] : b) keys.insert(w);
  for (const auto& w : keys) {
    auto ia = a.find(w);
    auto ib = b.find(w);
    auto pa = ia == a.end() ? std::vector<std::int64_t>{} : trimmed(ia->second);
    auto pb = ib == b.end() ? std::vector<std::int64_t>{} : trimmed(ib->second);
    if (pa != pb) return drop_str(w) + ": " + poly_str(pa) + " vs " + poly_str(pb);
  }
  return {};
}

MultiExponent random_exponent(std::size_t nroots, int max_degree, std::mt19937_64& rng) {
  MultiExponent s(nroots);
  const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, nroots - 1);
  for (int k = 0; k < d; ++k) ++s[pick(rng)];
  return s;
}

std::vector<MultiExponent> exponents_up_to(std::size_t nroots, int max_degree) {
  std::vector<MultiExponent> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto v = exponents_of_degree(nroots, d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

BasisReport verify_basis(const ExplicitModule& mod, const Polytope& poly, int samples, std::uint64_t seed) {
  const auto& rs = mod.roots();
  BasisReport rep;
  rep.dim = mod.dimension();

  std::map<SimpleRootVector, std::vector<SparseVec>> basis;
  std::size_t rank_total = 0;
  for (const auto& s : poly.points_serial()) {
    basis[weight_drop(rs, s)].push_back(mod.apply_monomial(s, mod.highest()));
    ++rep.points;
  }
  for (const auto& [w, vs] : basis) rank_total += rank(vs);
  rep.independent = rank_total == rep.points;
  rep.count_matches = rep.points == rep.dim;

  std::mt19937_64 rng(seed);
  std::ostringstream why;
  for (int k = 0; k < samples; ++k) {
    auto s = random_exponent(rs.size(), 6, rng);
    auto v = mod.apply_monomial(s, mod.highest());
    ++rep.samples;
    if (v.empty()) {
      ++rep.integral;
      continue;
    }
    auto it = basis.find(weight_drop(rs, s));
    std::optional<std::vector<mpq_class>> x;
    if (it != basis.end() && rep.independent) x = solve(it->second, v);
    bool ok = x.has_value();
    if (ok)
      for (const auto& c : *x)
        if (c.get_den() != 1) ok = false;
    if (ok)
      ++rep.integral;
    else if (why.tellp() == 0)
      why << "f^(" << format_exponent(rs, s) << ") v " << (x ? "has non-integral coordinates" : "is outside the span");
  }
  rep.detail = why.str();
  return rep;
}

StraightenReport check_straightening(const ExplicitModule& mod, const Straightener& st,
                                     const std::vector<MultiExponent>& cases) {
  const auto& rs = st.roots();
  StraightenReport rep;
  auto fail = [&](const MultiExponent& s, const std::string& why) {
    ++rep.failures;
    if (rep.first_failure.empty()) rep.first_failure = "s = " + format_exponent(rs, s) + ": " + why;
  };
  for (const auto& s : cases) {
    ++rep.cases;
    DPPolynomial r;
    try {
      r = st.reduce(s);
    } catch (const std::exception& e) {
      fail(s, e.what());
      continue;
    }
    const auto drop = weight_drop(rs, s);
    bool ok = true;
    for (const auto& [t, c] : r.terms()) {
      if (!st.polytope().contains(t)) {
        fail(s, "output term " + format_exponent(rs, t) + " outside S(lambda)");
        ok = false;
        break;
      }
      if (t.degree() != s.degree() || weight_drop(rs, t) != drop) {
        fail(s, "output term " + format_exponent(rs, t) + " changes degree or weight");
        ok = false;
        break;
      }
      if (st.reduce(t) != DPPolynomial::monomial(t)) {
        fail(s, "output term " + format_exponent(rs, t) + " is not reduced");
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    SparseVec diff = mod.apply_monomial(s, mod.highest());
    axpy(diff, -1, mod.evaluate(r));
    if (!mod.in_filtration(drop, diff, s.degree() - 1)) fail(s, "module check failed: " + to_string(rs, r));
  }
  return rep;
}

const std::vector<Table1Entry>& table1() {
  static const std::vector<Table1Entry> t{
      {{3, 1}, {0, 0, 1, 1}},
      {{2, 2}, {0, 0, 2, 1}},
      {{3, 2}, {0, 0, 1, 2}},
      {{4, 2}, {0, 0, 1, 1, 1}},
  };
  return t;
}

Report verify_dims(const VerifyOptions& o) {
  Report rep{"dims", {}};
  for (Family f : {Family::A, Family::C}) {
    if (!wants(o, f)) continue;
    const int max_rank = o.max_rank > 0 ? o.max_rank : (f == Family::A ? 4 : 3);
    for (int n = 1; n <= max_rank; ++n) {
      RootSystem rs(make_spec(f, n));
      Check c{std::string(1, family_letter(f)) + std::to_string(n), true, {}};
      std::size_t count = 0;
      for (const auto& m : weights_up_to(n, o.max_coeff)) {
        ++count;
        const std::size_t pts = Polytope(rs, m).count();
        const mpz_class wd = weyl_dim(rs.spec(), m);
        if (mpz_class(static_cast<unsigned long>(pts)) != wd && c.pass) {
          c.pass = false;
          c.detail = "(" + weight_str(m) + "): |S| = " + std::to_string(pts) + ", Weyl dimension " + wd.get_str();
        }
      }
      if (c.pass) c.detail = std::to_string(count) + " weights";
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

Report verify_table1(const VerifyOptions&) {
  Report rep{"table1", {}};
  RootSystem rs(make_spec(Family::C, 2));
  const DominantWeight m{2, 1};
  const auto ch = Polytope(rs, m).character();
  const ExplicitModule mod(rs, m);
  for (const auto& e : table1()) {
    auto get = [&](const GradedCharacter& g) {
      auto it = g.find(e.drop);
      return it == g.end() ? std::vector<std::int64_t>{} : trimmed(it->second);
    };
    const auto a = get(ch), b = get(mod.poincare());
    Check c{drop_str(e.drop), a == e.poly && b == e.poly,
            "expected " + poly_str(e.poly) + "; polytope " + poly_str(a) + "; module " + poly_str(b)};
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

Report verify_characters(const VerifyOptions& o) {
  Report rep{"characters", {}};
  for (const auto& k : character_cases()) {
    if (!wants(o, k.family)) continue;
    RootSystem rs(make_spec(k.family, static_cast<int>(k.m.size())));
    const auto ch = Polytope(rs, k.m).character();
    const ExplicitModule mod(rs, k.m);
    auto why = character_mismatch(ch, mod.poincare());
    rep.checks.push_back({case_name(k.family, k.m), why.empty(),
                          why.empty() ? std::to_string(ch.size()) + " weights" : why});
  }
  return rep;
}

Report verify_freudenthal(const VerifyOptions& o) {
  Report rep{"freudenthal", {}};
  for (const auto& k : character_cases()) {
    if (!wants(o, k.family)) continue;
    const auto spec = make_spec(k.family, static_cast<int>(k.m.size()));
    const auto ch = graded_character(spec, k.m);
    const auto fr = freudenthal(spec, k.m);
    GradedCharacter flat_ch, flat_fr;
    for (const auto& [w, p] : ch) {
      std::int64_t s = 0;
      for (auto x : p) s += x;
      flat_ch[w] = {s};
    }
    for (const auto& [w, mult] : fr) flat_fr[w] = {mult};
    auto why = character_mismatch(flat_ch, flat_fr);
    rep.checks.push_back({case_name(k.family, k.m), why.empty(),
                          why.empty() ? std::to_string(fr.size()) + " weights" : why});
  }
  return rep;
}

Report verify_basis_suite(const VerifyOptions& o) {
  Report rep{"basis", {}};
  const int samples = o.samples > 0 ? o.samples : 100;
  const std::vector<Case> cases{
      {Family::A, {1, 1}}, {Family::A, {2, 1}}, {Family::C, {1, 1}}, {Family::C, {2, 1}}};
  std::uint64_t seed = o.seed;
  for (const auto& k : cases) {
    if (!wants(o, k.family)) continue;
    RootSystem rs(make_spec(k.family, static_cast<int>(k.m.size())));
    const ExplicitModule mod(rs, k.m);
    const Polytope poly(rs, k.m);
    auto r = verify_basis(mod, poly, samples, seed++);
    std::string d = std::to_string(r.points) + " points, dim " + std::to_string(r.dim) + ", " +
                    (r.independent ? "independent" : "dependent") + ", " + std::to_string(r.integral) + "/" +
                    std::to_string(r.samples) + " integral";
    if (!r.detail.empty()) d += "; " + r.detail;
    rep.checks.push_back({case_name(k.family, k.m), r.pass(), d});
  }
  return rep;
}

Report verify_straighten_suite(const VerifyOptions& o) {
  Report rep{"straighten", {}};
  struct Job {
    Family family;
    DominantWeight m;
    int max_degree;
    int random;  // 0: exhaustive
  };
  const int random = o.samples > 0 ? o.samples : 200;
  const std::vector<Job> jobs{
      {Family::A, {1, 1}, 4, 0}, {Family::A, {2, 1}, 4, 0}, {Family::C, {1, 1}, 4, 0},
      {Family::C, {2, 1}, 4, 0}, {Family::C, {2, 1}, 5, random},
  };
  std::mt19937_64 rng(o.seed);
  for (const auto& j : jobs) {
    if (!wants(o, j.family)) continue;
    RootSystem rs(make_spec(j.family, static_cast<int>(j.m.size())));
    const ExplicitModule mod(rs, j.m);
    const Straightener st(rs, j.m);
    std::vector<MultiExponent> cases;
    if (j.random == 0) {
      cases = exponents_up_to(rs.size(), j.max_degree);
    } else {
      for (int k = 0; k < j.random; ++k) cases.push_back(random_exponent(rs.size(), j.max_degree, rng));
    }
    auto r = check_straightening(mod, st, cases);
    std::string name = case_name(j.family, j.m) + (j.random ? " random deg<=" : " all deg<=") + std::to_string(j.max_degree);
    rep.checks.push_back({name, r.pass(),
                          std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + " sound" +
                              (r.first_failure.empty() ? "" : "; " + r.first_failure)});
  }
  return rep;
}

Report verify_minkowski(const VerifyOptions& o) {
  Report rep{"minkowski", {}};
  const int max_rank = o.max_rank > 0 ? o.max_rank : 3;
  const int pairs = o.samples > 0 ? o.samples : 20;
  std::mt19937_64 rng(o.seed);
  for (Family f : {Family::A, Family::C}) {
    if (!wants(o, f)) continue;
    Check c{std::string(1, family_letter(f)) + " pairs", true, {}};
    int equal = 0, checked = 0, brute = 0;
    for (int k = 0; k < pairs; ++k) {
      const int n = std::uniform_int_distribution<int>(1, max_rank)(rng);
      std::uniform_int_distribution<int> coeff(0, o.max_coeff);
      DominantWeight l(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
      for (auto& x : l) x = coeff(rng);
      for (auto& x : m) x = coeff(rng);
      const auto spec = make_spec(f, n);
      auto r = minkowski_subset(spec, l, m);
      // cross-check against the explicit sumset when it is small
      RootSystem rs(spec);
      Polytope pl(rs, l), pm(rs, m);
      if (pl.count() * pm.count() <= 200000) {
        ++brute;
        DominantWeight lm(l);
        for (std::size_t t = 0; t < lm.size(); ++t) lm[t] += m[t];
        Polytope ps(rs, lm);
        auto sum = sumset(pl.points(), pm.points());
        const bool sub = std::all_of(sum.begin(), sum.end(), [&](const MultiExponent& u) { return ps.contains(u); });
        if (sub != r.subset || (r.cardinality_checked && sub && sum.size() != r.sum_size)) {
          c.pass = false;
          c.detail = "sumset disagrees for (" + weight_str(l) + ")+(" + weight_str(m) + ")";
        }
      }
      if (!r.subset && c.pass) {
        c.pass = false;
        c.detail = "inclusion fails for (" + weight_str(l) + ")+(" + weight_str(m) + ")";
      }
      if (r.cardinality_checked) {
        ++checked;
        if (r.cardinality_equal) ++equal;
      }
    }
    if (c.pass)
      c.detail = std::to_string(pairs) + " pairs included (" + std::to_string(brute) + " by explicit sumset); " +
                 "cardinality equal in " + std::to_string(equal) + "/" + std::to_string(checked) + " (informational)";
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dims", "table1", "characters", "freudenthal",
                                              "basis", "straighten", "minkowski"};
  return names;
}

Report run_suite(std::string_view name, const VerifyOptions& o) {
  if (name == "dims") return verify_dims(o);
  if (name == "table1") return verify_table1(o);
  if (name == "characters") return verify_characters(o);
  if (name == "freudenthal") return verify_freudenthal(o);
  if (name == "basis") return verify_basis_suite(o);
  if (name == "straighten") return verify_straighten_suite(o);
  if (name == "minkowski") return verify_minkowski(o);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace pbw
