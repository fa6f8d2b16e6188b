#include "pbw/partials.hpp"

#include <mutex>
#include <stdexcept>

#include "pbw/rank2.hpp"

namespace pbw {

PartialAction::PartialAction(const RootSystem& rs) : ch_(rs) {
  const int n = nroots();
  kinds_.resize(static_cast<std::size_t>(n * n));
  for (RootId op = 0; op < n; ++op)
    for (RootId var = 0; var < n; ++var) kinds_[static_cast<std::size_t>(op * n + var)] = rs.classify(op, var);
}

const DPPolynomial& PartialAction::apply_to_power(RootId op, int k, RootId beta, int m) const {
  if (k < 0 || m < 0) throw std::invalid_argument("negative exponent in partial derivative");
  const auto key = std::make_tuple(op, k, beta, m);
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto value = compute_power(op, k, beta, m);
  std::unique_lock lock(mu_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

DPPolynomial PartialAction::compute_power(RootId op, int k, RootId beta, int m) const {
  const std::size_t n = roots().size();
  if (k == 0) return DPPolynomial::power(n, beta, m);
  const PairKind kind = this->kind(op, beta);
  if (kind == PairKind::Kill) return {};
  const RootId rho = *roots().difference(beta, op);

  if (kind != PairKind::C2_ad5) {
    // d f_beta = N f_rho and d f_rho = 0
    if (k > m) return {};
    const long nc = static_cast<long>(ch_.sign(op, beta) * ch_.magnitude(op, beta));
    mpz_class c;
    mpz_pow_ui(c.get_mpz_t(), mpz_class(nc).get_mpz_t(), static_cast<unsigned long>(k));
    MultiExponent s(n);
    s[static_cast<std::size_t>(rho)] += k;
    s[static_cast<std::size_t>(beta)] += m - k;
    return DPPolynomial::monomial(s, c);
  }

  if (k > 2 * m) return {};
  const RootId alpha = *roots().difference(rho, op);
  const int s1 = ch_.sign(op, beta), s2 = ch_.sign(op, rho);
  const auto& table = rank2_expand(k, m, static_cast<long>(ch_.magnitude(op, beta)),
                                   static_cast<long>(ch_.magnitude(op, rho)));
  DPPolynomial out;
  for (const auto& t : table) {
    MultiExponent s(n);
    s[static_cast<std::size_t>(alpha)] += t.a;
    s[static_cast<std::size_t>(rho)] += t.b;
    s[static_cast<std::size_t>(beta)] += t.c;
    mpz_class c = t.r;
    if ((m - t.c) % 2 != 0 && s1 < 0) c = -c;
    if (t.a % 2 != 0 && s2 < 0) c = -c;
    out.add_term(s, c);
  }
  return out;
}

DPPolynomial PartialAction::apply_monomial(RootId op, int k, const MultiExponent& s) const {
  const std::size_t n = roots().size();
  // acc[j]: product of the factors seen so far with j derivatives spent
  std::vector<DPPolynomial> acc(static_cast<std::size_t>(k) + 1);
  acc[0] = DPPolynomial::unit(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (s[b] == 0) continue;
    std::vector<DPPolynomial> next(acc.size());
    for (int j = 0; j <= k; ++j) {
      if (acc[static_cast<std::size_t>(j)].is_zero()) continue;
      for (int i = 0; i + j <= k; ++i) {
        const auto& piece = apply_to_power(op, i, static_cast<RootId>(b), s[b]);
        if (piece.is_zero()) continue;
        next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(j)] * piece;
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(k)];
}

DPPolynomial PartialAction::apply(RootId op, int k, const DPPolynomial& p) const {
  if (k < 0) throw std::invalid_argument("negative divided power");
  if (k == 0) return p;
  DPPolynomial out;
  for (const auto& [s, c] : p.terms()) {
    auto r = apply_monomial(op, k, s);
    r *= c;
    out += r;
  }
  return out;
}

DPPolynomial PartialAction::apply_word(const std::vector<PartialOperator>& word, DPPolynomial p) const {
  for (const auto& d : word) {
    if (p.is_zero()) break;
    p = apply(d, p);
  }
  return p;
}

DPPolynomial apply_to_power(const RootSystemSpec& spec, const PositiveRoot& op, int k, const PositiveRoot& beta,
                            int m) {
  RootSystem rs(spec);
  PartialAction act(rs);
  return act.apply_to_power(rs.index(op), k, rs.index(beta), m);
}

}  // namespace pbw
