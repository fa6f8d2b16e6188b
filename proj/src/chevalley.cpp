#include "pbw/chevalley.hpp"

#include <stdexcept>

namespace pbw {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r(*this);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] -= o.a_[t];
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r(*this);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] += o.a_[t];
  return r;
}

IntMatrix IntMatrix::scaled(std::int64_t s) const {
  IntMatrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

namespace {

IntMatrix raising(const RootSystem& rs, RootId b, int dim) {
  IntMatrix m(dim);
  auto e = rs.eps_coords(b);
  int pos = -1, neg = -1, second = -1;
  for (int t = 0; t < static_cast<int>(e.size()); ++t) {
    if (e[t] == 2) pos = second = t;
    if (e[t] == 1) (pos < 0 ? pos : second) = t;
    if (e[t] == -1) neg = t;
  }
  if (rs.family() == Family::A) {
    m(pos, neg) = 1;
    return m;
  }
  auto p = [dim](int i) { return dim - 1 - i; };
  if (neg >= 0) {
    m(pos, neg) = 1;
    m(p(neg), p(pos)) = -1;
  } else if (pos == second) {
    m(pos, p(pos)) = 1;
  } else {
    m(pos, p(second)) = 1;
    m(second, p(pos)) = 1;
  }
  return m;
}

// Gauss-Jordan over GF(2); rows are added only when consistent.
class Gf2System {
 public:
  explicit Gf2System(int vars) : vars_(vars) {}

  bool add(std::vector<char> row, char rhs) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row[static_cast<std::size_t>(pivots_[r])]) {
        for (int v = 0; v < vars_; ++v) row[v] ^= rows_[r][v];
        rhs ^= rhs_[r];
      }
    int piv = -1;
    for (int v = 0; v < vars_; ++v)
      if (row[v]) {
        piv = v;
        break;
      }
    if (piv < 0) return rhs == 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r][piv]) {
        for (int v = 0; v < vars_; ++v) rows_[r][v] ^= row[v];
        rhs_[r] ^= rhs;
      }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
    pivots_.push_back(piv);
    return true;
  }

  // Free variables are set to 0.
  std::vector<char> solution() const {
    std::vector<char> x(static_cast<std::size_t>(vars_), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) x[static_cast<std::size_t>(pivots_[r])] = rhs_[r];
    return x;
  }

 private:
  int vars_;
  std::vector<std::vector<char>> rows_;
  std::vector<char> rhs_;
  std::vector<int> pivots_;
};

}  // namespace

Chevalley::Chevalley(const RootSystem& rs) : rs_(rs) {
  const int n = rs.rank();
  dim_ = rs.family() == Family::A ? n + 1 : 2 * n;
  const int N = static_cast<int>(rs.size());
  for (RootId b = 0; b < N; ++b) {
    e_.push_back(raising(rs, b, dim_));
    f_.push_back(e_.back().transpose());
  }

  n_.assign(static_cast<std::size_t>(N * N), 0);
  for (RootId op = 0; op < N; ++op)
    for (RootId var = 0; var < N; ++var) {
      if (op == var) continue;
      auto rho = rs.difference(var, op);
      if (!rho) continue;
      IntMatrix c = commutator(e(op), f_raw(var));
      const IntMatrix& fr = f_raw(*rho);
      std::int64_t k = 0;
      for (int r = 0; r < dim_ && k == 0; ++r)
        for (int s = 0; s < dim_; ++s)
          if (fr(r, s) != 0) {
            k = c(r, s) / fr(r, s);
            break;
          }
      if (k == 0 || !(c == fr.scaled(k)))
        throw std::logic_error("[e_" + rs.token(op) + ", f_" + rs.token(var) + "] is not a multiple of f_" +
                               rs.token(*rho));
      n_[static_cast<std::size_t>(op * N + var)] = k;
    }

  // unknowns: tau_0..tau_{N-1}, sigma_0..sigma_{N-1}; bit 1 means -1
  Gf2System sys(2 * N);
  for (RootId op = 0; op < N; ++op)
    for (RootId var = 0; var < N; ++var) {
      const auto k = raw_constant(op, var);
      if (k == 0) continue;
      auto rho = rs.difference(var, op);
      std::vector<char> row(static_cast<std::size_t>(2 * N), 0);
      row[static_cast<std::size_t>(op)] ^= 1;
      row[static_cast<std::size_t>(N + var)] ^= 1;
      row[static_cast<std::size_t>(N + *rho)] ^= 1;
      sys.add(std::move(row), k < 0 ? 1 : 0);
    }
  auto x = sys.solution();
  for (RootId b = 0; b < N; ++b) {
    tau_.push_back(x[static_cast<std::size_t>(b)] ? -1 : 1);
    sigma_.push_back(x[static_cast<std::size_t>(N + b)] ? -1 : 1);
  }
}

std::int64_t Chevalley::raw_constant(RootId op, RootId var) const {
  return n_[static_cast<std::size_t>(op * static_cast<int>(rs_.size()) + var)];
}

std::int64_t Chevalley::magnitude(RootId op, RootId var) const {
  auto k = raw_constant(op, var);
  return k < 0 ? -k : k;
}

int Chevalley::sign(RootId op, RootId var) const {
  auto k = raw_constant(op, var);
  if (k == 0) return 0;
  auto rho = rs_.difference(var, op);
  int s = tau(op) * sigma(var) * sigma(*rho);
  return k < 0 ? -s : s;
}

}  // namespace pbw
