#include "shfc/monomial.hpp"

#include <limits>

#include "shfc/errors.hpp"

namespace shfc {

namespace {

std::uint16_t checked_exponent(long long e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) {
    throw DomainError("monomial exponent out of range");
  }
  return static_cast<std::uint16_t>(e);
}

void enumerate(int num_vars, int var, int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var == num_vars - 1) {
    current.set(var, remaining);
    out.push_back(current);
    current.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set(var, e);
    enumerate(num_vars, var + 1, remaining - e, current, out);
  }
  current.set(var, 0);
}

}  // namespace

Monomial Monomial::variable(int k, int exponent) {
  Monomial m;
  m.set(k, exponent);
  return m;
}

void Monomial::set(int k, int exponent) {
  if (k < 0 || k >= kMaxVars) throw DomainError("variable index out of range");
  degree_ += exponent - exp_[k];
  exp_[k] = checked_exponent(exponent);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (int k = 0; k < kMaxVars; ++k) {
    if (exp_[k] > other.exp_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (int k = 0; k < kMaxVars; ++k) {
    if (exp_[k] != 0 && other.exp_[k] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& by) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    r.exp_[k] = static_cast<std::uint16_t>(exp_[k] - by.exp_[k]);
  }
  r.degree_ = degree_ - by.degree_;
  return r;
}

Monomial Monomial::scaled(int q) const {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    r.exp_[k] = checked_exponent(static_cast<long long>(exp_[k]) * q);
  }
  r.degree_ = degree_ * q;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) {
    r.exp_[k] = checked_exponent(static_cast<long long>(a.exp_[k]) + b.exp_[k]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    r.exp_[k] = a.exp_[k] > b.exp_[k] ? a.exp_[k] : b.exp_[k];
    d += r.exp_[k];
  }
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int k = kMaxVars - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || num_vars <= 0) return out;
  out.reserve(static_cast<std::size_t>(binomial(d + num_vars - 1, num_vars - 1)));
  Monomial current;
  enumerate(num_vars, 0, d, current, out);
  return out;
}

std::size_t lex_rank(int num_vars, const Monomial& m) {
  // Monomials preceding m either agree on x0..x(k-1) and have a larger
  // exponent of x_k; count those block by block.
  std::size_t rank = 0;
  int remaining = m.degree();
  for (int k = 0; k + 1 < num_vars; ++k) {
    int vars_after = num_vars - k - 1;
    for (int e = remaining; e > m[k]; --e) {
      rank += static_cast<std::size_t>(binomial(remaining - e + vars_after - 1, vars_after - 1));
    }
    remaining -= m[k];
  }
  return rank;
}

long long binomial(long long m, long long k) noexcept {
  if (k < 0 || m < 0 || m < k) return 0;
  if (k > m - k) k = m - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
  }
  return r;
}

}  // namespace shfc
