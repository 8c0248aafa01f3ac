#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace shfc {

/// Upper bound on the number of ring variables (P^7 at most).
inline constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree. Unused trailing slots are zero,
/// so comparisons never need the variable count.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int k, int exponent = 1);

  int degree() const noexcept { return degree_; }
  int operator[](int k) const noexcept { return exp_[k]; }
  void set(int k, int exponent);

  bool is_one() const noexcept { return degree_ == 0; }
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  /// this / by; requires by.divides(*this).
  Monomial quotient(const Monomial& by) const;
  /// Every exponent multiplied by q (the substitution x_i -> x_i^q).
  Monomial scaled(int q) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const noexcept = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::int32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison: -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// All monomials of degree d in num_vars variables, lexicographically
/// descending (x0^d first). Empty for d < 0.
std::vector<Monomial> monomials_of_degree(int num_vars, int d);

/// Position of m in monomials_of_degree(num_vars, m.degree()).
std::size_t lex_rank(int num_vars, const Monomial& m);

/// C(m, k), zero when m < k or m < 0.
long long binomial(long long m, long long k) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace shfc
