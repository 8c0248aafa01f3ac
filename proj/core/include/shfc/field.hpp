#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shfc {

bool is_prime(std::uint64_t n) noexcept;

/// Integers modulo a prime p < 2^31 in machine words.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Reduces a nonnegative decimal literal of any length.
  Element from_decimal(std::string_view digits) const;

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Uniform element from a 64-bit random draw.
  Element from_random(std::uint64_t bits) const noexcept { return static_cast<Element>(bits % p_); }

  /// Balanced representative, so p-1 prints as -1.
  std::string to_string(Element a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals with GMP arbitrary precision.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(mpz_class(std::to_string(v))); }
  Element from_decimal(std::string_view digits) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// Small integer in [-50, 50]; used for random evaluation points.
  Element from_random(std::uint64_t bits) const {
    return from_int(static_cast<std::int64_t>(bits % 101) - 50);
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace shfc
