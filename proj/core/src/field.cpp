#include "shfc/field.hpp"

#include <stdexcept>

#include "shfc/errors.hpp"

namespace shfc {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::from_decimal(std::string_view digits) const {
  std::uint64_t r = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("not a decimal literal");
    r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  }
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DomainError("division by zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::from_decimal(std::string_view digits) const {
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("not a decimal literal");
  }
  return Element(mpz_class(std::string(digits)));
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

}  // namespace shfc
