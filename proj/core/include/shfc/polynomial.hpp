#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shfc/monomial.hpp"
#include "shfc/ring.hpp"

namespace shfc {

/// Sparse multivariate polynomial. Terms are kept sorted in descending
/// grevlex order with no zero coefficients.
template <class K>
class Polynomial {
 public:
  using Element = typename K::Element;

  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit Polynomial(Ring<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring<K>& ring, const Element& c);
  static Polynomial monomial(const Ring<K>& ring, const Monomial& m, const Element& c);
  static Polynomial variable(const Ring<K>& ring, int k);
  /// Sums like terms, drops zeros and sorts.
  static Polynomial from_terms(const Ring<K>& ring, std::vector<Term> terms);

  const Ring<K>& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept;
  /// Degree of a nonzero homogeneous polynomial; nullopt for zero or
  /// inhomogeneous input.
  std::optional<int> degree() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  const Term& leading_term() const { return terms_.front(); }
  /// Constant coefficient (zero if absent).
  Element constant_coefficient() const;
  /// Coefficient of m (zero if absent).
  Element coefficient(const Monomial& m) const;

  Polynomial scaled(const Element& c) const;
  Polynomial times_term(const Monomial& m, const Element& c) const;
  /// f(x0^q, ..., xn^q).
  Polynomial substitute_powers(int q) const;
  Polynomial pow(unsigned e) const;
  Element evaluate(std::span<const Element> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  bool operator==(const Polynomial& other) const;

  /// Text form under the module-file grammar, e.g. "3*x0^2*x1 - x2^3".
  std::string to_string() const;

 private:
  Polynomial combine(const Polynomial& b, bool subtract) const;
  Polynomial multiply(const Polynomial& b) const;

  Ring<K> ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar: terms joined by '+'/'-', each an optional
/// integer coefficient and '*'-joined powers x<k>^<e>. Whitespace is ignored.
/// Throws ParseError with the 1-based column of the offending character.
template <class K>
Polynomial<K> parse_polynomial(const Ring<K>& ring, std::string_view text);

/// The polynomial arithmetic operation, as a named entry point.
enum class PolyOp { add, sub, mul };

template <class K>
Polynomial<K> poly_arith(PolyOp op, const Polynomial<K>& f, const Polynomial<K>& g);

extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;

}  // namespace shfc
