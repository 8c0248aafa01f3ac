#pragma once

#include <cstdint>

#include "shfc/field.hpp"

namespace shfc {

/// Graded polynomial ring k[x0..xn] over a prime field or the rationals.
/// A small value type: polynomials carry their ring by value.
template <class K>
class Ring {
 public:
  using Field = K;
  using Element = typename K::Element;

  Ring(K field, int num_vars);

  const K& field() const noexcept { return field_; }
  int num_vars() const noexcept { return num_vars_; }
  /// n for P^n.
  int dimension() const noexcept { return num_vars_ - 1; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }

  bool operator==(const Ring& other) const {
    return num_vars_ == other.num_vars_ && field_ == other.field_;
  }

 private:
  K field_;
  int num_vars_;
};

extern template class Ring<PrimeField>;
extern template class Ring<RationalField>;

}  // namespace shfc
