#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "shfc/graded_map.hpp"

namespace shfc {

/// Integer or the sentinel minus infinity (zero module / sheaf).
class Regularity {
 public:
  static Regularity minus_infinity() { return Regularity(); }
  static Regularity finite(int v) { return Regularity(v); }

  bool is_minus_infinity() const noexcept { return !value_; }
  bool is_finite() const noexcept { return value_.has_value(); }
  int value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-infinity"; }

  bool operator==(const Regularity&) const = default;
  /// minus infinity is below every integer.
  bool operator<=(const Regularity& other) const {
    if (!value_) return true;
    if (!other.value_) return false;
    return *value_ <= *other.value_;
  }

 private:
  Regularity() = default;
  explicit Regularity(int v) : value_(v) {}
  std::optional<int> value_;
};

/// A finitely generated graded module coker(relations: F1 -> G).
template <class K>
class Presentation {
 public:
  explicit Presentation(GradedMap<K> relations) : relations_(std::move(relations)) {}
  /// The free module G itself.
  static Presentation free(const Ring<K>& ring, GradedFreeModule generators) {
    return Presentation(GradedMap<K>(ring, GradedFreeModule{}, std::move(generators)));
  }

  const Ring<K>& ring() const noexcept { return relations_.ring(); }
  const GradedFreeModule& generators() const noexcept { return relations_.target(); }
  const GradedMap<K>& relations() const noexcept { return relations_; }

 private:
  GradedMap<K> relations_;
};

struct BettiTable {
  /// (homological index i, degree j) -> beta_{i,j} > 0.
  std::map<std::pair<int, int>, int> entries;

  int at(int i, int j) const;
  bool empty() const noexcept { return entries.empty(); }
  /// Rows indexed by j - i, columns by i, totals on top.
  std::string to_string() const;
};

/// F_0 <- F_1 <- ... <- F_L. maps[i] is the differential F_{i+1} -> F_i.
/// The zero module has F_0 = 0 and no maps.
template <class K>
struct FreeResolution {
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMap<K>> maps;
  bool minimal = false;

  int length() const noexcept { return static_cast<int>(maps.size()); }
  bool is_zero_module() const noexcept { return modules.empty() || modules.front().is_zero(); }
  BettiTable betti() const;
};

/// Removes unit entries to a fixpoint: each nonzero constant entry splits
/// off a trivial complex 0 -> S(-a) -> S(-a) -> 0. Scans the lowest
/// homological index first, columns before rows.
template <class K>
FreeResolution<K> minimize(FreeResolution<K> res);

/// Minimal graded free resolution. Throws Error if the length exceeds the
/// number of variables.
template <class K>
FreeResolution<K> minimal_free_resolution(const Presentation<K>& m);

/// max (j - i) over the Betti table; minus infinity for the zero module.
Regularity module_regularity(const BettiTable& betti);

/// P(d) = sum_a c_a * C(n + d - a, n), the binomials read as polynomials
/// in d.
class HilbertPolynomial {
 public:
  HilbertPolynomial(int n, std::map<int, long long> shifts);

  long long operator()(long long d) const;
  /// Coefficients in ascending powers of d.
  std::vector<mpq_class> coefficients() const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  std::string to_string() const;

 private:
  int n_;
  std::map<int, long long> shifts_;
};

struct HilbertData {
  int window_lo = 0;
  std::vector<long long> function;  // dim M_d for d = window_lo, ...
  HilbertPolynomial polynomial;
};

template <class K>
HilbertPolynomial hilbert_polynomial(const FreeResolution<K>& res, int num_vars);

/// dim M_d from the alternating Betti sum; exact in every degree.
template <class K>
long long hilbert_function(const FreeResolution<K>& res, int num_vars, int d);

template <class K>
HilbertData hilbert_data(const Presentation<K>& m, int lo, int hi);

/// Strand-wise check that res resolves m for d in [lo, hi]: consecutive
/// composites vanish, rank(d_i) + rank(d_{i+1}) = dim F_i in each degree,
/// and dim F_0 - rank d_1 equals dim G - rank(relations). Returns the
/// failing degrees.
template <class K>
std::vector<int> exactness_failures(const Presentation<K>& m, const FreeResolution<K>& res, int lo, int hi);

/// Default verification window [min generator degree - 2, reg + n + 2].
template <class K>
std::pair<int, int> verification_window(const Presentation<K>& m, const FreeResolution<K>& res);

}  // namespace shfc
