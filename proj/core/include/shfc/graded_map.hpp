#pragma once

#include <vector>

#include "shfc/polynomial.hpp"

namespace shfc {

/// The free module S(-a_1) + ... + S(-a_r); generator j lives in degree a_j.
struct GradedFreeModule {
  std::vector<int> degrees;

  int rank() const noexcept { return static_cast<int>(degrees.size()); }
  bool is_zero() const noexcept { return degrees.empty(); }
  /// F(e): every generator degree shifted by -e.
  GradedFreeModule twisted(int e) const;
  /// Hom(F, S): generator degrees negated.
  GradedFreeModule dual() const;
  bool operator==(const GradedFreeModule&) const = default;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// Degree-zero homomorphism between graded free modules, stored as a
/// target.rank x source.rank matrix of homogeneous polynomials.
template <class K>
class GradedMap {
 public:
  using Poly = Polynomial<K>;

  /// Zero map.
  GradedMap(Ring<K> ring, GradedFreeModule source, GradedFreeModule target);
  /// Entries given column by column; throws InhomogeneousError naming the
  /// first column whose entries do not have the degree the grading demands.
  GradedMap(Ring<K> ring, GradedFreeModule source, GradedFreeModule target,
            std::vector<std::vector<Poly>> columns);

  static GradedMap identity(const Ring<K>& ring, const GradedFreeModule& f);

  const Ring<K>& ring() const noexcept { return ring_; }
  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  int rows() const noexcept { return target_.rank(); }
  int cols() const noexcept { return source_.rank(); }

  const Poly& entry(int row, int col) const { return entries_[index(row, col)]; }
  /// Degree-checked setter.
  void set_entry(int row, int col, Poly value);
  std::vector<Poly> column(int col) const;

  bool is_zero() const;
  /// True if some entry is a nonzero constant.
  bool has_unit_entry() const;

  /// this o rhs; requires rhs.target() == source().
  GradedMap compose(const GradedMap& rhs) const;
  /// Hom(-, S) applied to this map: transpose, with source and target
  /// replaced by the duals of target and source.
  GradedMap dual() const;
  /// Same matrix with both modules shifted by -e.
  GradedMap twisted(int e) const;
  /// Entries mapped through f(x) -> f(x^q), degrees multiplied by q.
  GradedMap substitute_powers(int q) const;

  bool operator==(const GradedMap& other) const;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(col) * target_.rank() + row;
  }
  void check_entry(int row, int col, const Poly& p) const;

  Ring<K> ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Poly> entries_;  // column-major
};

/// Columns of a and b side by side; requires equal targets.
template <class K>
GradedMap<K> concat_columns(const GradedMap<K>& a, const GradedMap<K>& b);

/// Block-diagonal sum.
template <class K>
GradedMap<K> block_sum(const GradedMap<K>& a, const GradedMap<K>& b);

extern template class GradedMap<PrimeField>;
extern template class GradedMap<RationalField>;

}  // namespace shfc
