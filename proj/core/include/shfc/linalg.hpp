#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "shfc/field.hpp"

namespace shfc {

template <class K>
struct DenseMatrix {
  using Element = typename K::Element;

  int rows = 0;
  int cols = 0;
  std::vector<Element> data;  // row-major

  DenseMatrix() = default;
  DenseMatrix(const K& field, int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, field.zero()) {}

  Element& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Element& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Exact rank by Gaussian elimination over the field.
template <class K>
int rank(const K& field, DenseMatrix<K> m);

template <class K>
DenseMatrix<K> multiply(const K& field, const DenseMatrix<K>& a, const DenseMatrix<K>& b);

/// Incremental row echelon form over sparse vectors. Each inserted vector is
/// reduced against the stored pivots; a nonzero remainder becomes a new
/// pivot. rank() is the dimension of the span of everything inserted.
template <class K>
class SparseEchelon {
 public:
  using Element = typename K::Element;
  using Entry = std::pair<int, Element>;

  SparseEchelon(K field, int dimension);

  /// Entries must be sorted by index with no zeros. Returns true if the
  /// vector was independent of those already inserted.
  bool insert(std::vector<Entry> v);
  int rank() const noexcept { return rank_; }
  int dimension() const noexcept { return dimension_; }

 private:
  K field_;
  int dimension_;
  int rank_ = 0;
  std::vector<std::vector<Entry>> pivots_;  // indexed by leading position
  std::vector<Element> work_;
};

extern template class SparseEchelon<PrimeField>;
extern template class SparseEchelon<RationalField>;

}  // namespace shfc
