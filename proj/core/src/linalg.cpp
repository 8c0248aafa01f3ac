#include "shfc/linalg.hpp"

#include <utility>

#include "shfc/errors.hpp"

namespace shfc {

template <class K>
int rank(const K& field, DenseMatrix<K> m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!field.is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
    }
    auto inv = field.inv(m.at(r, c));
    for (int i = r + 1; i < m.rows; ++i) {
      if (field.is_zero(m.at(i, c))) continue;
      auto factor = field.mul(m.at(i, c), inv);
      for (int k = c; k < m.cols; ++k) {
        if (!field.is_zero(m.at(r, k))) m.at(i, k) = field.sub(m.at(i, k), field.mul(factor, m.at(r, k)));
      }
    }
    ++r;
  }
  return r;
}

template <class K>
DenseMatrix<K> multiply(const K& field, const DenseMatrix<K>& a, const DenseMatrix<K>& b) {
  if (a.cols != b.rows) throw DomainError("matrix shapes do not match");
  DenseMatrix<K> c(field, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      if (field.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) = field.add(c.at(i, j), field.mul(a.at(i, k), b.at(k, j)));
    }
  }
  return c;
}

template <class K>
SparseEchelon<K>::SparseEchelon(K field, int dimension)
    : field_(std::move(field)), dimension_(dimension), pivots_(dimension), work_(dimension, field_.zero()) {}

template <class K>
bool SparseEchelon<K>::insert(std::vector<Entry> v) {
  if (v.empty()) return false;
  // Fast path: a leading position with no pivot yet needs no reduction.
  if (pivots_[v.front().first].empty()) {
    auto inv = field_.inv(v.front().second);
    for (auto& [idx, val] : v) val = field_.mul(val, inv);
    pivots_[v.front().first] = std::move(v);
    ++rank_;
    return true;
  }
  int lo = v.front().first;
  for (auto& [idx, val] : v) work_[idx] = std::move(val);
  for (int idx = lo; idx < dimension_; ++idx) {
    if (field_.is_zero(work_[idx])) continue;
    const auto& pivot = pivots_[idx];
    if (pivot.empty()) {
      // New pivot: normalize the remainder and store it.
      std::vector<Entry> row;
      auto inv = field_.inv(work_[idx]);
      for (int k = idx; k < dimension_; ++k) {
        if (field_.is_zero(work_[k])) continue;
        row.emplace_back(k, field_.mul(work_[k], inv));
        work_[k] = field_.zero();
      }
      pivots_[idx] = std::move(row);
      ++rank_;
      return true;
    }
    auto factor = work_[idx];
    for (const auto& [k, pv] : pivot) work_[k] = field_.sub(work_[k], field_.mul(factor, pv));
  }
  return false;
}

template int rank(const PrimeField&, DenseMatrix<PrimeField>);
template int rank(const RationalField&, DenseMatrix<RationalField>);
template DenseMatrix<PrimeField> multiply(const PrimeField&, const DenseMatrix<PrimeField>&,
                                          const DenseMatrix<PrimeField>&);
template DenseMatrix<RationalField> multiply(const RationalField&, const DenseMatrix<RationalField>&,
                                             const DenseMatrix<RationalField>&);
template class SparseEchelon<PrimeField>;
template class SparseEchelon<RationalField>;

}  // namespace shfc
