#include "shfc/graded_map.hpp"

#include "shfc/errors.hpp"

namespace shfc {

GradedFreeModule GradedFreeModule::twisted(int e) const {
  GradedFreeModule r = *this;
  for (int& d : r.degrees) d -= e;
  return r;
}

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule r = *this;
  for (int& d : r.degrees) d = -d;
  return r;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule r = a;
  r.degrees.insert(r.degrees.end(), b.degrees.begin(), b.degrees.end());
  return r;
}

template <class K>
GradedMap<K>::GradedMap(Ring<K> ring, GradedFreeModule source, GradedFreeModule target)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)) {
  entries_.assign(static_cast<std::size_t>(source_.rank()) * target_.rank(), Poly(ring_));
}

template <class K>
GradedMap<K>::GradedMap(Ring<K> ring, GradedFreeModule source, GradedFreeModule target,
                        std::vector<std::vector<Poly>> columns)
    : GradedMap(std::move(ring), std::move(source), std::move(target)) {
  if (static_cast<int>(columns.size()) != source_.rank()) throw DomainError("column count does not match source rank");
  for (int j = 0; j < source_.rank(); ++j) {
    if (static_cast<int>(columns[j].size()) != target_.rank()) {
      throw DomainError("column " + std::to_string(j) + " does not match target rank");
    }
    for (int i = 0; i < target_.rank(); ++i) {
      check_entry(i, j, columns[j][i]);
      entries_[index(i, j)] = std::move(columns[j][i]);
    }
  }
}

template <class K>
GradedMap<K> GradedMap<K>::identity(const Ring<K>& ring, const GradedFreeModule& f) {
  GradedMap m(ring, f, f);
  for (int i = 0; i < f.rank(); ++i) m.entries_[m.index(i, i)] = Poly::constant(ring, ring.field().one());
  return m;
}

template <class K>
void GradedMap<K>::check_entry(int row, int col, const Poly& p) const {
  if (p.is_zero()) return;
  if (!(p.ring() == ring_)) throw RingMismatch();
  auto d = p.degree();
  if (!d || *d != source_.degrees[col] - target_.degrees[row]) throw InhomogeneousError(col);
}

template <class K>
void GradedMap<K>::set_entry(int row, int col, Poly value) {
  if (row < 0 || row >= rows() || col < 0 || col >= cols()) throw DomainError("matrix index out of range");
  check_entry(row, col, value);
  entries_[index(row, col)] = std::move(value);
}

template <class K>
std::vector<typename GradedMap<K>::Poly> GradedMap<K>::column(int col) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(index(0, col)),
          entries_.begin() + static_cast<std::ptrdiff_t>(index(0, col) + rows())};
}

template <class K>
bool GradedMap<K>::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

template <class K>
bool GradedMap<K>::has_unit_entry() const {
  for (const auto& p : entries_) {
    if (p.is_unit()) return true;
  }
  return false;
}

template <class K>
GradedMap<K> GradedMap<K>::compose(const GradedMap& rhs) const {
  if (!(rhs.ring_ == ring_)) throw RingMismatch();
  if (!(rhs.target_ == source_)) throw DomainError("maps are not composable");
  GradedMap r(ring_, rhs.source_, target_);
  for (int j = 0; j < r.cols(); ++j) {
    for (int k = 0; k < cols(); ++k) {
      const Poly& b = rhs.entry(k, j);
      if (b.is_zero()) continue;
      for (int i = 0; i < rows(); ++i) {
        const Poly& a = entry(i, k);
        if (!a.is_zero()) r.entries_[r.index(i, j)] += a * b;
      }
    }
  }
  return r;
}

template <class K>
GradedMap<K> GradedMap<K>::dual() const {
  GradedMap r(ring_, target_.dual(), source_.dual());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) r.entries_[r.index(j, i)] = entry(i, j);
  }
  return r;
}

template <class K>
GradedMap<K> GradedMap<K>::twisted(int e) const {
  GradedMap r = *this;
  r.source_ = source_.twisted(e);
  r.target_ = target_.twisted(e);
  return r;
}

template <class K>
GradedMap<K> GradedMap<K>::substitute_powers(int q) const {
  GradedFreeModule src = source_, tgt = target_;
  for (int& d : src.degrees) d *= q;
  for (int& d : tgt.degrees) d *= q;
  GradedMap r(ring_, src, tgt);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].substitute_powers(q);
  return r;
}

template <class K>
bool GradedMap<K>::operator==(const GradedMap& other) const {
  return ring_ == other.ring_ && source_ == other.source_ && target_ == other.target_ &&
         entries_ == other.entries_;
}

template <class K>
GradedMap<K> concat_columns(const GradedMap<K>& a, const GradedMap<K>& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  if (!(a.target() == b.target())) throw DomainError("concat_columns needs equal targets");
  GradedMap<K> r(a.ring(), direct_sum(a.source(), b.source()), a.target());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.set_entry(i, j, a.entry(i, j));
  }
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < b.rows(); ++i) r.set_entry(i, a.cols() + j, b.entry(i, j));
  }
  return r;
}

template <class K>
GradedMap<K> block_sum(const GradedMap<K>& a, const GradedMap<K>& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  GradedMap<K> r(a.ring(), direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()));
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.set_entry(i, j, a.entry(i, j));
  }
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < b.rows(); ++i) r.set_entry(a.rows() + i, a.cols() + j, b.entry(i, j));
  }
  return r;
}

template class GradedMap<PrimeField>;
template class GradedMap<RationalField>;
template GradedMap<PrimeField> concat_columns(const GradedMap<PrimeField>&, const GradedMap<PrimeField>&);
template GradedMap<RationalField> concat_columns(const GradedMap<RationalField>&, const GradedMap<RationalField>&);
template GradedMap<PrimeField> block_sum(const GradedMap<PrimeField>&, const GradedMap<PrimeField>&);
template GradedMap<RationalField> block_sum(const GradedMap<RationalField>&, const GradedMap<RationalField>&);

}  // namespace shfc
