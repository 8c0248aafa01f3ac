#include "shfc/strand.hpp"

#include <algorithm>

namespace shfc {

namespace {

// Offsets of each generator block inside the strand F_d.
std::vector<long long> block_offsets(int num_vars, const GradedFreeModule& f, int d) {
  std::vector<long long> offsets(f.rank() + 1, 0);
  for (int j = 0; j < f.rank(); ++j) {
    offsets[j + 1] = offsets[j] + binomial(num_vars - 1 + d - f.degrees[j], num_vars - 1);
  }
  return offsets;
}

}  // namespace

std::vector<StrandBasisElement> strand_basis(int num_vars, const GradedFreeModule& f, int d) {
  std::vector<StrandBasisElement> basis;
  for (int j = 0; j < f.rank(); ++j) {
    for (auto& m : monomials_of_degree(num_vars, d - f.degrees[j])) basis.push_back({j, m});
  }
  return basis;
}

long long strand_dimension(int num_vars, const GradedFreeModule& f, int d) {
  long long total = 0;
  for (int a : f.degrees) total += binomial(num_vars - 1 + d - a, num_vars - 1);
  return total;
}

template <class K>
StrandMatrix<K> strand_matrix(const GradedMap<K>& map, int d) {
  const Ring<K>& ring = map.ring();
  const K& field = ring.field();
  int nv = ring.num_vars();
  StrandMatrix<K> s;
  s.degree = d;
  s.row_basis = strand_basis(nv, map.target(), d);
  s.col_basis = strand_basis(nv, map.source(), d);
  s.entries = DenseMatrix<K>(field, static_cast<int>(s.row_basis.size()), static_cast<int>(s.col_basis.size()));
  auto offsets = block_offsets(nv, map.target(), d);
  for (std::size_t c = 0; c < s.col_basis.size(); ++c) {
    const auto& [j, mono] = s.col_basis[c];
    for (int i = 0; i < map.rows(); ++i) {
      for (const auto& t : map.entry(i, j).terms()) {
        auto row = offsets[i] + static_cast<long long>(lex_rank(nv, t.mono * mono));
        s.entries.at(static_cast<int>(row), static_cast<int>(c)) = t.coeff;
      }
    }
  }
  return s;
}

template <class K>
int strand_rank(const GradedMap<K>& map, int d) {
  const Ring<K>& ring = map.ring();
  int nv = ring.num_vars();
  auto offsets = block_offsets(nv, map.target(), d);
  long long rows = offsets.back();
  long long cols = strand_dimension(nv, map.source(), d);
  if (rows == 0 || cols == 0) return 0;
  SparseEchelon<K> echelon(ring.field(), static_cast<int>(rows));
  using Entry = typename SparseEchelon<K>::Entry;
  for (int j = 0; j < map.cols(); ++j) {
    auto column = map.column(j);
    for (const auto& mono : monomials_of_degree(nv, d - map.source().degrees[j])) {
      std::vector<Entry> v;
      for (int i = 0; i < map.rows(); ++i) {
        for (const auto& t : column[i].terms()) {
          v.emplace_back(static_cast<int>(offsets[i] + static_cast<long long>(lex_rank(nv, t.mono * mono))), t.coeff);
        }
      }
      std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
      echelon.insert(std::move(v));
      if (echelon.rank() == rows) return echelon.rank();
    }
  }
  return echelon.rank();
}

template StrandMatrix<PrimeField> strand_matrix(const GradedMap<PrimeField>&, int);
template StrandMatrix<RationalField> strand_matrix(const GradedMap<RationalField>&, int);
template int strand_rank(const GradedMap<PrimeField>&, int);
template int strand_rank(const GradedMap<RationalField>&, int);

}  // namespace shfc
