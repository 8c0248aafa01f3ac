#pragma once

#include <vector>

#include "shfc/graded_map.hpp"
#include "shfc/linalg.hpp"

namespace shfc {

/// Basis vector m * e_i of a free module strand.
struct StrandBasisElement {
  int generator;
  Monomial mono;
  bool operator==(const StrandBasisElement&) const = default;
};

/// Basis of F_d ordered by generator index, then lexicographically
/// descending monomial.
std::vector<StrandBasisElement> strand_basis(int num_vars, const GradedFreeModule& f, int d);

/// dim F_d = sum_j C(n + d - a_j, n) without enumerating anything.
long long strand_dimension(int num_vars, const GradedFreeModule& f, int d);

/// The degree-d piece of a graded map as a matrix over the field.
template <class K>
struct StrandMatrix {
  int degree = 0;
  std::vector<StrandBasisElement> row_basis;
  std::vector<StrandBasisElement> col_basis;
  DenseMatrix<K> entries;
};

template <class K>
StrandMatrix<K> strand_matrix(const GradedMap<K>& map, int d);

/// rank of strand_matrix(map, d), computed through sparse elimination
/// without materializing the dense matrix.
template <class K>
int strand_rank(const GradedMap<K>& map, int d);

}  // namespace shfc
