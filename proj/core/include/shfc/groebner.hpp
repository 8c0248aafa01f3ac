#pragma once

#include <span>
#include <vector>

#include "shfc/graded_map.hpp"

namespace shfc {

/// One term c * m * e_comp of a free-module element.
template <class K>
struct ModuleTerm {
  int comp;
  Monomial mono;
  typename K::Element coeff;
};

/// Free-module element as a term list sorted descending in the
/// position-over-term order: lower component index first, grevlex inside a
/// component.
template <class K>
using ModuleVector = std::vector<ModuleTerm<K>>;

/// -1, 0, 1 for the position-over-term order on (comp, mono).
int pot_compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b) noexcept;

template <class K>
struct GroebnerResult {
  /// Reduced Groebner basis, monic, sorted by descending leading term.
  std::vector<ModuleVector<K>> basis;
  std::vector<int> basis_degrees;
  /// Inputs that are minimal generators of the submodule, in input order.
  std::vector<int> minimal_input_indices;
};

/// Homogeneous Buchberger over a graded free module whose component j has
/// degree component_degrees[j]. Pairs are processed degree by degree with
/// the chain criterion, plus the coprime criterion for pairs of elements
/// supported in a single component. Inputs are interleaved with pairs by
/// degree, which identifies a minimal generating subset on the way.
template <class K>
GroebnerResult<K> compute_groebner(const K& field, std::span<const int> component_degrees,
                                   const std::vector<ModuleVector<K>>& inputs);

template <class K>
ModuleVector<K> column_vector(const GradedMap<K>& map, int col, int comp_offset = 0);

/// Reduced Groebner basis of the image of map, as the columns of a map into
/// map.target().
template <class K>
GradedMap<K> groebner_basis(const GradedMap<K>& map);

/// Minimal generating subset of the columns of map (image unchanged).
template <class K>
GradedMap<K> minimal_generators(const GradedMap<K>& map);

/// Minimal generators of ker(map): a map psi into map.source() with
/// image psi = ker map. Computed from a Groebner basis of the graph
/// {(map(e_j), e_j)} with the target components ranked first.
template <class K>
GradedMap<K> syzygies(const GradedMap<K>& map);

}  // namespace shfc
