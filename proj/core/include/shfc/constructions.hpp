#pragma once

#include <cstdint>
#include <span>

#include "shfc/resolution.hpp"

namespace shfc {

/// M(e): generator and relation degrees shifted by -e.
template <class K>
Presentation<K> twist(const Presentation<K>& m, int e);

/// Block-diagonal presentation of M + N. Throws RingMismatch.
template <class K>
Presentation<K> direct_sum(const Presentation<K>& m, const Presentation<K>& n);

/// coker(A x 1 | 1 x B) on generators (g, h), g-major. Throws RingMismatch.
template <class K>
Presentation<K> tensor(const Presentation<K>& m, const Presentation<K>& n);

/// coker(F x Sym^{r-1} G -> Sym^r G) for M = coker(F -> G). Generators of
/// Sym^r G are multisets of generator indices, ordered lexicographically.
template <class K>
Presentation<K> sym_power(const Presentation<K>& m, int r);

/// Relation entries f(x) -> f(x^q), all degrees multiplied by q.
template <class K>
Presentation<K> q_power_pullback(const Presentation<K>& m, int q);

/// O(a_1) + ... + O(a_r), i.e. the free module with generator degrees -a_j.
template <class K>
Presentation<K> line_bundle_sum(const Ring<K>& ring, std::span<const int> twists);

/// Koszul differential Lambda^m V x S -> Lambda^{m-1} V x S(1),
/// e_I -> sum_k (-1)^k x_{i_k} e_{I \ i_k}, index sets in lexicographic order.
template <class K>
GradedMap<K> koszul_map(const Ring<K>& ring, int m);

/// R_m = ker of koszul_map(m), sheafifying to Omega^m(m). Generators are
/// the syzygies of the Koszul map, relations their syzygies.
template <class K>
Presentation<K> koszul_R(const Ring<K>& ring, int m);

/// Omega^p = R_p(-p).
template <class K>
Presentation<K> omega(const Ring<K>& ring, int p);

/// Probabilistic fiber-rank test: the relation matrix evaluated at
/// `points` random nonzero points must have constant rank. Coordinates
/// are uniform in F_p, or integers in [-50, 50] over Q.
template <class K>
bool is_locally_free(const Presentation<K>& m, std::uint64_t seed, int points = 20);

}  // namespace shfc
