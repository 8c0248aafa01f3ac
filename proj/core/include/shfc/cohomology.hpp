#pragma once

#include <map>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "shfc/resolution.hpp"

namespace shfc {

/// h[i][d - d_min] = h^i(P^n, M~(d)) for i in 0..n.
struct CohomologyTable {
  int n = 0;
  int d_min = 0;
  int d_max = 0;
  std::vector<std::vector<long long>> h;

  long long at(int i, int d) const { return h.at(i).at(d - d_min); }
  /// Checks sum_i (-1)^i h^i(d) against p over the whole window.
  bool euler_matches(const HilbertPolynomial& p) const;

  nlohmann::json to_json() const;
  static CohomologyTable from_json(const nlohmann::json& j);
  /// Rows i = n down to 0, columns d ascending.
  std::string to_grid() const;
  bool operator==(const CohomologyTable&) const = default;
};

/// Cohomology of the sheafification of one presentation. Holds the minimal
/// resolution and its dual, computed once, and caches strand ranks of the
/// dual maps. Queries are safe from several threads.
template <class K>
class SheafCohomology {
 public:
  explicit SheafCohomology(Presentation<K> m);

  const Presentation<K>& presentation() const noexcept { return module_; }
  const FreeResolution<K>& resolution() const noexcept { return res_; }
  const HilbertPolynomial& hilbert_polynomial() const noexcept { return hilbert_; }
  /// n for P^n.
  int dimension() const noexcept { return module_.ring().dimension(); }

  /// dim M_d.
  long long module_dim(int d) const;
  /// dim Ext^j_S(M, S)_e; zero outside 0..length.
  long long ext_dim(int j, int e) const;
  /// h^i(P^n, M~(d)); throws DomainError for i outside 0..n.
  long long h(int i, int d) const;
  CohomologyTable table(int d_min, int d_max) const;

 private:
  /// rank of (d_{j})^* : F_{j-1}^* -> F_j^* in degree e, for 1 <= j <= length.
  long long dual_rank(int j, int e) const;

  Presentation<K> module_;
  FreeResolution<K> res_;
  std::vector<GradedMap<K>> dual_maps_;  // dual_maps_[j-1] = maps[j-1].dual()
  HilbertPolynomial hilbert_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, long long> rank_cache_;
};

template <class K>
long long ext_strand_dim(const Presentation<K>& m, int j, int d);

template <class K>
long long sheaf_cohomology_dim(const Presentation<K>& m, int i, int d);

template <class K>
CohomologyTable cohomology_table(const Presentation<K>& m, int d_min, int d_max);

/// Closed form for h^i(P^n, (O(d_1) + ... + O(d_r))(d)).
long long line_bundle_oracle(int n, std::span<const int> twists, int i, int d);

extern template class SheafCohomology<PrimeField>;
extern template class SheafCohomology<RationalField>;

}  // namespace shfc
