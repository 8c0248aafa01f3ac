#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "shfc/random.hpp"
#include "shfc/resolution.hpp"

namespace shfc {

/// How a corpus sheaf was built; enough to rebuild it and to label it.
struct Recipe {
  enum class Kind { line_bundles, omega, koszul, q_power };
  Kind kind = Kind::line_bundles;
  std::vector<int> twists;  // line_bundles
  int p = 0;                // omega: Omega^p(k); koszul: R_p
  int k = 0;
  int q = 1;                // q_power of *base
  std::shared_ptr<const Recipe> base;

  std::string label() const;
};

/// Locally free sheaves known a priori: sums of O(a) with |a| <= 3,
/// Omega^p(k) with |k| <= 3, R_m, and q-powers (q <= 3) of those.
template <class K>
class Corpus {
 public:
  explicit Corpus(Ring<K> ring) : ring_(std::move(ring)) {}

  const Ring<K>& ring() const noexcept { return ring_; }
  /// Draw order: kind in 0..3, then the kind's parameters, all from rng.
  Recipe draw(SplitMix64& rng) const;
  Presentation<K> build(const Recipe& r) const;
  /// R_m, computed once per corpus.
  Presentation<K> koszul(int m) const;
  /// A fixed list covering every recipe family once.
  std::vector<Recipe> catalogue() const;

 private:
  Recipe draw_base(SplitMix64& rng) const;

  Ring<K> ring_;
  mutable std::mutex mutex_;
  mutable std::map<int, Presentation<K>> koszul_;
};

Recipe line_bundles(std::vector<int> twists);
Recipe omega_recipe(int p, int k);
Recipe koszul_recipe(int m);
Recipe q_power_recipe(Recipe base, int q);

extern template class Corpus<PrimeField>;
extern template class Corpus<RationalField>;

}  // namespace shfc
