#include "shfc/corpus.hpp"

#include "shfc/constructions.hpp"

namespace shfc {

namespace {

std::string twist_suffix(int k) {
  if (k == 0) return "";
  return "(" + std::to_string(k) + ")";
}

}  // namespace

std::string Recipe::label() const {
  switch (kind) {
    case Kind::line_bundles: {
      std::string s;
      for (std::size_t j = 0; j < twists.size(); ++j) {
        if (j > 0) s += "+";
        s += "O(" + std::to_string(twists[j]) + ")";
      }
      return s.empty() ? "0" : s;
    }
    case Kind::omega:
      return "Omega^" + std::to_string(p) + twist_suffix(k);
    case Kind::koszul:
      return "R_" + std::to_string(p);
    case Kind::q_power:
      return "F" + std::to_string(q) + "[" + base->label() + "]";
  }
  return "";
}

Recipe line_bundles(std::vector<int> twists) {
  Recipe r;
  r.kind = Recipe::Kind::line_bundles;
  r.twists = std::move(twists);
  return r;
}

Recipe omega_recipe(int p, int k) {
  Recipe r;
  r.kind = Recipe::Kind::omega;
  r.p = p;
  r.k = k;
  return r;
}

Recipe koszul_recipe(int m) {
  Recipe r;
  r.kind = Recipe::Kind::koszul;
  r.p = m;
  return r;
}

Recipe q_power_recipe(Recipe base, int q) {
  Recipe r;
  r.kind = Recipe::Kind::q_power;
  r.q = q;
  r.base = std::make_shared<const Recipe>(std::move(base));
  return r;
}

template <class K>
Presentation<K> Corpus<K>::koszul(int m) const {
  {
    std::lock_guard lock(mutex_);
    auto it = koszul_.find(m);
    if (it != koszul_.end()) return it->second;
  }
  Presentation<K> r = koszul_R(ring_, m);
  std::lock_guard lock(mutex_);
  return koszul_.emplace(m, std::move(r)).first->second;
}

template <class K>
Presentation<K> Corpus<K>::build(const Recipe& r) const {
  switch (r.kind) {
    case Recipe::Kind::line_bundles:
      return line_bundle_sum(ring_, std::span<const int>(r.twists));
    case Recipe::Kind::omega:
      return twist(koszul(r.p), r.k - r.p);
    case Recipe::Kind::koszul:
      return koszul(r.p);
    case Recipe::Kind::q_power:
      return q_power_pullback(build(*r.base), r.q);
  }
  return koszul(0);
}

template <class K>
Recipe Corpus<K>::draw_base(SplitMix64& rng) const {
  const int n = ring_.dimension();
  switch (rng.uniform(0, 2)) {
    case 0: {
      std::vector<int> twists(rng.uniform(1, 2));
      for (int& a : twists) a = static_cast<int>(rng.uniform(-3, 3));
      return line_bundles(std::move(twists));
    }
    case 1: {
      int p = static_cast<int>(rng.uniform(0, n));
      int k = static_cast<int>(rng.uniform(-3, 3));
      return omega_recipe(p, k);
    }
    default:
      return koszul_recipe(static_cast<int>(rng.uniform(0, n)));
  }
}

template <class K>
Recipe Corpus<K>::draw(SplitMix64& rng) const {
  // One draw in four is a q-power of a base recipe.
  if (rng.uniform(0, 3) == 3) {
    int q = static_cast<int>(rng.uniform(2, 3));
    return q_power_recipe(draw_base(rng), q);
  }
  return draw_base(rng);
}

template <class K>
std::vector<Recipe> Corpus<K>::catalogue() const {
  const int n = ring_.dimension();
  std::vector<Recipe> out;
  for (int a = -3; a <= 3; ++a) out.push_back(line_bundles({a}));
  out.push_back(line_bundles({0, -1}));
  out.push_back(line_bundles({2, -3}));
  for (int p = 1; p <= n; ++p) {
    for (int k = -3; k <= 3; ++k) out.push_back(omega_recipe(p, k));
  }
  for (int m = 0; m <= n; ++m) out.push_back(koszul_recipe(m));
  out.push_back(q_power_recipe(line_bundles({1, -1}), 2));
  out.push_back(q_power_recipe(omega_recipe(1, 1), 2));
  out.push_back(q_power_recipe(koszul_recipe(1), 3));
  return out;
}

template class Corpus<PrimeField>;
template class Corpus<RationalField>;

}  // namespace shfc
