#include "shfc/constructions.hpp"

#include <algorithm>
#include <map>

#include "shfc/errors.hpp"
#include "shfc/groebner.hpp"
#include "shfc/linalg.hpp"
#include "shfc/random.hpp"

namespace shfc {

namespace {

/// Nondecreasing sequences of length r over [0, m), lexicographic.
std::vector<std::vector<int>> multisets(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    for (int g = start; g < m; ++g) {
      current.push_back(g);
      self(self, g);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Increasing sequences of length r over [0, m), lexicographic.
std::vector<std::vector<int>> subsets(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    for (int g = start; g < m; ++g) {
      current.push_back(g);
      self(self, g + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

template <class K>
Presentation<K> twist(const Presentation<K>& m, int e) {
  return Presentation<K>(m.relations().twisted(e));
}

template <class K>
Presentation<K> direct_sum(const Presentation<K>& m, const Presentation<K>& n) {
  if (!(m.ring() == n.ring())) throw RingMismatch();
  return Presentation<K>(block_sum(m.relations(), n.relations()));
}

template <class K>
Presentation<K> tensor(const Presentation<K>& m, const Presentation<K>& n) {
  if (!(m.ring() == n.ring())) throw RingMismatch();
  const Ring<K>& ring = m.ring();
  const GradedMap<K>& a = m.relations();
  const GradedMap<K>& b = n.relations();
  const auto& g = a.target().degrees;
  const auto& h = b.target().degrees;
  const int gh = static_cast<int>(h.size());

  GradedFreeModule target;
  for (int x : g) {
    for (int y : h) target.degrees.push_back(x + y);
  }
  GradedFreeModule source;
  std::vector<std::vector<Polynomial<K>>> columns;
  for (int c = 0; c < a.cols(); ++c) {
    for (int y = 0; y < gh; ++y) {
      std::vector<Polynomial<K>> col(target.rank(), Polynomial<K>(ring));
      for (int x = 0; x < a.rows(); ++x) col[x * gh + y] = a.entry(x, c);
      source.degrees.push_back(a.source().degrees[c] + h[y]);
      columns.push_back(std::move(col));
    }
  }
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    for (int c = 0; c < b.cols(); ++c) {
      std::vector<Polynomial<K>> col(target.rank(), Polynomial<K>(ring));
      for (int y = 0; y < gh; ++y) col[x * gh + y] = b.entry(y, c);
      source.degrees.push_back(g[x] + b.source().degrees[c]);
      columns.push_back(std::move(col));
    }
  }
  return Presentation<K>(GradedMap<K>(ring, std::move(source), std::move(target), std::move(columns)));
}

template <class K>
Presentation<K> sym_power(const Presentation<K>& m, int r) {
  if (r < 1) throw DomainError("symmetric power must be positive");
  const Ring<K>& ring = m.ring();
  const GradedMap<K>& a = m.relations();
  const auto& g = a.target().degrees;
  const int rank = static_cast<int>(g.size());

  auto top = multisets(rank, r);
  std::map<std::vector<int>, int> index;
  GradedFreeModule target;
  for (const auto& mu : top) {
    index.emplace(mu, static_cast<int>(index.size()));
    int deg = 0;
    for (int x : mu) deg += g[x];
    target.degrees.push_back(deg);
  }

  GradedFreeModule source;
  std::vector<std::vector<Polynomial<K>>> columns;
  auto lower = multisets(rank, r - 1);
  for (int c = 0; c < a.cols(); ++c) {
    for (const auto& mu : lower) {
      std::vector<Polynomial<K>> col(target.rank(), Polynomial<K>(ring));
      int deg = a.source().degrees[c];
      for (int x : mu) deg += g[x];
      for (int x = 0; x < rank; ++x) {
        if (a.entry(x, c).is_zero()) continue;
        std::vector<int> nu = mu;
        nu.insert(std::upper_bound(nu.begin(), nu.end(), x), x);
        col[index.at(nu)] += a.entry(x, c);
      }
      source.degrees.push_back(deg);
      columns.push_back(std::move(col));
    }
  }
  return Presentation<K>(GradedMap<K>(ring, std::move(source), std::move(target), std::move(columns)));
}

template <class K>
Presentation<K> q_power_pullback(const Presentation<K>& m, int q) {
  if (q < 1) throw DomainError("q-power must be positive");
  return Presentation<K>(m.relations().substitute_powers(q));
}

template <class K>
Presentation<K> line_bundle_sum(const Ring<K>& ring, std::span<const int> twists) {
  GradedFreeModule f;
  for (int a : twists) f.degrees.push_back(-a);
  return Presentation<K>::free(ring, std::move(f));
}

template <class K>
GradedMap<K> koszul_map(const Ring<K>& ring, int m) {
  const int nv = ring.num_vars();
  if (m < 1 || m > nv) throw DomainError("Koszul index out of range");
  const K& field = ring.field();
  auto src = subsets(nv, m);
  auto tgt = subsets(nv, m - 1);
  std::map<std::vector<int>, int> row;
  for (const auto& s : tgt) row.emplace(s, static_cast<int>(row.size()));

  std::vector<std::vector<Polynomial<K>>> columns;
  for (const auto& s : src) {
    std::vector<Polynomial<K>> col(tgt.size(), Polynomial<K>(ring));
    for (int k = 0; k < m; ++k) {
      std::vector<int> rest = s;
      rest.erase(rest.begin() + k);
      auto sign = (k % 2 == 0) ? field.one() : field.neg(field.one());
      col[row.at(rest)] = Polynomial<K>::variable(ring, s[k]).scaled(sign);
    }
    columns.push_back(std::move(col));
  }
  return GradedMap<K>(ring, GradedFreeModule{std::vector<int>(src.size(), 0)},
                      GradedFreeModule{std::vector<int>(tgt.size(), -1)}, std::move(columns));
}

template <class K>
Presentation<K> koszul_R(const Ring<K>& ring, int m) {
  const int n = ring.dimension();
  if (m < 0 || m > n) throw DomainError("Koszul sheaf index must lie in 0.." + std::to_string(n));
  if (m == 0) return Presentation<K>::free(ring, GradedFreeModule{{0}});
  GradedMap<K> generators = syzygies(koszul_map(ring, m));
  return Presentation<K>(syzygies(generators));
}

template <class K>
Presentation<K> omega(const Ring<K>& ring, int p) {
  return twist(koszul_R(ring, p), -p);
}

template <class K>
bool is_locally_free(const Presentation<K>& m, std::uint64_t seed, int points) {
  const Ring<K>& ring = m.ring();
  const K& field = ring.field();
  const GradedMap<K>& a = m.relations();
  if (a.cols() == 0 || a.rows() == 0) return true;
  SplitMix64 rng(seed);
  std::vector<typename K::Element> point(ring.num_vars(), field.zero());
  int expected = -1;
  for (int trial = 0; trial < points; ++trial) {
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : point) {
        x = ring.characteristic() == 0 ? field.from_int(rng.uniform(-50, 50)) : field.from_random(rng.next());
        nonzero = nonzero || !field.is_zero(x);
      }
    }
    DenseMatrix<K> mat(field, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) mat.at(r, c) = a.entry(r, c).evaluate(point);
    }
    int rk = rank(field, std::move(mat));
    if (expected < 0) {
      expected = rk;
    } else if (rk != expected) {
      return false;
    }
  }
  return true;
}

#define SHFC_INSTANTIATE(K)                                                                \
  template Presentation<K> twist(const Presentation<K>&, int);                             \
  template Presentation<K> direct_sum(const Presentation<K>&, const Presentation<K>&);     \
  template Presentation<K> tensor(const Presentation<K>&, const Presentation<K>&);         \
  template Presentation<K> sym_power(const Presentation<K>&, int);                         \
  template Presentation<K> q_power_pullback(const Presentation<K>&, int);                  \
  template Presentation<K> line_bundle_sum(const Ring<K>&, std::span<const int>);          \
  template GradedMap<K> koszul_map(const Ring<K>&, int);                                   \
  template Presentation<K> koszul_R(const Ring<K>&, int);                                  \
  template Presentation<K> omega(const Ring<K>&, int);                                     \
  template bool is_locally_free(const Presentation<K>&, std::uint64_t, int);

SHFC_INSTANTIATE(PrimeField)
SHFC_INSTANTIATE(RationalField)

}  // namespace shfc
