#include "shfc/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "shfc/errors.hpp"

namespace shfc {

int pot_compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b) noexcept {
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return grevlex_compare(a, b);
}

namespace {

template <class K>
class Buchberger {
 public:
  using Vec = ModuleVector<K>;
  using Element = typename K::Element;

  Buchberger(const K& field, std::span<const int> comp_degrees)
      : field_(field), comp_degrees_(comp_degrees.begin(), comp_degrees.end()), by_comp_(comp_degrees.size()) {}

  int degree_of(const Vec& v) const { return v.front().mono.degree() + comp_degrees_[v.front().comp]; }

  GroebnerResult<K> run(const std::vector<Vec>& inputs) {
    std::vector<int> order;
    for (int k = 0; k < static_cast<int>(inputs.size()); ++k) {
      if (!inputs[k].empty()) order.push_back(k);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree_of(inputs[a]) < degree_of(inputs[b]); });

    GroebnerResult<K> result;
    std::size_t next = 0;
    while (next < order.size() || !queue_.empty()) {
      int d = next < order.size() ? degree_of(inputs[order[next]]) : std::get<0>(*queue_.begin());
      if (!queue_.empty()) d = std::min(d, std::get<0>(*queue_.begin()));
      while (!queue_.empty() && std::get<0>(*queue_.begin()) == d) {
        auto [deg, j, i] = *queue_.begin();
        queue_.erase(queue_.begin());
        pending_[j][i] = 0;
        process_pair(i, j);
      }
      while (next < order.size() && degree_of(inputs[order[next]]) == d) {
        Vec r = reduce(inputs[order[next]]);
        if (!r.empty()) {
          result.minimal_input_indices.push_back(order[next]);
          add(std::move(r));
        }
        ++next;
      }
    }
    std::sort(result.minimal_input_indices.begin(), result.minimal_input_indices.end());
    finalize(result);
    return result;
  }

 private:
  struct Pair {
    int degree;
    int j;
    int i;
  };

  bool is_pending(int a, int b) const {
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    return pending_[a][b] != 0;
  }

  void add(Vec v) {
    Element inv = field_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = field_.mul(t.coeff, inv);
    int j = static_cast<int>(g_.size());
    int comp = v.front().comp;
    bool single = std::all_of(v.begin(), v.end(), [&](const ModuleTerm<K>& t) { return t.comp == comp; });
    pending_.emplace_back(j, 0);
    for (int i : by_comp_[comp]) {
      Monomial l = lcm(g_[i].v.front().mono, v.front().mono);
      int deg = l.degree() + comp_degrees_[comp];
      queue_.emplace(deg, j, i);
      pending_[j][i] = 1;
    }
    by_comp_[comp].push_back(j);
    g_.push_back(Entry{std::move(v), single});
  }

  void process_pair(int i, int j) {
    const Vec& a = g_[i].v;
    const Vec& b = g_[j].v;
    const Monomial& ma = a.front().mono;
    const Monomial& mb = b.front().mono;
    if (g_[i].single_component && g_[j].single_component && ma.coprime(mb)) return;
    Monomial l = lcm(ma, mb);
    int comp = a.front().comp;
    for (int k : by_comp_[comp]) {
      if (k == i || k == j) continue;
      if (g_[k].v.front().mono.divides(l) && !is_pending(i, k) && !is_pending(j, k)) return;
    }
    // Both leading coefficients are one.
    Vec s = combine(scaled(a, l.quotient(ma), field_.one()), 1, field_.one(), l.quotient(mb), b, 1);
    Vec r = reduce(s);
    if (!r.empty()) add(std::move(r));
  }

  Vec scaled(const Vec& v, const Monomial& m, const Element& c) const {
    Vec out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(ModuleTerm<K>{t.comp, t.mono * m, field_.mul(t.coeff, c)});
    return out;
  }

  // u[from_u..] - c * m * v[from_v..]
  Vec combine(const Vec& u, std::size_t from_u, const Element& c, const Monomial& m, const Vec& v,
              std::size_t from_v) const {
    Vec out;
    out.reserve(u.size() - from_u + v.size() - from_v);
    std::size_t i = from_u, j = from_v;
    while (i < u.size() || j < v.size()) {
      int cmp;
      Monomial vm;
      if (j < v.size()) vm = v[j].mono * m;
      if (i == u.size()) {
        cmp = -1;
      } else if (j == v.size()) {
        cmp = 1;
      } else {
        cmp = pot_compare(u[i].comp, u[i].mono, v[j].comp, vm);
      }
      if (cmp > 0) {
        out.push_back(u[i++]);
      } else if (cmp < 0) {
        out.push_back(ModuleTerm<K>{v[j].comp, vm, field_.neg(field_.mul(c, v[j].coeff))});
        ++j;
      } else {
        Element x = field_.sub(u[i].coeff, field_.mul(c, v[j].coeff));
        if (!field_.is_zero(x)) out.push_back(ModuleTerm<K>{u[i].comp, u[i].mono, std::move(x)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  int find_divisor(const ModuleTerm<K>& t, const std::vector<int>& candidates) const {
    for (int k : candidates) {
      if (g_[k].v.front().mono.divides(t.mono)) return k;
    }
    return -1;
  }

  // Full reduction: leading terms first, then the tail. candidates[c] lists
  // the basis elements with leading component c.
  Vec reduce(const Vec& input, const std::vector<std::vector<int>>& candidates) const {
    Vec h = input;
    std::size_t pos = 0;
    Vec rem;
    while (pos < h.size()) {
      int k = find_divisor(h[pos], candidates[h[pos].comp]);
      if (k < 0) {
        rem.push_back(h[pos++]);
        continue;
      }
      const Vec& g = g_[k].v;
      h = combine(h, pos + 1, h[pos].coeff, h[pos].mono.quotient(g.front().mono), g, 1);
      pos = 0;
    }
    return rem;
  }

  Vec reduce(const Vec& input) const { return reduce(input, by_comp_); }

  void finalize(GroebnerResult<K>& result) {
    std::vector<int> keep;
    for (int k = 0; k < static_cast<int>(g_.size()); ++k) {
      const auto& lead = g_[k].v.front();
      bool redundant = false;
      for (int l : by_comp_[lead.comp]) {
        if (l != k && g_[l].v.front().mono.divides(lead.mono)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) keep.push_back(k);
    }
    std::vector<std::vector<int>> keep_by_comp(by_comp_.size());
    for (int k : keep) keep_by_comp[g_[k].v.front().comp].push_back(k);
    std::vector<Vec> basis;
    for (int k : keep) {
      const Vec& v = g_[k].v;
      Vec tail(v.begin() + 1, v.end());
      Vec reduced{v.front()};
      for (auto& t : reduce(tail, keep_by_comp)) reduced.push_back(std::move(t));
      basis.push_back(std::move(reduced));
    }
    std::sort(basis.begin(), basis.end(), [](const Vec& a, const Vec& b) {
      return pot_compare(a.front().comp, a.front().mono, b.front().comp, b.front().mono) > 0;
    });
    for (auto& v : basis) {
      result.basis_degrees.push_back(degree_of(v));
      result.basis.push_back(std::move(v));
    }
  }

  struct Entry {
    Vec v;
    bool single_component;
  };

  const K& field_;
  std::vector<int> comp_degrees_;
  std::vector<Entry> g_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<std::vector<char>> pending_;  // pending_[j][i], i < j
  std::set<std::tuple<int, int, int>> queue_;
};

}  // namespace

template <class K>
GroebnerResult<K> compute_groebner(const K& field, std::span<const int> component_degrees,
                                   const std::vector<ModuleVector<K>>& inputs) {
  for (const auto& v : inputs) {
    for (const auto& t : v) {
      if (t.comp < 0 || t.comp >= static_cast<int>(component_degrees.size())) {
        throw DomainError("module vector component out of range");
      }
    }
  }
  return Buchberger<K>(field, component_degrees).run(inputs);
}

template <class K>
ModuleVector<K> column_vector(const GradedMap<K>& map, int col, int comp_offset) {
  ModuleVector<K> v;
  for (int i = 0; i < map.rows(); ++i) {
    for (const auto& t : map.entry(i, col).terms()) v.push_back(ModuleTerm<K>{i + comp_offset, t.mono, t.coeff});
  }
  // Components ascend and each polynomial is already grevlex-descending.
  return v;
}

namespace {

template <class K>
GradedMap<K> map_from_vectors(const Ring<K>& ring, const GradedFreeModule& target,
                              const std::vector<ModuleVector<K>>& vectors, const std::vector<int>& degrees,
                              int comp_offset = 0) {
  GradedFreeModule source{degrees};
  std::vector<std::vector<std::vector<typename Polynomial<K>::Term>>> terms(
      vectors.size(), std::vector<std::vector<typename Polynomial<K>::Term>>(target.rank()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (const auto& t : vectors[j]) terms[j][t.comp - comp_offset].push_back({t.mono, t.coeff});
  }
  std::vector<std::vector<Polynomial<K>>> columns;
  columns.reserve(vectors.size());
  for (auto& col : terms) {
    std::vector<Polynomial<K>> c;
    c.reserve(col.size());
    for (auto& entry : col) c.push_back(Polynomial<K>::from_terms(ring, std::move(entry)));
    columns.push_back(std::move(c));
  }
  return GradedMap<K>(ring, std::move(source), target, std::move(columns));
}

}  // namespace

template <class K>
GradedMap<K> groebner_basis(const GradedMap<K>& map) {
  std::vector<ModuleVector<K>> cols;
  for (int j = 0; j < map.cols(); ++j) cols.push_back(column_vector(map, j));
  auto gb = compute_groebner(map.ring().field(), std::span<const int>(map.target().degrees), cols);
  return map_from_vectors(map.ring(), map.target(), gb.basis, gb.basis_degrees);
}

template <class K>
GradedMap<K> minimal_generators(const GradedMap<K>& map) {
  std::vector<ModuleVector<K>> cols;
  for (int j = 0; j < map.cols(); ++j) cols.push_back(column_vector(map, j));
  auto gb = compute_groebner(map.ring().field(), std::span<const int>(map.target().degrees), cols);
  GradedFreeModule source;
  std::vector<std::vector<Polynomial<K>>> columns;
  for (int k : gb.minimal_input_indices) {
    source.degrees.push_back(map.source().degrees[k]);
    columns.push_back(map.column(k));
  }
  return GradedMap<K>(map.ring(), std::move(source), map.target(), std::move(columns));
}

template <class K>
GradedMap<K> syzygies(const GradedMap<K>& map) {
  const K& field = map.ring().field();
  int r = map.rows();
  int s = map.cols();
  std::vector<int> degrees = map.target().degrees;
  degrees.insert(degrees.end(), map.source().degrees.begin(), map.source().degrees.end());
  std::vector<ModuleVector<K>> graph;
  graph.reserve(s);
  for (int j = 0; j < s; ++j) {
    auto v = column_vector(map, j);
    v.push_back(ModuleTerm<K>{r + j, Monomial{}, field.one()});
    graph.push_back(std::move(v));
  }
  auto gb = compute_groebner(field, std::span<const int>(degrees), graph);
  std::vector<ModuleVector<K>> syz;
  for (auto& v : gb.basis) {
    if (v.front().comp < r) continue;
    for (auto& t : v) t.comp -= r;
    syz.push_back(std::move(v));
  }
  auto mins = compute_groebner(field, std::span<const int>(map.source().degrees), syz);
  std::vector<ModuleVector<K>> chosen;
  std::vector<int> chosen_degrees;
  for (int k : mins.minimal_input_indices) {
    chosen_degrees.push_back(syz[k].front().mono.degree() + map.source().degrees[syz[k].front().comp]);
    chosen.push_back(std::move(syz[k]));
  }
  return map_from_vectors(map.ring(), map.source(), chosen, chosen_degrees);
}

template GroebnerResult<PrimeField> compute_groebner(const PrimeField&, std::span<const int>,
                                                     const std::vector<ModuleVector<PrimeField>>&);
template GroebnerResult<RationalField> compute_groebner(const RationalField&, std::span<const int>,
                                                        const std::vector<ModuleVector<RationalField>>&);
template ModuleVector<PrimeField> column_vector(const GradedMap<PrimeField>&, int, int);
template ModuleVector<RationalField> column_vector(const GradedMap<RationalField>&, int, int);
template GradedMap<PrimeField> groebner_basis(const GradedMap<PrimeField>&);
template GradedMap<RationalField> groebner_basis(const GradedMap<RationalField>&);
template GradedMap<PrimeField> minimal_generators(const GradedMap<PrimeField>&);
template GradedMap<RationalField> minimal_generators(const GradedMap<RationalField>&);
template GradedMap<PrimeField> syzygies(const GradedMap<PrimeField>&);
template GradedMap<RationalField> syzygies(const GradedMap<RationalField>&);

}  // namespace shfc
