#include "shfc/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "shfc/errors.hpp"
#include "shfc/strand.hpp"

namespace shfc {

bool CohomologyTable::euler_matches(const HilbertPolynomial& p) const {
  for (int d = d_min; d <= d_max; ++d) {
    long long chi = 0;
    for (int i = 0; i <= n; ++i) chi += (i % 2 == 0) ? at(i, d) : -at(i, d);
    if (chi != p(d)) return false;
  }
  return true;
}

nlohmann::json CohomologyTable::to_json() const {
  return {{"n", n}, {"window", {d_min, d_max}}, {"h", h}};
}

CohomologyTable CohomologyTable::from_json(const nlohmann::json& j) {
  CohomologyTable t;
  t.n = j.at("n").get<int>();
  t.d_min = j.at("window").at(0).get<int>();
  t.d_max = j.at("window").at(1).get<int>();
  t.h = j.at("h").get<std::vector<std::vector<long long>>>();
  return t;
}

std::string CohomologyTable::to_grid() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"d"};
  for (int d = d_min; d <= d_max; ++d) header.push_back(std::to_string(d));
  cells.push_back(header);
  for (int i = n; i >= 0; --i) {
    std::vector<std::string> row{"h" + std::to_string(i)};
    for (int d = d_min; d <= d_max; ++d) row.push_back(std::to_string(at(i, d)));
    cells.push_back(row);
  }
  std::size_t width = 1;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out << ' ';
      out << std::string(width - row[k].size(), ' ') << row[k];
    }
    out << '\n';
  }
  return out.str();
}

template <class K>
SheafCohomology<K>::SheafCohomology(Presentation<K> m)
    : module_(std::move(m)),
      res_(minimal_free_resolution(module_)),
      hilbert_(shfc::hilbert_polynomial(res_, module_.ring().num_vars())) {
  for (const auto& d : res_.maps) dual_maps_.push_back(d.dual());
}

template <class K>
long long SheafCohomology<K>::module_dim(int d) const {
  return hilbert_function(res_, module_.ring().num_vars(), d);
}

template <class K>
long long SheafCohomology<K>::dual_rank(int j, int e) const {
  if (j < 1 || j > res_.length()) return 0;
  {
    std::lock_guard lock(mutex_);
    auto it = rank_cache_.find({j, e});
    if (it != rank_cache_.end()) return it->second;
  }
  long long r = strand_rank(dual_maps_[j - 1], e);
  std::lock_guard lock(mutex_);
  rank_cache_.emplace(std::pair{j, e}, r);
  return r;
}

template <class K>
long long SheafCohomology<K>::ext_dim(int j, int e) const {
  if (j < 0 || j >= static_cast<int>(res_.modules.size())) return 0;
  long long dim = strand_dimension(module_.ring().num_vars(), res_.modules[j].dual(), e);
  if (dim == 0) return 0;
  return dim - dual_rank(j, e) - dual_rank(j + 1, e);
}

template <class K>
long long SheafCohomology<K>::h(int i, int d) const {
  int n = dimension();
  if (i < 0 || i > n) throw DomainError("cohomological index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  int e = -d - n - 1;
  if (i >= 1) return ext_dim(n - i, e);
  return module_dim(d) - ext_dim(n + 1, e) + ext_dim(n, e);
}

template <class K>
CohomologyTable SheafCohomology<K>::table(int d_min, int d_max) const {
  if (d_min > d_max) throw DomainError("empty twist window");
  CohomologyTable t{dimension(), d_min, d_max, {}};
  t.h.assign(dimension() + 1, std::vector<long long>(d_max - d_min + 1, 0));
  for (int i = 0; i <= dimension(); ++i) {
    for (int d = d_min; d <= d_max; ++d) t.h[i][d - d_min] = h(i, d);
  }
  return t;
}

template <class K>
long long ext_strand_dim(const Presentation<K>& m, int j, int d) {
  if (j < 0 || j > m.ring().num_vars()) throw DomainError("Ext index out of range");
  return SheafCohomology<K>(m).ext_dim(j, d);
}

template <class K>
long long sheaf_cohomology_dim(const Presentation<K>& m, int i, int d) {
  return SheafCohomology<K>(m).h(i, d);
}

template <class K>
CohomologyTable cohomology_table(const Presentation<K>& m, int d_min, int d_max) {
  return SheafCohomology<K>(m).table(d_min, d_max);
}

long long line_bundle_oracle(int n, std::span<const int> twists, int i, int d) {
  if (i < 0 || i > n) throw DomainError("cohomological index out of range");
  long long total = 0;
  for (int a : twists) {
    if (i == 0) total += binomial(n + a + d, n);
    if (i == n) total += binomial(-a - d - 1, n);
  }
  return total;
}

template class SheafCohomology<PrimeField>;
template class SheafCohomology<RationalField>;

#define SHFC_INSTANTIATE(K)                                                   \
  template long long ext_strand_dim(const Presentation<K>&, int, int);       \
  template long long sheaf_cohomology_dim(const Presentation<K>&, int, int); \
  template CohomologyTable cohomology_table(const Presentation<K>&, int, int);

SHFC_INSTANTIATE(PrimeField)
SHFC_INSTANTIATE(RationalField)

}  // namespace shfc
