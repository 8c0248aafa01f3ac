#include "shfc/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "shfc/errors.hpp"
#include "shfc/groebner.hpp"
#include "shfc/strand.hpp"

namespace shfc {

int BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::to_string() const {
  if (entries.empty()) return "zero module\n";
  int max_i = 0, min_row = 0, max_row = 0;
  bool first = true;
  for (const auto& [key, v] : entries) {
    auto [i, j] = key;
    max_i = std::max(max_i, i);
    if (first) {
      min_row = max_row = j - i;
      first = false;
    }
    min_row = std::min(min_row, j - i);
    max_row = std::max(max_row, j - i);
  }
  std::vector<int> totals(max_i + 1, 0);
  for (const auto& [key, v] : entries) totals[key.first] += v;

  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << std::string(s.size() < 4 ? 4 - s.size() : 1, ' ') << s;
  };
  out << "       ";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << "\ntotal: ";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(totals[i]));
  out << "\n";
  for (int row = min_row; row <= max_row; ++row) {
    std::string label = std::to_string(row) + ":";
    out << std::string(label.size() < 7 ? 7 - label.size() : 0, ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      int v = at(i, i + row);
      cell(v == 0 ? "." : std::to_string(v));
    }
    out << "\n";
  }
  return out.str();
}

template <class K>
BettiTable FreeResolution<K>::betti() const {
  BettiTable b;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    for (int d : modules[i].degrees) ++b.entries[{static_cast<int>(i), d}];
  }
  return b;
}

namespace {

template <class K>
GradedMap<K> drop_row(const GradedMap<K>& m, int row) {
  GradedFreeModule target = m.target();
  target.degrees.erase(target.degrees.begin() + row);
  std::vector<std::vector<Polynomial<K>>> columns;
  for (int j = 0; j < m.cols(); ++j) {
    auto c = m.column(j);
    c.erase(c.begin() + row);
    columns.push_back(std::move(c));
  }
  return GradedMap<K>(m.ring(), m.source(), std::move(target), std::move(columns));
}

template <class K>
GradedMap<K> drop_column(const GradedMap<K>& m, int col) {
  GradedFreeModule source = m.source();
  source.degrees.erase(source.degrees.begin() + col);
  std::vector<std::vector<Polynomial<K>>> columns;
  for (int j = 0; j < m.cols(); ++j) {
    if (j != col) columns.push_back(m.column(j));
  }
  return GradedMap<K>(m.ring(), std::move(source), m.target(), std::move(columns));
}

// Splits off the unit entry (row, col) of maps[i]: F_{i+1} -> F_i.
template <class K>
void eliminate_unit(FreeResolution<K>& res, int i, int row, int col) {
  const GradedMap<K>& d = res.maps[i];
  const K& field = d.ring().field();
  auto u_inv = field.inv(d.entry(row, col).constant_coefficient());
  GradedFreeModule source = d.source(), target = d.target();
  source.degrees.erase(source.degrees.begin() + col);
  target.degrees.erase(target.degrees.begin() + row);
  std::vector<std::vector<Polynomial<K>>> columns;
  for (int b = 0; b < d.cols(); ++b) {
    if (b == col) continue;
    Polynomial<K> factor = d.entry(row, b).scaled(u_inv);
    std::vector<Polynomial<K>> c;
    for (int a = 0; a < d.rows(); ++a) {
      if (a == row) continue;
      if (factor.is_zero() || d.entry(a, col).is_zero()) {
        c.push_back(d.entry(a, b));
      } else {
        c.push_back(d.entry(a, b) - d.entry(a, col) * factor);
      }
    }
    columns.push_back(std::move(c));
  }
  GradedMap<K> reduced(d.ring(), std::move(source), std::move(target), std::move(columns));
  if (i > 0) res.maps[i - 1] = drop_column(res.maps[i - 1], row);
  if (i + 1 < static_cast<int>(res.maps.size())) res.maps[i + 1] = drop_row(res.maps[i + 1], col);
  res.maps[i] = std::move(reduced);
  res.modules[i].degrees.erase(res.modules[i].degrees.begin() + row);
  res.modules[i + 1].degrees.erase(res.modules[i + 1].degrees.begin() + col);
}

}  // namespace

template <class K>
FreeResolution<K> minimize(FreeResolution<K> res) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < res.length() && !changed; ++i) {
      const GradedMap<K>& d = res.maps[i];
      for (int col = 0; col < d.cols() && !changed; ++col) {
        for (int row = 0; row < d.rows(); ++row) {
          if (d.entry(row, col).is_unit()) {
            eliminate_unit(res, i, row, col);
            changed = true;
            break;
          }
        }
      }
    }
  }
  while (!res.maps.empty() && res.modules.back().is_zero()) {
    res.maps.pop_back();
    res.modules.pop_back();
  }
  res.minimal = true;
  return res;
}

template <class K>
FreeResolution<K> minimal_free_resolution(const Presentation<K>& m) {
  FreeResolution<K> res;
  res.modules.push_back(m.generators());
  if (m.relations().cols() > 0) {
    res.modules.push_back(m.relations().source());
    res.maps.push_back(m.relations());
    // Kernels are generated minimally; minimize() clears units coming from
    // redundant relations.
    for (;;) {
      GradedMap<K> next = syzygies(res.maps.back());
      if (next.cols() == 0) break;
      res.modules.push_back(next.source());
      res.maps.push_back(std::move(next));
      if (res.length() > m.ring().num_vars() + 2) throw Error("resolution failed to terminate");
    }
  }
  res = minimize(std::move(res));
  if (res.length() > m.ring().num_vars()) {
    throw Error("minimal resolution longer than the number of variables");
  }
  return res;
}

Regularity module_regularity(const BettiTable& betti) {
  if (betti.empty()) return Regularity::minus_infinity();
  int r = betti.entries.begin()->first.second - betti.entries.begin()->first.first;
  for (const auto& [key, v] : betti.entries) r = std::max(r, key.second - key.first);
  return Regularity::finite(r);
}

HilbertPolynomial::HilbertPolynomial(int n, std::map<int, long long> shifts) : n_(n) {
  for (auto& [a, c] : shifts) {
    if (c != 0) shifts_[a] = c;
  }
}

long long HilbertPolynomial::operator()(long long d) const {
  // C(n + d - a, n) as a polynomial: (d-a+1)(d-a+2)...(d-a+n) / n!.
  __int128 total = 0;
  __int128 factorial = 1;
  for (int k = 2; k <= n_; ++k) factorial *= k;
  for (const auto& [a, c] : shifts_) {
    __int128 prod = 1;
    for (int k = 1; k <= n_; ++k) prod *= static_cast<__int128>(d - a + k);
    total += static_cast<__int128>(c) * (prod / factorial);
  }
  return static_cast<long long>(total);
}

std::vector<mpq_class> HilbertPolynomial::coefficients() const {
  std::vector<mpq_class> coeffs(n_ + 1, mpq_class(0));
  mpz_class factorial = 1;
  for (int k = 2; k <= n_; ++k) factorial *= k;
  for (const auto& [a, c] : shifts_) {
    // Expand prod_{k=1..n} (d + (k - a)).
    std::vector<mpz_class> poly{1};
    for (int k = 1; k <= n_; ++k) {
      std::vector<mpz_class> next(poly.size() + 1, 0);
      for (std::size_t p = 0; p < poly.size(); ++p) {
        next[p + 1] += poly[p];
        next[p] += poly[p] * (k - a);
      }
      poly = std::move(next);
    }
    for (std::size_t p = 0; p < poly.size(); ++p) {
      coeffs[p] += mpq_class(poly[p] * static_cast<long>(c), factorial);
    }
  }
  for (auto& q : coeffs) q.canonicalize();
  return coeffs;
}

int HilbertPolynomial::degree() const {
  auto c = coefficients();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (sgn(c[k]) != 0) return k;
  }
  return -1;
}

std::string HilbertPolynomial::to_string() const {
  auto c = coefficients();
  std::string out;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    if (sgn(c[k]) == 0) continue;
    mpq_class v = c[k];
    bool negative = sgn(v) < 0;
    if (negative) v = -v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coeff = v.get_str();
    if (k == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += "d";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

template <class K>
HilbertPolynomial hilbert_polynomial(const FreeResolution<K>& res, int num_vars) {
  std::map<int, long long> shifts;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int a : res.modules[i].degrees) shifts[a] += (i % 2 == 0) ? 1 : -1;
  }
  return HilbertPolynomial(num_vars - 1, std::move(shifts));
}

template <class K>
long long hilbert_function(const FreeResolution<K>& res, int num_vars, int d) {
  long long total = 0;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    long long dim = strand_dimension(num_vars, res.modules[i], d);
    total += (i % 2 == 0) ? dim : -dim;
  }
  return total;
}

template <class K>
HilbertData hilbert_data(const Presentation<K>& m, int lo, int hi) {
  auto res = minimal_free_resolution(m);
  int nv = m.ring().num_vars();
  HilbertData data{lo, {}, hilbert_polynomial(res, nv)};
  for (int d = lo; d <= hi; ++d) data.function.push_back(hilbert_function(res, nv, d));
  return data;
}

template <class K>
std::vector<int> exactness_failures(const Presentation<K>& m, const FreeResolution<K>& res, int lo, int hi) {
  std::vector<int> failures;
  int nv = m.ring().num_vars();
  for (int i = 0; i + 1 < res.length(); ++i) {
    if (!res.maps[i].compose(res.maps[i + 1]).is_zero()) {
      failures.push_back(lo);
      return failures;
    }
  }
  for (int d = lo; d <= hi; ++d) {
    bool ok = true;
    std::vector<long long> ranks(res.length() + 2, 0);
    for (int i = 0; i < res.length(); ++i) ranks[i + 1] = strand_rank(res.maps[i], d);
    long long module_dim = strand_dimension(nv, m.generators(), d) - strand_rank(m.relations(), d);
    if (strand_dimension(nv, res.modules[0], d) - ranks[1] != module_dim) ok = false;
    for (int i = 1; i < static_cast<int>(res.modules.size()); ++i) {
      if (ranks[i] + ranks[i + 1] != strand_dimension(nv, res.modules[i], d)) ok = false;
    }
    if (!ok) failures.push_back(d);
  }
  return failures;
}

template <class K>
std::pair<int, int> verification_window(const Presentation<K>& m, const FreeResolution<K>& res) {
  int lo = 0;
  if (!m.generators().degrees.empty()) {
    lo = *std::min_element(m.generators().degrees.begin(), m.generators().degrees.end());
  }
  auto reg = module_regularity(res.betti());
  int top = reg.is_finite() ? reg.value() : lo;
  return {lo - 2, top + m.ring().dimension() + 2};
}

#define SHFC_INSTANTIATE(K)                                                                          \
  template struct FreeResolution<K>;                                                                 \
  template FreeResolution<K> minimize(FreeResolution<K>);                                            \
  template FreeResolution<K> minimal_free_resolution(const Presentation<K>&);                        \
  template HilbertPolynomial hilbert_polynomial(const FreeResolution<K>&, int);                      \
  template long long hilbert_function(const FreeResolution<K>&, int, int);                           \
  template HilbertData hilbert_data(const Presentation<K>&, int, int);                               \
  template std::vector<int> exactness_failures(const Presentation<K>&, const FreeResolution<K>&, int, \
                                               int);                                                 \
  template std::pair<int, int> verification_window(const Presentation<K>&, const FreeResolution<K>&);

SHFC_INSTANTIATE(PrimeField)
SHFC_INSTANTIATE(RationalField)

}  // namespace shfc
