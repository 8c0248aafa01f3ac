#include "shfc/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "shfc/constructions.hpp"
#include "shfc/errors.hpp"

namespace shfc {

template <class K>
Regularity sheaf_regularity(const SheafCohomology<K>& coh) {
  if (coh.hilbert_polynomial().degree() <= 0) return Regularity::minus_infinity();
  const int n = coh.dimension();
  auto regular_at = [&](int m) {
    for (int i = 1; i <= n; ++i) {
      if (coh.h(i, m - i) != 0) return false;
    }
    return true;
  };
  int m = module_regularity(coh.resolution().betti()).value();
  if (!regular_at(m)) throw Error("module regularity is not a sheaf regularity bound");
  while (regular_at(m - 1)) --m;
  return Regularity::finite(m);
}

template <class K>
Regularity sheaf_regularity(const Presentation<K>& m) {
  return sheaf_regularity(SheafCohomology<K>(m));
}

nlohmann::json LevelResult::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : witnesses) w.push_back({{"q", x.q}, {"i", x.i}, {"h", x.h}});
  return {{"value", value}, {"witnesses", w}};
}

template <class K>
LevelResult level(const SheafCohomology<K>& coh, int shift) {
  const int n = coh.dimension();
  LevelResult r;
  for (int i = 0; i <= n - 1; ++i) {
    for (int q = 1; q + i <= n; ++q) {
      long long h = coh.h(q + i, shift - 1 - i);
      if (h != 0) {
        r.witnesses.push_back({q, i, h});
        r.value = std::max(r.value, q);
      }
    }
  }
  return r;
}

template <class K>
LevelResult level(const Presentation<K>& m) {
  return level(SheafCohomology<K>(m));
}

nlohmann::json PhiCertificate::to_json() const {
  return {{"bound", bound}, {"witnesses", level.to_json()["witnesses"]}};
}

template <class K>
PhiCertificate phi_certificate(const Presentation<K>& e, std::uint64_t gate_seed) {
  if (!is_locally_free(e, gate_seed)) {
    throw NotLocallyFreeError("input fails the local-freeness gate; no Frobenius amplitude certificate");
  }
  PhiCertificate c;
  c.level = level(twist(e, -e.ring().dimension()));
  c.bound = c.level.value;
  return c;
}

int BeilinsonTable::top_row() const {
  for (int b = n; b >= 0; --b) {
    for (long long v : e[b]) {
      if (v != 0) return b;
    }
  }
  return -1;
}

bool BeilinsonTable::euler_identity(const HilbertPolynomial& chi, int lo, int hi) const {
  for (int d = lo; d <= hi; ++d) {
    long long lhs = 0;
    for (int b = 0; b <= n; ++b) {
      for (int a = -n; a <= 0; ++a) {
        if (at(a, b) == 0) continue;
        long long sign = ((a + b) % 2 == 0) ? 1 : -1;
        lhs += sign * at(a, b) * HilbertPolynomial(n, {{-a, 1}})(d);
      }
    }
    if (lhs != chi(d)) return false;
  }
  return true;
}

nlohmann::json BeilinsonTable::to_json() const {
  std::vector<int> a;
  for (int x = -n; x <= 0; ++x) a.push_back(x);
  return {{"n", n}, {"a", a}, {"e", e}};
}

std::string BeilinsonTable::to_grid() const {
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::string(s.size() < 5 ? 5 - s.size() : 1, ' ') << s; };
  cell("a");
  for (int a = -n; a <= 0; ++a) cell(std::to_string(a));
  out << '\n';
  for (int b = n; b >= 0; --b) {
    cell("b=" + std::to_string(b));
    for (int a = -n; a <= 0; ++a) cell(std::to_string(at(a, b)));
    out << '\n';
  }
  return out.str();
}

template <class K>
BeilinsonTable beilinson_e1(const Presentation<K>& e) {
  std::vector<Presentation<K>> koszul;
  for (int m = 0; m <= e.ring().dimension(); ++m) koszul.push_back(koszul_R(e.ring(), m));
  return beilinson_e1(e, std::span<const Presentation<K>>(koszul));
}

template <class K>
BeilinsonTable beilinson_e1(const Presentation<K>& e, std::span<const Presentation<K>> koszul) {
  const int n = e.ring().dimension();
  if (static_cast<int>(koszul.size()) != n + 1) throw DomainError("need R_0..R_n");
  BeilinsonTable t;
  t.n = n;
  t.e.assign(n + 1, std::vector<long long>(n + 1, 0));
  for (int a = -n; a <= 0; ++a) {
    SheafCohomology<K> coh(tensor(koszul[-a], e));
    for (int b = 0; b <= n; ++b) t.e[b][a + n] = coh.h(b, 0);
  }
  return t;
}

std::string to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::symmetric:
      return "symmetric";
    case ProbeKind::tensor:
      return "tensor";
    case ProbeKind::q_power:
      return "q-power";
  }
  return "";
}

ProbeKind parse_probe_kind(const std::string& s) {
  if (s == "symmetric") return ProbeKind::symmetric;
  if (s == "tensor") return ProbeKind::tensor;
  if (s == "q-power") return ProbeKind::q_power;
  throw DomainError("unknown probe kind '" + s + "'");
}

nlohmann::json AmplitudeProbe::to_json() const {
  nlohmann::json j = {{"kind", to_string(kind)},
                      {"window", {n_min, n_max}},
                      {"probe_twists", probe_twists},
                      {"observed_bound", observed_bound},
                      {"certified", certified}};
  if (kind == ProbeKind::q_power) j["q"] = q;
  return j;
}

template <class K>
AmplitudeProbe amplitude_probe(const Presentation<K>& e, ProbeKind kind, int n_min, int n_max,
                               std::vector<int> probe_twists, int q) {
  if (probe_twists.empty()) throw DomainError("probe needs at least one twist");
  if (n_min < 1 || n_max < n_min) throw DomainError("probe window must satisfy 1 <= N_min <= N_max");
  AmplitudeProbe p;
  p.kind = kind;
  p.n_min = n_min;
  p.n_max = n_max;
  p.probe_twists = std::move(probe_twists);
  if (kind == ProbeKind::q_power) {
    p.q = q > 0 ? q : (e.ring().characteristic() == 0 ? 2 : static_cast<int>(e.ring().characteristic()));
  }
  const int n = e.ring().dimension();
  Presentation<K> power = e;
  long long qn = 1;
  for (int big_n = 1; big_n <= n_max; ++big_n) {
    if (kind == ProbeKind::tensor && big_n > 1) power = tensor(power, e);
    if (kind == ProbeKind::q_power) qn *= p.q;
    if (big_n < n_min) continue;
    Presentation<K> object = kind == ProbeKind::symmetric ? sym_power(e, big_n)
                             : kind == ProbeKind::tensor  ? power
                                                          : q_power_pullback(e, static_cast<int>(qn));
    SheafCohomology<K> coh(object);
    for (int b : p.probe_twists) {
      for (int i = n; i > p.observed_bound; --i) {
        if (coh.h(i, b) != 0) {
          p.observed_bound = i;
          break;
        }
      }
    }
  }
  return p;
}

#define SHFC_INSTANTIATE(K)                                                                          \
  template Regularity sheaf_regularity(const SheafCohomology<K>&);                                   \
  template Regularity sheaf_regularity(const Presentation<K>&);                                      \
  template LevelResult level(const SheafCohomology<K>&, int);                                           \
  template LevelResult level(const Presentation<K>&);                                                \
  template PhiCertificate phi_certificate(const Presentation<K>&, std::uint64_t);                    \
  template BeilinsonTable beilinson_e1(const Presentation<K>&);                                      \
  template BeilinsonTable beilinson_e1(const Presentation<K>&, std::span<const Presentation<K>>);    \
  template AmplitudeProbe amplitude_probe(const Presentation<K>&, ProbeKind, int, int, std::vector<int>, \
                                          int);

SHFC_INSTANTIATE(PrimeField)
SHFC_INSTANTIATE(RationalField)

}  // namespace shfc
