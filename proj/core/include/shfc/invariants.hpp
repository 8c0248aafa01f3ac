#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shfc/cohomology.hpp"

namespace shfc {

/// Smallest m with h^i(F(m - i)) = 0 for 1 <= i <= n. Starts at the module
/// regularity and walks down. Minus infinity when the Hilbert polynomial has
/// degree <= 0, since then no higher cohomology exists in any twist.
template <class K>
Regularity sheaf_regularity(const SheafCohomology<K>& coh);
template <class K>
Regularity sheaf_regularity(const Presentation<K>& m);

struct LevelWitness {
  int q;
  int i;
  long long h;  // h^{q+i}(F(-1-i)) != 0
  bool operator==(const LevelWitness&) const = default;
};

struct LevelResult {
  int value = 0;
  std::vector<LevelWitness> witnesses;  // ordered by i, then q
  nlohmann::json to_json() const;
};

/// Max q >= 1 with h^{q+i}(F(-1-i)) != 0 for some i >= 0, else 0. Scans
/// 0 <= i <= n-1, 1 <= q <= n-i. With shift s the sheaf is F(s).
template <class K>
LevelResult level(const SheafCohomology<K>& coh, int shift = 0);
template <class K>
LevelResult level(const Presentation<K>& m);

struct PhiCertificate {
  int bound = 0;
  LevelResult level;  // of E(-n)
  nlohmann::json to_json() const;
};

/// lambda(E(-n)), an upper bound for the Frobenius amplitude of E. Throws
/// NotLocallyFreeError if E fails the fiber-rank gate.
template <class K>
PhiCertificate phi_certificate(const Presentation<K>& e, std::uint64_t gate_seed = 0);

/// e_{ab} = h^b(R_{-a} x E) for -n <= a <= 0, 0 <= b <= n.
struct BeilinsonTable {
  int n = 0;
  std::vector<std::vector<long long>> e;  // e[b][a + n]

  long long at(int a, int b) const { return e.at(b).at(a + n); }
  /// Highest row b holding a nonzero entry, or -1.
  int top_row() const;
  /// sum (-1)^{a+b} e_{ab} chi(O(a + d)) == chi(E(d)) for d in [lo, hi].
  bool euler_identity(const HilbertPolynomial& chi, int lo, int hi) const;
  nlohmann::json to_json() const;
  std::string to_grid() const;
};

template <class K>
BeilinsonTable beilinson_e1(const Presentation<K>& e);
/// Same, reusing koszul[m] = R_m for m = 0..n.
template <class K>
BeilinsonTable beilinson_e1(const Presentation<K>& e, std::span<const Presentation<K>> koszul);

enum class ProbeKind { symmetric, tensor, q_power };

std::string to_string(ProbeKind kind);
ProbeKind parse_probe_kind(const std::string& s);

/// Finite-window evidence, never a certificate: the largest i >= 1 with
/// h^i(P^N(E)(b)) != 0 over the window, or 0.
struct AmplitudeProbe {
  ProbeKind kind = ProbeKind::symmetric;
  int n_min = 1;
  int n_max = 1;
  int q = 0;  // base of the q-power probe, 0 otherwise
  std::vector<int> probe_twists;
  int observed_bound = 0;
  bool certified = false;
  nlohmann::json to_json() const;
};

/// P^N is Sym^N, the N-fold tensor power, or the q^N-power pullback. For the
/// q-power probe q = 0 picks the characteristic (2 in characteristic 0).
template <class K>
AmplitudeProbe amplitude_probe(const Presentation<K>& e, ProbeKind kind, int n_min, int n_max,
                               std::vector<int> probe_twists, int q = 0);

}  // namespace shfc
