// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shfc/cohomology.hpp"
#include "shfc/constructions.hpp"
#include "shfc/corpus.hpp"
#include "shfc/invariants.hpp"
#include "shfc/random.hpp"
#include "shfc/verify.hpp"

using namespace shfc;

namespace {

using Field = PrimeField;
constexpr std::uint64_t kSeed = 20240601;

Ring<Field> ring(int n) { return Ring<Field>(Field(kDefaultSuiteCharacteristic), n + 1); }

Presentation<Field> O(const Ring<Field>& r, std::vector<int> twists) {
  return line_bundle_sum(r, std::span<const int>(twists));
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  long long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) detail << "first failure: " << what;
    pass = pass && ok;
  }
};

Outcome oracle_equivalence() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    auto r = ring(n);
    SplitMix64 rng(kSeed + n);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> twists(rng.uniform(1, 3));
      for (int& a : twists) a = static_cast<int>(rng.uniform(-4, 4));
      SheafCohomology<Field> coh(O(r, twists));
      for (int i = 0; i <= n; ++i) {
        for (int d = -n - 4; d <= n + 4; ++d) {
          out.expect(coh.h(i, d) == oracle::line_bundles(n, twists, i, d),
                     "n=" + std::to_string(n) + " i=" + std::to_string(i) + " d=" + std::to_string(d));
        }
      }
    }
  }
  return out;
}

Outcome bott_agreement() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    auto r = ring(n);
    for (int p = 0; p <= n; ++p) {
      SheafCohomology<Field> coh(omega(r, p));
      for (int k = -n - 4; k <= n + 4; ++k) {
        for (int q = 0; q <= n; ++q) {
          out.expect(coh.h(q, k) == oracle::bott(n, p, q, k),
                     "h^" + std::to_string(q) + "(P^" + std::to_string(n) + ", Omega^" + std::to_string(p) + "(" +
                         std::to_string(k) + "))");
        }
      }
    }
  }
  return out;
}

Outcome euler_identity() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    Corpus<Field> corpus(ring(n));
    std::vector<Recipe> recipes = corpus.catalogue();
    SplitMix64 rng(kSeed);
    for (int k = 0; k < 20; ++k) recipes.push_back(corpus.draw(rng));
    for (const auto& recipe : recipes) {
      SheafCohomology<Field> coh(corpus.build(recipe));
      for (int d = -n - 5; d <= n + 5; ++d) {
        long long chi = 0;
        for (int i = 0; i <= n; ++i) chi += (i % 2 == 0 ? 1 : -1) * coh.h(i, d);
        out.expect(chi == coh.hilbert_polynomial()(d), recipe.label() + " at d=" + std::to_string(d));
      }
    }
  }
  return out;
}

Outcome level_values() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    auto r = ring(n);
    for (int d = 0; d <= 3; ++d) {
      out.expect(level(O(r, {d})).value == 0 && oracle::level_line(n, d) == 0, "lambda(O(" + std::to_string(d) + "))");
    }
    auto m1 = level(O(r, {-1}));
    out.expect(m1.value == 1 && oracle::level_line(n, -1) == 1, "lambda(O(-1)) on P^" + std::to_string(n));
    // witness i = n-1: h^n(O(-n-1)) = 1
    out.expect(m1.witnesses.size() == 1 && m1.witnesses[0] == LevelWitness{1, n - 1, oracle::choose(n, n)},
               "lambda(O(-1)) witness");
    auto far = level(O(r, {-n - 1}));
    out.expect(far.value == n && oracle::level_line(n, -n - 1) == n, "lambda(O(-n-1))");
    std::vector<int> t{-n - 1};
    out.expect(far.witnesses.front() == LevelWitness{n, 0, oracle::line_bundles(n, t, n, -1)}, "lambda(O(-n-1)) witness");
  }
  auto om = level(omega(ring(2), 1));
  out.expect(om.value == 1, "lambda(Omega^1) on P^2");
  // Bott: the only nonzero grid entry is h^2(Omega^1(-2)) = 3 at q = 1, i = 1.
  out.expect(om.witnesses == std::vector<LevelWitness>{{1, 1, oracle::bott(2, 1, 2, -2)}}, "lambda(Omega^1) witness");
  return out;
}

Outcome from_report(const VerificationReport& report) {
  Outcome out;
  for (const auto& x : report.instances) out.expect(x.pass, x.inputs.dump() + " observed " + x.observed.dump());
  return out;
}

Outcome subadditivity() { return from_report(verify_subadditivity(2, 100, kSeed)); }

Outcome tensor_regularity() { return from_report(verify_regularity_tensor(2, 100, kSeed)); }

Outcome key_theorem() {
  VerificationReport all{"key-theorem", kSeed, {}};
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n : {1, 2}) all.append(verify_key_theorem(p, n, 12, kSeed));
  }
  return from_report(all);
}

Outcome beilinson() {
  auto report = verify_beilinson(2, 30, kSeed);
  Outcome out = from_report(report);
  out.expect(report.instances.size() == 30, "30 modules");
  return out;
}

Outcome bott_vanishing() {
  VerificationReport all{"bott", 0, {}};
  for (int n = 1; n <= 3; ++n) all.append(verify_bott_vanishing(n));
  return from_report(all);
}

Outcome phi_certificates() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    auto r = ring(n);
    for (int d = -4; d <= n + 3; ++d) {
      int bound = phi_certificate(O(r, {d})).bound;
      out.expect(bound == oracle::level_line(n, d - n), "phi certificate of O(" + std::to_string(d) + ")");
      if (d >= n) out.expect(bound == 0, "phi certificate of O(d), d >= n");
    }
  }
  out.expect(phi_certificate(twist(omega(ring(2), 1), 2)).bound == 1, "phi certificate of Omega^1(2)");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "line bundle cohomology equals the closed form", oracle_equivalence},
      {2, "Omega^p cohomology equals the Bott formula", bott_agreement},
      {3, "Euler characteristic equals the Hilbert polynomial", euler_identity},
      {4, "level values", level_values},
      {5, "level subadditivity on 100 pairs over P^2", subadditivity},
      {6, "tensor regularity and reg-twisted vanishing", tensor_regularity},
      {7, "Frobenius vanishing over F_2, F_3, F_5 on P^1, P^2", key_theorem},
      {8, "Beilinson row vanishing and Euler identity, 30 modules", beilinson},
      {9, "Bott vanishing for d >= 1, n <= 3", bott_vanishing},
      {10, "phi certificates", phi_certificates},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::printf("criterion %2d %s: %s [%lld checks, %.2fs]%s%s\n", c.id, out.pass ? "PASS" : "FAIL", c.name,
                out.checks, secs, out.pass ? "" : " ", out.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
