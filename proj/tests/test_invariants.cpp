#include <doctest.h>

#include "oracles.hpp"
#include "shfc/constructions.hpp"
#include "shfc/corpus.hpp"
#include "shfc/errors.hpp"
#include "shfc/invariants.hpp"

using namespace shfc;

namespace {

Ring<PrimeField> fp(int vars, std::uint32_t p = 32003) { return Ring<PrimeField>(PrimeField(p), vars); }

template <class K>
Presentation<K> O(const Ring<K>& r, std::vector<int> twists) {
  return line_bundle_sum(r, std::span<const int>(twists));
}

std::vector<Presentation<PrimeField>> small_corpus(const Ring<PrimeField>& r) {
  Corpus<PrimeField> corpus(r);
  std::vector<Presentation<PrimeField>> out;
  for (const auto& recipe : corpus.catalogue()) out.push_back(corpus.build(recipe));
  return out;
}

}  // namespace

TEST_CASE("regularity examples") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int d = -4; d <= 4; ++d) CHECK(sheaf_regularity(O(r, {d})) == Regularity::finite(-d));
  }
  auto r = fp(3);
  // Ideal sheaf of the point (0:0:1): the module (x0, x1) as the image of S(-1)^2.
  GradedMap<PrimeField> syz(r, GradedFreeModule{{2}}, GradedFreeModule{{1, 1}},
                            {{parse_polynomial(r, "-x1"), parse_polynomial(r, "x0")}});
  CHECK(sheaf_regularity(Presentation<PrimeField>(syz)) == Regularity::finite(1));
  CHECK(sheaf_regularity(omega(r, 1)) == Regularity::finite(2));
  // Zero sheaf and a sheaf supported on a point.
  CHECK(sheaf_regularity(Presentation<PrimeField>::free(r, GradedFreeModule{})).is_minus_infinity());
  GradedMap<PrimeField> pt(r, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}},
                           {{parse_polynomial(r, "x0")}, {parse_polynomial(r, "x1")}});
  CHECK(sheaf_regularity(Presentation<PrimeField>(pt)).is_minus_infinity());
}

TEST_CASE("level examples") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int d = 0; d <= 3; ++d) CHECK(level(O(r, {d})).value == 0);
    auto minus_one = level(O(r, {-1}));
    CHECK(minus_one.value == 1);
    REQUIRE(minus_one.witnesses.size() == 1);
    CHECK(minus_one.witnesses[0] == LevelWitness{1, n - 1, 1});
    auto far = level(O(r, {-n - 1}));
    CHECK(far.value == n);
    // i = 0: h^n(O(-n-2)) = C(n+1, n).
    CHECK(far.witnesses.front() == LevelWitness{n, 0, n + 1});
    for (int a = -6; a <= 4; ++a) CHECK(level(O(r, {a})).value == oracle::level_line(n, a));
  }
  auto r = fp(3);
  auto om = level(omega(r, 1));
  CHECK(om.value == 1);
  CHECK(om.to_json().dump() == R"({"value":1,"witnesses":[{"h":3,"i":1,"q":1}]})");
  CHECK(level(O(r, {-1})).to_json().dump() == R"({"value":1,"witnesses":[{"h":1,"i":1,"q":1}]})");
}

TEST_CASE("level witnesses respect the grid") {
  auto r = fp(4);
  for (const auto& m : small_corpus(r)) {
    auto l = level(m);
    int best = 0;
    for (const auto& w : l.witnesses) {
      CHECK(w.q >= 1);
      CHECK(w.i >= 0);
      CHECK(w.q + w.i <= 3);
      CHECK(w.h > 0);
      best = std::max(best, w.q);
    }
    CHECK(l.value == best);
  }
}

TEST_CASE("degenerate module has level 0 and no witnesses") {
  auto r = fp(3);
  GradedMap<PrimeField> pt(r, GradedFreeModule{{1, 1, 1}}, GradedFreeModule{{0}},
                           {{parse_polynomial(r, "x0")}, {parse_polynomial(r, "x1")}, {parse_polynomial(r, "x2")}});
  auto l = level(Presentation<PrimeField>(pt));
  CHECK(l.value == 0);
  CHECK(l.witnesses.empty());
}

TEST_CASE("phi certificates") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int d = n; d <= n + 2; ++d) CHECK(phi_certificate(O(r, {d})).bound == 0);
    for (int d = -3; d <= 3; ++d) CHECK(phi_certificate(O(r, {d})).bound == level(O(r, {d - n})).value);
  }
  auto r = fp(3);
  CHECK(phi_certificate(O(r, {1})).bound == 1);
  auto cert = phi_certificate(twist(omega(r, 1), 2));
  CHECK(cert.bound == 1);
  CHECK(cert.to_json().dump() == R"({"bound":1,"witnesses":[{"h":3,"i":1,"q":1}]})");

  auto f2 = fp(3, 2);
  GradedMap<PrimeField> pt(f2, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}},
                           {{parse_polynomial(f2, "x0")}, {parse_polynomial(f2, "x1")}});
  CHECK_THROWS_AS(phi_certificate(Presentation<PrimeField>(pt)), NotLocallyFreeError);
}

TEST_CASE("Beilinson examples") {
  auto r = fp(3);
  auto o = beilinson_e1(O(r, {0}));
  for (int a = -2; a <= 0; ++a) {
    for (int b = 0; b <= 2; ++b) CHECK(o.at(a, b) == (a == 0 && b == 0 ? 1 : 0));
  }
  auto m1 = beilinson_e1(O(r, {-1}));
  for (int a = -2; a <= 0; ++a) {
    for (int b = 0; b <= 2; ++b) CHECK(m1.at(a, b) == (a == -1 && b == 1 ? 1 : 0));
  }
  // O(1): h^0(R_m(1)) = h^0(Omega^m(m+1)) gives 3, 3, 1 along row 0.
  auto p1 = beilinson_e1(O(r, {1}));
  CHECK(p1.at(0, 0) == 3);
  CHECK(p1.at(-1, 0) == oracle::bott(2, 1, 0, 2));
  CHECK(p1.at(-2, 0) == oracle::bott(2, 2, 0, 3));
  CHECK(p1.top_row() == 0);
  CHECK(p1.euler_identity(HilbertPolynomial(2, {{-1, 1}}), -5, 5));

  auto m3 = beilinson_e1(O(r, {-3}));
  CHECK(m3.top_row() <= 2);
  CHECK(m3.euler_identity(HilbertPolynomial(2, {{3, 1}}), -2, 2));
  CHECK(HilbertPolynomial(2, {{3, 1}})(0) == 1);
}

TEST_CASE("Beilinson entries are Bott numbers for line bundles") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int e = -n - 2; e <= n + 1; ++e) {
      auto t = beilinson_e1(O(r, {e}));
      for (int a = -n; a <= 0; ++a) {
        for (int b = 0; b <= n; ++b) CHECK(t.at(a, b) == oracle::bott(n, -a, b, e - a));
      }
    }
  }
}

TEST_CASE("amplitude probe examples") {
  auto r = fp(3);
  std::vector<int> twists{-3, -2, -1, 0};
  auto pos = amplitude_probe(O(r, {1}), ProbeKind::symmetric, 1, 5, twists);
  CHECK(pos.observed_bound == 0);
  CHECK_FALSE(pos.certified);
  CHECK(amplitude_probe(O(r, {-1}), ProbeKind::symmetric, 1, 5, twists).observed_bound == 2);
  std::vector<int> nonneg{-2, -1, 0};
  auto q = amplitude_probe(O(r, {0}), ProbeKind::q_power, 1, 3, nonneg, 2);
  CHECK(q.observed_bound == 0);
  // h^2(O(-3)) = 1 is seen by every pullback of O
  CHECK(amplitude_probe(O(r, {0}), ProbeKind::q_power, 1, 3, twists, 2).observed_bound == 2);
  CHECK(q.q == 2);
  CHECK(amplitude_probe(O(r, {0}), ProbeKind::q_power, 1, 1, twists).q == 32003);
  CHECK(amplitude_probe(O(r, {1}), ProbeKind::tensor, 1, 3, twists).observed_bound == 0);
  CHECK_THROWS_AS(amplitude_probe(O(r, {1}), ProbeKind::tensor, 1, 3, {}), DomainError);
  for (const auto& m : small_corpus(r)) {
    auto p = amplitude_probe(m, ProbeKind::tensor, 1, 2, {0});
    CHECK(p.observed_bound >= 0);
    CHECK(p.observed_bound <= 2);
  }
}

TEST_CASE("corpus properties from the level definition") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    std::vector<Presentation<PrimeField>> koszul;
    for (int m = 0; m <= n; ++m) koszul.push_back(koszul_R(r, m));
    for (const auto& f : small_corpus(r)) {
      SheafCohomology<PrimeField> coh(f);
      int lambda = level(coh).value;
      Regularity reg = sheaf_regularity(coh);
      // lambda = 0 iff 0-regular.
      CHECK((lambda == 0) == (reg <= Regularity::finite(0)));
      // h^j(F(-a)) = 0 for j > lambda + a.
      for (int a = 0; a <= n; ++a) {
        for (int j = lambda + a + 1; j <= n; ++j) CHECK(coh.h(j, -a) == 0);
      }
      // h^j(R_i x F) = 0 for j > lambda.
      for (int i = 0; i <= n; ++i) {
        SheafCohomology<PrimeField> t(tensor(koszul[i], f));
        for (int j = lambda + 1; j <= n; ++j) CHECK(t.h(j, 0) == 0);
      }
      // Beilinson rows above lambda vanish; Euler identity on [-2, 2].
      auto b = beilinson_e1(f, std::span<const Presentation<PrimeField>>(koszul));
      CHECK(b.top_row() <= lambda);
      CHECK(b.euler_identity(coh.hilbert_polynomial(), -2, 2));
    }
  }
}

TEST_CASE("level of a direct sum is the max") {
  auto r = fp(3);
  auto corpus = small_corpus(r);
  for (std::size_t a = 0; a < corpus.size(); a += 3) {
    for (std::size_t b = 1; b < corpus.size(); b += 4) {
      CHECK(level(direct_sum(corpus[a], corpus[b])).value ==
            std::max(level(corpus[a]).value, level(corpus[b]).value));
    }
  }
}
