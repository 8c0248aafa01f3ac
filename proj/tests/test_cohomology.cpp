#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "shfc/cohomology.hpp"
#include "shfc/constructions.hpp"
#include "shfc/errors.hpp"
#include "shfc/random.hpp"

using namespace shfc;

namespace {

Ring<PrimeField> fp(int vars) { return Ring<PrimeField>(PrimeField(32003), vars); }

template <class K>
Presentation<K> O(const Ring<K>& r, std::vector<int> twists) {
  return line_bundle_sum(r, std::span<const int>(twists));
}

}  // namespace

TEST_CASE("the Bott oracle is consistent with the Euler sequence recursion") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int k = -n - 6; k <= n + 6; ++k) {
        long long chi = 0;
        for (int q = 0; q <= n; ++q) chi += (q % 2 == 0 ? 1 : -1) * oracle::bott(n, p, q, k);
        CHECK(chi == oracle::chi_omega(n, p, k));
      }
    }
  }
  // Known values.
  CHECK(oracle::bott(2, 1, 0, 2) == 3);
  CHECK(oracle::bott(2, 1, 2, -2) == 3);
  CHECK(oracle::bott(2, 1, 1, 0) == 1);
  CHECK(oracle::bott(3, 2, 0, 3) == 4);
}

TEST_CASE("ext strand examples") {
  Ring<RationalField> q3(RationalField(), 3);
  auto s = Presentation<RationalField>::free(q3, GradedFreeModule{{0}});
  CHECK(ext_strand_dim(s, 0, 0) == 1);

  Ring<RationalField> q2(RationalField(), 2);
  GradedMap<RationalField> rel(q2, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}},
                               {{parse_polynomial(q2, "x0")}, {parse_polynomial(q2, "x1")}});
  // Ext^2(k, S) = k(2), dual of F_2 = S(-2), so it sits in degree -2.
  CHECK(ext_strand_dim(Presentation<RationalField>(rel), 2, -2) == 1);
  CHECK(ext_strand_dim(Presentation<RationalField>(rel), 2, 2) == 0);

  auto s1 = Presentation<RationalField>::free(q3, GradedFreeModule{{1}});
  for (int j = 1; j <= 3; ++j) {
    for (int d = -6; d <= 6; ++d) CHECK(ext_strand_dim(s1, j, d) == 0);
  }
  CHECK_THROWS_AS(ext_strand_dim(s1, 4, 0), DomainError);
}

TEST_CASE("sheaf cohomology examples") {
  auto r2 = fp(2);
  CHECK(sheaf_cohomology_dim(O(r2, {-2}), 1, 0) == 1);
  auto r3 = fp(3);
  CHECK(sheaf_cohomology_dim(O(r3, {1}), 0, 0) == 3);
  CHECK(sheaf_cohomology_dim(omega(r3, 1), 1, 0) == 1);
  CHECK_THROWS_AS(sheaf_cohomology_dim(O(r3, {0}), 3, 0), DomainError);
  CHECK_THROWS_AS(sheaf_cohomology_dim(O(r3, {0}), -1, 0), DomainError);
}

TEST_CASE("cohomology table examples") {
  auto r2 = fp(2);
  auto t = cohomology_table(O(r2, {0}), -3, 1);
  CHECK(t.h[0] == std::vector<long long>{0, 0, 0, 1, 2});
  CHECK(t.h[1] == std::vector<long long>{2, 1, 0, 0, 0});
  CHECK(t.to_grid() == " d -3 -2 -1  0  1\nh1  2  1  0  0  0\nh0  0  0  0  1  2\n");
  CHECK(CohomologyTable::from_json(t.to_json()) == t);
  CHECK(t.to_json().dump() == R"({"h":[[0,0,0,1,2],[2,1,0,0,0]],"n":1,"window":[-3,1]})");

  auto r3 = fp(3);
  auto zero = cohomology_table(Presentation<PrimeField>::free(r3, GradedFreeModule{}), -4, 4);
  for (const auto& row : zero.h) {
    for (long long v : row) CHECK(v == 0);
  }

  auto canonical = cohomology_table(O(r3, {-3}), 0, 0);
  CHECK(canonical.at(0, 0) == 0);
  CHECK(canonical.at(1, 0) == 0);
  CHECK(canonical.at(2, 0) == 1);
}

TEST_CASE("line bundle oracle examples") {
  std::vector<int> a{-2};
  CHECK(line_bundle_oracle(1, a, 1, 0) == 1);
  std::vector<int> b{0, -3};
  CHECK(line_bundle_oracle(2, b, 2, 0) == 1);
  std::vector<int> c{5, -7, 1};
  for (int d = -5; d <= 5; ++d) {
    CHECK(line_bundle_oracle(3, c, 1, d) == 0);
    CHECK(line_bundle_oracle(3, c, 2, d) == 0);
  }
}

TEST_CASE("engine matches the line bundle closed form") {
  SplitMix64 rng(101);
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> twists(rng.uniform(1, 3));
      for (int& a : twists) a = static_cast<int>(rng.uniform(-4, 4));
      SheafCohomology<PrimeField> coh(O(r, twists));
      for (int i = 0; i <= n; ++i) {
        for (int d = -n - 4; d <= n + 4; ++d) {
          CHECK(coh.h(i, d) == oracle::line_bundles(n, twists, i, d));
        }
      }
    }
  }
}

TEST_CASE("Serre duality and vanishing for line bundles") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    SheafCohomology<PrimeField> coh(O(r, {0}));
    for (int d = -n - 5; d <= n + 5; ++d) {
      for (int i = 0; i <= n; ++i) CHECK(coh.h(i, d) == coh.h(n - i, -d - n - 1));
      // Ext beyond the resolution and in negative degree vanish.
      CHECK(coh.ext_dim(-1, d) == 0);
      CHECK(coh.ext_dim(n + 2, d) == 0);
    }
  }
}

TEST_CASE("Bott formula for Omega^p built from Koszul kernels") {
  for (int n = 1; n <= 3; ++n) {
    auto r = fp(n + 1);
    for (int p = 0; p <= n; ++p) {
      SheafCohomology<PrimeField> coh(omega(r, p));
      for (int k = -n - 4; k <= n + 4; ++k) {
        for (int q = 0; q <= n; ++q) {
          INFO("n=" << n << " p=" << p << " q=" << q << " k=" << k);
          CHECK(coh.h(q, k) == oracle::bott(n, p, q, k));
        }
      }
    }
  }
}

TEST_CASE("Euler characteristic equals the Hilbert polynomial") {
  auto r = fp(3);
  std::vector<Presentation<PrimeField>> corpus{O(r, {0, -1}), omega(r, 1), omega(r, 2), koszul_R(r, 1),
                                               q_power_pullback(omega(r, 1), 2), sym_power(omega(r, 1), 2)};
  GradedMap<PrimeField> point(r, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}},
                              {{parse_polynomial(r, "x0")}, {parse_polynomial(r, "x1")}});
  corpus.emplace_back(point);
  for (const auto& m : corpus) {
    SheafCohomology<PrimeField> coh(m);
    auto t = coh.table(-7, 7);
    CHECK(t.euler_matches(coh.hilbert_polynomial()));
  }
}

TEST_CASE("concurrent queries agree with sequential ones") {
  auto r = fp(3);
  SheafCohomology<PrimeField> shared(omega(r, 1));
  SheafCohomology<PrimeField> fresh(omega(r, 1));
  std::vector<long long> results(3 * 21);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t k = t; k < results.size(); k += 4) {
        results[k] = shared.h(static_cast<int>(k / 21), static_cast<int>(k % 21) - 10);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t k = 0; k < results.size(); ++k) {
    CHECK(results[k] == fresh.h(static_cast<int>(k / 21), static_cast<int>(k % 21) - 10));
  }
}
