#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "shfc/errors.hpp"
#include "shfc/linalg.hpp"
#include "shfc/strand.hpp"

using namespace shfc;

namespace {

Ring<PrimeField> fp(std::uint32_t p, int vars) { return Ring<PrimeField>(PrimeField(p), vars); }
Ring<RationalField> qq(int vars) { return Ring<RationalField>(RationalField(), vars); }

template <class K>
Polynomial<K> P(const Ring<K>& r, const char* s) {
  return parse_polynomial(r, s);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_string(6) == "-1");
  CHECK(f.from_decimal("100000000000000000000") == 2);  // 10^20 = 3^20 = 9 mod 7
  CHECK_THROWS_AS(PrimeField(8), DomainError);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("large prime field stays in machine words") {
  PrimeField f(2147483647u);
  auto a = f.from_int(2147483646);
  CHECK(f.mul(a, a) == 1);
  CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("polynomial arithmetic examples") {
  auto r2 = fp(2, 2);
  CHECK(poly_arith(PolyOp::mul, P(r2, "x0+x1"), P(r2, "x0+x1")) == P(r2, "x0^2+x1^2"));
  auto q = qq(2);
  CHECK(poly_arith(PolyOp::mul, P(q, "x0+x1"), P(q, "x0-x1")) == P(q, "x0^2-x1^2"));
  auto zero = poly_arith(PolyOp::add, P(q, "x0"), P(q, "-x0"));
  CHECK(zero.is_zero());
  CHECK(zero.size() == 0);
}

TEST_CASE("ring mismatch") {
  auto a = P(fp(5, 2), "x0");
  auto b = P(fp(7, 2), "x0");
  CHECK_THROWS_AS(poly_arith(PolyOp::add, a, b), RingMismatch);
  CHECK_THROWS_AS(a * P(fp(5, 3), "x0"), RingMismatch);
}

TEST_CASE("polynomial grammar") {
  auto q = qq(3);
  auto f = P(q, "3*x0^2*x1 - x2^3");
  CHECK(f.size() == 2);
  CHECK(f.is_homogeneous());
  CHECK(*f.degree() == 3);
  CHECK(P(q, " 3 * x0 ^2*x1-x2^3 ") == f);
  CHECK(P(q, "x0*x0") == P(q, "x0^2"));
  CHECK(P(q, "0").is_zero());
  CHECK(P(q, "-7") == Polynomial<RationalField>::constant(q, q.field().from_int(-7)));
  CHECK_THROWS_AS(P(q, "x3"), ParseError);
  CHECK_THROWS_AS(P(q, "x0 +"), ParseError);
  CHECK_THROWS_AS(P(q, "y0"), ParseError);
  try {
    P(q, "x0 + *x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
}

TEST_CASE("to_string parses back") {
  SplitMix64 rng(11);
  auto q = qq(4);
  auto f7 = fp(7, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = gen::polynomial(rng, q, static_cast<int>(rng.uniform(0, 4)), 5);
    CHECK(P(q, a.to_string().c_str()) == a);
    auto b = gen::polynomial(rng, f7, static_cast<int>(rng.uniform(0, 4)), 5);
    CHECK(P(f7, b.to_string().c_str()) == b);
  }
}

TEST_CASE("no stored zero coefficients; terms sorted by grevlex") {
  SplitMix64 rng(5);
  auto r = fp(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = gen::polynomial(rng, r, 3, 6) * gen::polynomial(rng, r, 2, 4);
    auto ts = f.terms();
    for (std::size_t k = 0; k < ts.size(); ++k) {
      CHECK(ts[k].coeff != 0);
      if (k > 0) CHECK(grevlex_compare(ts[k - 1].mono, ts[k].mono) > 0);
    }
  }
}

TEST_CASE("grevlex order") {
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  auto m = [](int a, int b, int c) {
    Monomial x;
    x.set(0, a);
    x.set(1, b);
    x.set(2, c);
    return x;
  };
  std::vector<Monomial> order{m(2, 0, 0), m(1, 1, 0), m(0, 2, 0), m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)};
  for (std::size_t k = 1; k < order.size(); ++k) CHECK(grevlex_compare(order[k - 1], order[k]) > 0);
  CHECK(grevlex_compare(m(0, 0, 1), m(5, 0, 0)) < 0);
}

TEST_CASE("binomial convention") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  for (int m = -3; m < 12; ++m) {
    for (int k = -2; k < 8; ++k) CHECK(binomial(m, k) == oracle::choose(m, k));
  }
}

TEST_CASE("graded map validates degrees") {
  auto r = qq(2);
  GradedFreeModule src{{1, 1}}, tgt{{0}};
  CHECK_NOTHROW(GradedMap<RationalField>(r, src, tgt, {{P(r, "x0")}, {P(r, "x1")}}));
  CHECK_THROWS_AS(GradedMap<RationalField>(r, src, tgt, {{P(r, "x0")}, {P(r, "x1^2")}}), InhomogeneousError);
  try {
    GradedMap<RationalField>(r, src, tgt, {{P(r, "x0")}, {P(r, "x1^2")}});
  } catch (const InhomogeneousError& e) {
    CHECK(e.column() == 1);
  }
}

TEST_CASE("strand basis examples") {
  auto b = strand_basis(3, GradedFreeModule{{0}}, 1);
  REQUIRE(b.size() == 3);
  CHECK(b[0].mono == Monomial::variable(0));
  CHECK(b[1].mono == Monomial::variable(1));
  CHECK(b[2].mono == Monomial::variable(2));
  CHECK(strand_basis(2, GradedFreeModule{{1, 1}}, 1).size() == 2);
  CHECK(strand_basis(3, GradedFreeModule{{0}}, -1).empty());
}

TEST_CASE("strand basis size is the free Hilbert function") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int nv = static_cast<int>(rng.uniform(2, 5));
    auto f = gen::free_module(rng, 4, -3, 3);
    for (int d = -4; d <= 6; ++d) {
      long long expected = 0;
      for (int a : f.degrees) expected += oracle::choose(nv - 1 + d - a, nv - 1);
      CHECK(static_cast<long long>(strand_basis(nv, f, d).size()) == expected);
      CHECK(strand_dimension(nv, f, d) == expected);
    }
  }
}

TEST_CASE("strand matrix examples") {
  auto r = qq(2);
  GradedMap<RationalField> phi(r, GradedFreeModule{{1, 1}}, GradedFreeModule{{0}}, {{P(r, "x0")}, {P(r, "x1")}});
  auto s1 = strand_matrix(phi, 1);
  CHECK(s1.entries.rows == 2);
  CHECK(s1.entries.cols == 2);
  CHECK(rank(r.field(), s1.entries) == 2);
  auto s0 = strand_matrix(phi, 0);
  CHECK(s0.entries.rows == 1);
  CHECK(s0.entries.cols == 0);

  auto r3 = qq(3);
  GradedMap<RationalField> kos(r3, GradedFreeModule{{2, 2, 2}}, GradedFreeModule{{1, 1, 1}},
                               {{P(r3, "-x1"), P(r3, "x0"), P(r3, "0")},
                                {P(r3, "-x2"), P(r3, "0"), P(r3, "x0")},
                                {P(r3, "0"), P(r3, "-x2"), P(r3, "x1")}});
  auto s2 = strand_matrix(kos, 2);
  CHECK(s2.entries.rows == 9);
  CHECK(s2.entries.cols == 3);
  CHECK(rank(r3.field(), s2.entries) == 3);
  CHECK(strand_rank(kos, 2) == 3);
}

TEST_CASE("rank examples") {
  PrimeField f5(5);
  DenseMatrix<PrimeField> id(f5, 2, 2);
  id.at(0, 0) = id.at(1, 1) = 1;
  CHECK(rank(f5, id) == 2);
  CHECK(rank(f5, DenseMatrix<PrimeField>(f5, 3, 4)) == 0);
  DenseMatrix<PrimeField> m(f5, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(f5, m) == 1);
}

TEST_CASE("sparse strand rank agrees with dense elimination") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = fp(trial % 2 == 0 ? 2 : 32003, static_cast<int>(rng.uniform(2, 4)));
    auto src = gen::free_module(rng, 4, 0, 3);
    auto tgt = gen::free_module(rng, 3, -1, 2);
    auto phi = gen::map(rng, r, src, tgt, static_cast<int>(rng.uniform(1, 3)));
    for (int d = -1; d <= 5; ++d) {
      auto s = strand_matrix(phi, d);
      CHECK(strand_rank(phi, d) == rank(r.field(), s.entries));
    }
  }
}

TEST_CASE("strand rank does not depend on generator order") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto r = qq(3);
    auto src = gen::free_module(rng, 4, 1, 3);
    auto tgt = gen::free_module(rng, 3, 0, 1);
    auto phi = gen::map(rng, r, src, tgt);
    std::vector<int> rows(tgt.rank()), cols(src.rank());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::reverse(rows.begin(), rows.end());
    std::rotate(cols.begin(), cols.begin() + 1, cols.end());
    GradedFreeModule psrc, ptgt;
    for (int c : cols) psrc.degrees.push_back(src.degrees[c]);
    for (int i : rows) ptgt.degrees.push_back(tgt.degrees[i]);
    std::vector<std::vector<Polynomial<RationalField>>> pc;
    for (int c : cols) {
      std::vector<Polynomial<RationalField>> col;
      for (int i : rows) col.push_back(phi.entry(i, c));
      pc.push_back(col);
    }
    GradedMap<RationalField> permuted(r, psrc, ptgt, pc);
    for (int d = 0; d <= 5; ++d) {
      CHECK(rank(r.field(), strand_matrix(phi, d).entries) == rank(r.field(), strand_matrix(permuted, d).entries));
    }
  }
}

TEST_CASE("strand of a composite is the product of strands") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto r = fp(101, 3);
    auto a = gen::free_module(rng, 3, 2, 4);
    auto b = gen::free_module(rng, 3, 1, 2);
    auto c = gen::free_module(rng, 2, 0, 1);
    auto psi = gen::map(rng, r, a, b);
    auto phi = gen::map(rng, r, b, c);
    auto comp = phi.compose(psi);
    for (int d = -6; d <= 6; ++d) {
      auto lhs = strand_matrix(comp, d).entries;
      auto rhs = multiply(r.field(), strand_matrix(phi, d).entries, strand_matrix(psi, d).entries);
      CHECK(lhs.rows == rhs.rows);
      CHECK(lhs.cols == rhs.cols);
      CHECK(lhs.data == rhs.data);
    }
  }
}

TEST_CASE("dual map is the transpose with negated degrees") {
  auto r = qq(2);
  GradedMap<RationalField> phi(r, GradedFreeModule{{1, 2}}, GradedFreeModule{{0}}, {{P(r, "x0")}, {P(r, "x1^2")}});
  auto d = phi.dual();
  CHECK(d.source().degrees == std::vector<int>{0});
  CHECK(d.target().degrees == std::vector<int>{-1, -2});
  CHECK(d.entry(1, 0) == P(r, "x1^2"));
  CHECK(d.dual() == phi);
}
