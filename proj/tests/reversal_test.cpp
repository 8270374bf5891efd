#include <gtest/gtest.h>

#include <thread>

#include "linrec/error.hpp"
#include "linrec/reversal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace linrec {
namespace {

using testing::Gen;
using oracle::Vec;

const RingSpec Z = RingSpec::integers();

LinRecSeq scalar(const Poly& f, std::vector<long> init) {
  return LinRecSeq(f, std::vector<Integer>(init.begin(), init.end()));
}

Vec bi_scalars(const BiRecSeq& w, std::int64_t from, std::int64_t to) {
  return oracle::scalars(bi_terms(w, from, to));
}

/// Inverse of a unit by exhaustive search (Z/m) or by sign (Z).
Integer brute_inverse(const Integer& a, const Integer& m) {
  if (m == 0) return a;  // only +-1 are units
  for (Integer b = 1; b < m; ++b) {
    if (oracle::canon(a * b, m) == 1) return b;
  }
  ADD_FAILURE() << a << " is not a unit mod " << m;
  return 0;
}

/// Values at from..to (from <= 0) by solving for the lowest unknown index one
/// step at a time, written independently of the library's memo.
Vec backsolve(const Poly& q, const Vec& init, std::int64_t from, std::int64_t to, const Integer& m) {
  const auto l = static_cast<std::int64_t>(init.size());
  const auto& a = q.coeffs();
  const Integer inv = brute_inverse(oracle::canon(a[0], m), m);
  const std::int64_t hi = std::max(to, l - 1);
  // window[k - from] holds w(k)
  Vec window(static_cast<std::size_t>(hi - from + 1));
  const Vec fwd = oracle::recurrence(a, init, static_cast<std::size_t>(std::max<std::int64_t>(hi + 1, l)), m);
  for (std::int64_t k = 0; k <= hi; ++k) window[static_cast<std::size_t>(k - from)] = fwd[static_cast<std::size_t>(k)];
  for (std::int64_t z = -1; z >= from; --z) {
    Integer s = 0;
    for (std::int64_t i = 1; i <= l; ++i) s += a[static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(z + i - from)];
    window[static_cast<std::size_t>(z - from)] = oracle::canon(-s * inv, m);
  }
  return Vec(window.begin(), window.begin() + (to - from + 1));
}

// ---------------------------------------------------------------- examples

TEST(Reverse, FibonacciExtendsToNegativeIndices) {
  const BiRecSeq rf = reverse(fibonacci(Z));
  EXPECT_EQ(bi_scalars(rf, -8, 4), (Vec{-21, 13, -8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3}));
  EXPECT_EQ(bi_term(rf, -8), Value{-21});
  EXPECT_EQ(bi_term(rf, 10), Value{55});
}

TEST(Reverse, RejectsNonReversible) {
  EXPECT_THROW(reverse(scalar(Poly(Z, {0, -1, 1}), {1, 1})), DomainError);
  EXPECT_THROW(reverse(scalar(Poly(Z, {-2, 1}), {1})), DomainError);
  EXPECT_THROW(BiRecSeq(Poly(RingSpec::integers_mod(4), {2, 1}), std::vector<Integer>{1}), DomainError);
  EXPECT_THROW(BiRecSeq(Poly(Z, {-1, -1, 1}), std::vector<Integer>{1}), DomainError);
}

TEST(Reverse, ModularExample) {
  // x^2 + 2x + 1 over Z/9 has unit constant term.
  const auto r9 = RingSpec::integers_mod(9);
  const LinRecSeq u = scalar(Poly(r9, {1, 2, 1}), {4, 7});
  const BiRecSeq w = reverse(u);
  EXPECT_EQ(bi_scalars(w, -6, 5), backsolve(u.charpoly(), {4, 7}, -6, 5, 9));
}

TEST(BiActionTerm, Examples) {
  const BiRecSeq rf = reverse(fibonacci(Z));
  for (std::int64_t z = -10; z <= 10; ++z) {
    EXPECT_EQ(bi_action_term(Poly(Z, {-1, -1, 1}), rf, z), Value{0});
    EXPECT_EQ(bi_action_term(Poly::monomial(Z, 1), rf, z), bi_term(rf, z + 1));
  }
  EXPECT_EQ(bi_action_term(Poly(Z), rf, 3), Value{0});
}

TEST(Gamma, DegenerateExampleOverZ4) {
  const auto r4 = RingSpec::integers_mod(4);
  const LinRecSeq u = scalar(Poly(r4, {0, 3, 1}), {2, 1});  // x(x-1)
  const BiRecSeq g = gamma(u);
  EXPECT_EQ(g.charpoly(), Poly(r4, {3, 1}));
  EXPECT_EQ(bi_scalars(g, -5, 5), Vec(11, 1));
}

TEST(Gamma, OverZ) {
  // x(x-1): unit cofactor, allowed.
  const BiRecSeq g = gamma(scalar(Poly(Z, {0, -1, 1}), {5, 3}));
  EXPECT_EQ(bi_scalars(g, -3, 3), Vec(7, 3));
  // x(x-2): cofactor constant -2 is not a unit in Z.
  EXPECT_THROW(gamma(scalar(Poly(Z, {0, -2, 1}), {5, 3})), UnsupportedRing);
  // Reversible input is plain reversal.
  EXPECT_EQ(bi_scalars(gamma(fibonacci(Z)), -8, 4), bi_scalars(reverse(fibonacci(Z)), -8, 4));
}

TEST(Gamma, PureXPowerGivesZeroBisequence) {
  const auto r4 = RingSpec::integers_mod(4);
  const BiRecSeq g = gamma(scalar(Poly::monomial(r4, 3), {1, 2, 3}));
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(bi_scalars(g, -3, 3), Vec(7, 0));
  const LinRecSeq b = beta(g);
  EXPECT_EQ(b.charpoly(), Poly::x_minus(r4, 1));
  EXPECT_EQ(oracle::scalars(terms(b, 5)), Vec(5, 0));
}

TEST(Beta, RestrictsToNonNegativeIndices) {
  const BiRecSeq rf = reverse(fibonacci(Z));
  const LinRecSeq b = beta(rf);
  EXPECT_EQ(b.charpoly(), fibonacci(Z).charpoly());
  EXPECT_EQ(oracle::scalars(terms(b, 10)), bi_scalars(rf, 0, 9));
}

TEST(Decompose, WorkedExampleOverZ4) {
  const auto r4 = RingSpec::integers_mod(4);
  const Decomposition d = decompose(scalar(Poly(r4, {0, 3, 1}), {2, 1}));
  EXPECT_EQ(d.degenerating.charpoly(), Poly::monomial(r4, 1));
  EXPECT_EQ(oracle::scalars(d.degenerating.init()), (Vec{1}));
  EXPECT_EQ(d.reversible.charpoly(), Poly(r4, {3, 1}));
  EXPECT_EQ(oracle::scalars(d.reversible.init()), (Vec{1}));
}

TEST(Decompose, RejectsZ) { EXPECT_THROW(decompose(fibonacci(Z)), UnsupportedRing); }

TEST(Decompose, ReversibleInputHasZeroDegeneratingPart) {
  const auto r12 = RingSpec::integers_mod(12);
  const Decomposition d = decompose(fibonacci(r12));
  EXPECT_EQ(d.degenerating.charpoly(), Poly::monomial(r12, 1));
  EXPECT_EQ(oracle::scalars(d.degenerating.init()), (Vec{0}));
  EXPECT_EQ(oracle::scalars(terms(d.reversible, 30)), oracle::recurrence(fibonacci(r12), 30));
}

TEST(AntipodeHadamard, Fibonacci) {
  const LinRecSeq s = antipode_hadamard(fibonacci(Z));
  EXPECT_EQ(s.charpoly(), Poly(Z, {-1, 1, 1}));
  const Vec F = oracle::recurrence(fibonacci(Z), 25);
  const Vec S = oracle::scalars(terms(s, 25));
  for (std::size_t n = 0; n < 25; ++n) EXPECT_EQ(S[n], n % 2 ? F[n] : Integer(-F[n])) << n;
}

TEST(AntipodeHadamard, IsAnInvolution) {
  const auto r9 = RingSpec::integers_mod(9);
  const LinRecSeq u = scalar(Poly(r9, {2, 0, 5, 1}), {1, 4, 8});
  EXPECT_EQ(terms(antipode_hadamard(antipode_hadamard(u)), 30), terms(u, 30));
}

TEST(BiHadamard, SquareOfReversedFibonacci) {
  const BiRecSeq rf = reverse(fibonacci(Z));
  const BiRecSeq sq = bi_hadamard(rf, rf);
  EXPECT_EQ(bi_scalars(sq, -3, 3), (Vec{4, 1, 1, 0, 1, 1, 4}));
  EXPECT_EQ(sq.charpoly().degree(), 4);
  const Vec a = bi_scalars(rf, -20, 20);
  const Vec b = bi_scalars(sq, -20, 20);
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(b[i], a[i] * a[i]);
}

TEST(BiOnes, IsConstant) {
  EXPECT_EQ(bi_scalars(bi_ones(Z), -5, 5), Vec(11, 1));
  const BiRecSeq rf = reverse(fibonacci(Z));
  EXPECT_EQ(bi_scalars(bi_hadamard(rf, bi_ones(Z)), -10, 10), bi_scalars(rf, -10, 10));
}

TEST(BiRecSeq, SharedMemoIsThreadSafe) {
  const auto r = RingSpec::integers_mod(Integer(1) << 61);
  const BiRecSeq w = reverse(scalar(Poly(r, {1, 3, 5, 7, 1}), {1, 2, 3, 4}));
  const Vec want = backsolve(w.charpoly(), {1, 2, 3, 4}, -3000, 0, Integer(1) << 61);
  std::vector<std::thread> pool;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t, copy = w] {
      bool good = true;
      for (std::int64_t z = -3000 + t; z <= 0; z += 8) {
        good = good && bi_term(copy, z)[0] == want[static_cast<std::size_t>(z + 3000)];
      }
      ok[static_cast<std::size_t>(t)] = good;
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(ok, std::vector<int>(8, 1));
}

// ---------------------------------------------------------------- properties

TEST(ReversalProperties, ReverseAgreesOnNaturalsAndIsAnnihilated) {
  Gen g(50);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 30; ++trial) {
      const Poly f = g.reversible(r, static_cast<std::size_t>(g.range(1, 5)));
      const LinRecSeq u = g.seq(f);
      const BiRecSeq w = reverse(u);
      ASSERT_EQ(bi_scalars(w, 0, 127), oracle::recurrence(u, 128));
      const auto& a = f.coeffs();
      const Vec v = bi_scalars(w, -64, 63 + f.degree());
      for (std::size_t z = 0; z < 128; ++z) {
        Integer s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[z + i];
        ASSERT_EQ(oracle::canon(s, m), 0) << "z=" << static_cast<long>(z) - 64;
      }
    }
  }
}

TEST(ReversalProperties, UniqueBackwardExtension) {
  Gen g(51);
  for (const auto& r : testing::test_rings()) {
    for (int trial = 0; trial < 30; ++trial) {
      const Poly f = g.reversible(r, static_cast<std::size_t>(g.range(1, 5)));
      const LinRecSeq u = g.seq(f);
      ASSERT_EQ(bi_scalars(reverse(u), -64, 10),
                backsolve(f, oracle::scalars(u.init()), -64, 10, oracle::mod_of(r)));
    }
  }
}

TEST(ReversalProperties, DecomposeRecombinesAndClassifies) {
  Gen g(52);
  for (long modulus : {4L, 9L, 12L, 8L, 10L}) {
    const auto r = RingSpec::integers_mod(modulus);
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 60; ++trial) {
      Poly f = g.monic_up_to(r, 4);
      if (g.coin()) f = f * Poly::monomial(r, static_cast<std::size_t>(g.range(1, 3)));
      const LinRecSeq u = g.seq(f);
      const Decomposition d = decompose(u);
      ASSERT_EQ(d.degenerating.charpoly(), Poly::monomial(r, static_cast<std::size_t>(d.degenerating.charpoly().degree())));
      ASSERT_TRUE(is_degenerating(d.degenerating).degenerating);
      ASSERT_TRUE(is_reversible(d.reversible.charpoly()));
      const Vec a = oracle::recurrence(u, 80);
      const Vec b = oracle::recurrence(d.degenerating, 80);
      const Vec c = oracle::recurrence(d.reversible, 80);
      for (std::size_t n = 0; n < 80; ++n) ASSERT_EQ(a[n], oracle::canon(b[n] + c[n], m)) << to_string(f) << " n=" << n;
      // The reversible part is the restriction of gamma(u); a pure x-power
      // leaves the zero bisequence, restricted with x - 1.
      const XSplit s = split_x_part(f);
      ASSERT_EQ(d.reversible.charpoly(), s.q.degree() == 0 ? Poly::x_minus(r, 1) : s.q);
    }
  }
}

TEST(ReversalProperties, GammaAgreesFromDAndPreservesAnnihilators) {
  Gen g(53);
  for (const auto& r : testing::modular_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 40; ++trial) {
      Poly f = g.monic_up_to(r, 3) * Poly::monomial(r, static_cast<std::size_t>(g.range(0, 2)));
      const LinRecSeq u = g.seq(f);
      const BiRecSeq w = gamma(u);
      const XSplit s = split_x_part(f);
      const Vec a = oracle::recurrence(u, s.d + 40);
      const Vec b = bi_scalars(w, static_cast<std::int64_t>(s.d), static_cast<std::int64_t>(s.d) + 39);
      for (std::size_t n = 0; n < 40; ++n) ASSERT_EQ(b[n], a[s.d + n]);
      // Any g with g -> u = 0 also kills gamma(u) on all of Z.
      const Poly h = f * g.poly(r, 2);
      ASSERT_TRUE(annihilates(h, u));
      for (std::int64_t z = -30; z <= 30; ++z) ASSERT_EQ(bi_action_term(h, w, z)[0], 0) << z;
      (void)m;
    }
  }
}

TEST(ReversalProperties, GammaOfBetaIsIdentity) {
  Gen g(54);
  for (const auto& r : testing::test_rings()) {
    for (int trial = 0; trial < 30; ++trial) {
      const Poly q = g.reversible(r, static_cast<std::size_t>(g.range(1, 4)));
      const BiRecSeq w(q, g.seq(q).init());
      ASSERT_EQ(bi_terms(gamma(beta(w)), -40, 40), bi_terms(w, -40, 40));
    }
  }
}

TEST(ReversalProperties, HadamardAntipodeAxiom) {
  // sum_t S(left_t) * right_t = eps(u) * 1 termwise.
  Gen g(55);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly f = g.reversible(r, static_cast<std::size_t>(g.range(1, 4)));
      const LinRecSeq u = g.seq(f);
      const Integer eps = counit(u)[0];
      const auto pairs = delta(u);
      for (std::uint64_t n = 0; n < 32; ++n) {
        Integer s = 0;
        for (const auto& p : pairs) s += term(antipode_hadamard(p.left), n)[0] * term(p.right, n)[0];
        ASSERT_EQ(oracle::canon(s, m), eps) << n;
      }
    }
  }
}

TEST(ReversalProperties, AntipodeHadamardReadsBackwards) {
  Gen g(56);
  for (const auto& r : testing::test_rings()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Poly f = g.reversible(r, static_cast<std::size_t>(g.range(1, 4)));
      const LinRecSeq u = g.seq(f);
      const Vec back = bi_scalars(reverse(u), -30, 0);
      const Vec s = oracle::scalars(terms(antipode_hadamard(u), 31));
      for (std::size_t n = 0; n <= 30; ++n) ASSERT_EQ(s[n], back[30 - n]);
    }
  }
}

}  // namespace
}  // namespace linrec
