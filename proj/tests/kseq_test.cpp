#include <gtest/gtest.h>

#include <array>
#include <map>

#include "linrec/error.hpp"
#include "linrec/kseq.hpp"
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

Integer at(const KSeq& w, const MultiIndex& n) { return kterm(w, n)[0]; }

KSeq random_kseq(Gen& g, const RingSpec& r, std::size_t k, std::size_t maxdeg, std::size_t dim = 1) {
  std::vector<Poly> elem;
  std::size_t count = 1;
  for (std::size_t j = 0; j < k; ++j) {
    elem.push_back(g.monic(r, static_cast<std::size_t>(g.range(1, static_cast<std::int64_t>(maxdeg)))));
    count *= static_cast<std::size_t>(elem.back().degree());
  }
  std::vector<Value> values;
  for (std::size_t i = 0; i < count; ++i) values.push_back(g.value(r, dim));
  return KSeq(std::move(elem), std::move(values));
}

/// Values on [0, extent) of the sequence with the given polyhedron values,
/// filled by the one-axis recurrences only: whenever n_j >= l_j, use
///   w(n) = -sum_{i<l_j} a_i w(n - (l_j - i) e_j).
class NaiveGrid {
 public:
  NaiveGrid(const KSeq& w, std::size_t component) : w_(w), c_(component), m_(oracle::mod_of(w.ring())) {}

  Integer operator()(const MultiIndex& n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    Integer v;
    std::size_t j = 0;
    while (j < n.size() && n[j] < w_.extents()[j]) ++j;
    if (j == n.size()) {
      // Inside the polyhedron: find the value by scanning the chain.
      for (std::size_t p = 0; p < w_.chain().size(); ++p) {
        if (w_.chain()[p] == n) v = w_.values()[p][c_];
      }
    } else {
      const auto& a = w_.elem()[j].coeffs();
      const auto l = w_.extents()[j];
      Integer s = 0;
      for (std::int64_t i = 0; i < l; ++i) {
        MultiIndex back = n;
        back[j] -= l - i;
        s -= a[static_cast<std::size_t>(i)] * (*this)(back);
      }
      v = oracle::canon(s, m_);
    }
    memo_.emplace(n, v);
    return v;
  }

 private:
  const KSeq& w_;
  std::size_t c_;
  Integer m_;
  std::map<MultiIndex, Integer> memo_;
};

template <class F>
void each_point(const MultiIndex& lo, const MultiIndex& hi, F&& f) {
  MultiIndex n = lo;
  while (true) {
    f(n);
    std::size_t j = n.size();
    while (j > 0) {
      --j;
      if (++n[j] <= hi[j]) break;
      n[j] = lo[j];
      if (j == 0) return;
    }
  }
}

// ---------------------------------------------------------------- chain

TEST(LexChain, Examples) {
  using std::strong_ordering;
  EXPECT_EQ(lex_cmp({0, 1}, {1, 0}), strong_ordering::less);
  EXPECT_EQ(lex_cmp({1, 0}, {0, 1}), strong_ordering::greater);
  EXPECT_EQ(lex_cmp({2, 0}, {0, 1}), strong_ordering::greater);
  EXPECT_EQ(lex_cmp({1, 1}, {1, 1}), strong_ordering::equal);
  EXPECT_THROW((void)lex_cmp({1}, {1, 1}), DomainError);

  EXPECT_EQ(polyhedron_chain({2, 2}), (std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(polyhedron_chain({2, 3}),
            (std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {1, 2}}));
  EXPECT_EQ(polyhedron_chain({3}), (std::vector<MultiIndex>{{0}, {1}, {2}}));
  EXPECT_THROW(polyhedron_chain({2, 0}), DomainError);
}

TEST(LexChain, IsAGradedStrictTotalOrderOnTheBox) {
  Gen g(60);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = static_cast<std::size_t>(g.range(1, 4));
    MultiIndex l(k);
    std::size_t size = 1;
    for (auto& e : l) {
      e = g.range(1, 4);
      size *= static_cast<std::size_t>(e);
    }
    const auto chain = polyhedron_chain(l);
    ASSERT_EQ(chain.size(), size);
    for (std::size_t p = 0; p + 1 < chain.size(); ++p) {
      ASSERT_EQ(lex_cmp(chain[p], chain[p + 1]), std::strong_ordering::less);
      ASSERT_EQ(lex_cmp(chain[p + 1], chain[p]), std::strong_ordering::greater);
      std::int64_t a = 0, b = 0;
      for (std::size_t j = 0; j < k; ++j) {
        a += chain[p][j];
        b += chain[p + 1][j];
      }
      ASSERT_LE(a, b);
    }
    for (const auto& i : chain) {
      for (std::size_t j = 0; j < k; ++j) {
        ASSERT_GE(i[j], 0);
        ASSERT_LT(i[j], l[j]);
      }
    }
    // Transitivity on random triples of lattice points.
    for (int t = 0; t < 50; ++t) {
      MultiIndex a(k), b(k), c(k);
      for (std::size_t j = 0; j < k; ++j) {
        a[j] = g.range(-3, 3);
        b[j] = g.range(-3, 3);
        c[j] = g.range(-3, 3);
      }
      if (lex_cmp(a, b) < 0 && lex_cmp(b, c) < 0) ASSERT_TRUE(lex_cmp(a, c) < 0);
      ASSERT_EQ(lex_cmp(a, b) == 0, a == b);
    }
  }
}

// ---------------------------------------------------------------- construction

TEST(KSeq, InvariantsAreEnforced) {
  const Poly f(Z, {-1, -1, 1});
  EXPECT_THROW(KSeq({}, std::vector<Integer>{}), DomainError);
  EXPECT_THROW(KSeq({f, f}, std::vector<Integer>{1, 2, 3}), DomainError);
  EXPECT_THROW(KSeq({f, Poly(Z, {1, 2})}, std::vector<Integer>{1, 2}), DomainError);
  EXPECT_THROW(KSeq({f, Poly(RingSpec::integers_mod(3), {1, 1})}, std::vector<Integer>{1, 2}), RingMismatch);
  const KSeq w({f, f}, std::vector<Integer>{1, 2, 3, 4});
  EXPECT_EQ(w.k(), 2u);
  EXPECT_EQ(w.extents(), (MultiIndex{2, 2}));
  EXPECT_EQ(w.value_at({1, 0}), Value{3});
  EXPECT_THROW((void)w.value_at({2, 0}), DomainError);
  EXPECT_THROW((void)kterm(w, {-1, 0}), DomainError);
  EXPECT_THROW((void)kterm(w, {1}), DomainError);
}

TEST(KSeq, ImpulseAndCounit) {
  const Poly f(Z, {-1, -1, 1});
  const KSeq e = k_impulse({f, f}, {1, 0});
  EXPECT_EQ(oracle::scalars(e.values()), (Vec{0, 0, 1, 0}));
  EXPECT_THROW(k_impulse({f, f}, {2, 0}), DomainError);
  EXPECT_EQ(k_counit(KSeq({f, f}, std::vector<Integer>{7, 2, 3, 4})), Value{7});
}

// ---------------------------------------------------------------- separable sequences

TEST(SepSum, AxisPolynomials) {
  const Poly a(Z, {2, -3, 1});  // (x-2)(x-1)
  const Poly b(Z, {1, -2, 1});  // (x-1)^2
  EXPECT_EQ(sep_sum_axis_poly(a), a);
  EXPECT_EQ(sep_sum_axis_poly(b), b);
  EXPECT_EQ(sep_sum_axis_poly(Poly::x_minus(Z, 2)), a);
  EXPECT_EQ(sep_sum_axis_poly(Poly(Z, {-1, -1, 1})), Poly(Z, {-1, -1, 1}) * Poly::x_minus(Z, 1));
}

TEST(SepSum, Examples) {
  const LinRecSeq u1 = scalar(Poly(Z, {2, -3, 1}), {0, 3});  // 3(2^n - 1)
  const LinRecSeq u2 = arithmetic(Z, 5, -2);
  const KSeq s = sep_sum({u1, u2});
  EXPECT_EQ(s.elem()[0], Poly(Z, {2, -3, 1}));
  EXPECT_EQ(s.elem()[1], Poly(Z, {1, -2, 1}));
  const Vec a = oracle::recurrence(u1, 10), b = oracle::recurrence(u2, 10);
  for (std::int64_t i = 0; i < 10; ++i) {
    for (std::int64_t j = 0; j < 10; ++j) ASSERT_EQ(at(s, {i, j}), a[i] + b[j]);
  }
  const KSeq f = sep_sum({fibonacci(Z), fibonacci(Z)});
  EXPECT_EQ(at(f, {3, 4}), 5);
  EXPECT_THROW(sep_sum({}), DomainError);
  EXPECT_THROW(sep_sum({fibonacci(Z), fibonacci(RingSpec::integers_mod(5))}), RingMismatch);
}

TEST(SepProduct, FibonacciExample) {
  const KSeq p = sep_product({fibonacci(Z), fibonacci(Z)});
  EXPECT_EQ(at(p, {3, 4}), 6);
  EXPECT_EQ(k_reverse_term(p, {-4, -4}), Value{9});
  EXPECT_EQ(k_reverse_term(p, {-3, 5}), Value{10});
  EXPECT_THROW(sep_product({zero_sequence(Z, 2)}), DomainError);
}

TEST(KShift, AxisPolynomialsAnnihilate) {
  const KSeq p = sep_product({fibonacci(Z), arithmetic(Z, 1, 1)});
  for (std::size_t j = 0; j < 2; ++j) {
    const KSeq z = kshift(axis_poly(p.elem()[j], j, 2), p);
    EXPECT_EQ(oracle::scalars(kgrid(z, {6, 6})), Vec(36, 0));
  }
  const KSeq sx = kshift({{{1, 0}, Z.one()}}, p);
  EXPECT_EQ(at(sx, {3, 4}), at(p, {4, 4}));
  EXPECT_THROW(axis_poly(Poly(Z, {1, 1}), 2, 2), DomainError);
}

TEST(KProducts, SeparableFactorsCombineAxiswise) {
  const LinRecSeq f = fibonacci(Z), a = arithmetic(Z, 2, 3), gm = geometric(Z, 1, 2), o = ones(Z);
  const KSeq u = sep_product({f, a}), v = sep_product({gm, o});
  const KSeq had = k_hadamard(u, v);
  const KSeq hur = k_hurwitz(u, v);
  const KSeq had_ref = sep_product({hadamard(f, gm), hadamard(a, o)});
  const KSeq hur_ref = sep_product({hurwitz(f, gm), hurwitz(a, o)});
  EXPECT_EQ(kgrid(had, {7, 7}), kgrid(had_ref, {7, 7}));
  EXPECT_EQ(kgrid(hur, {7, 7}), kgrid(hur_ref, {7, 7}));
}

// ---------------------------------------------------------------- properties

TEST(KSeqProperties, KtermMatchesAxisRecurrences) {
  Gen g(61);
  for (const auto& r : testing::test_rings()) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto k = static_cast<std::size_t>(g.range(1, 3));
      const auto dim = static_cast<std::size_t>(g.range(1, 2));
      const KSeq w = random_kseq(g, r, k, 3, dim);
      for (std::size_t c = 0; c < dim; ++c) {
        NaiveGrid naive(w, c);
        each_point(MultiIndex(k, 0), MultiIndex(k, 8), [&](const MultiIndex& n) {
          ASSERT_EQ(kterm(w, n)[c], naive(n)) << r.to_string();
        });
      }
      const auto grid = kgrid(w, MultiIndex(k, 5));
      std::size_t p = 0;
      each_point(MultiIndex(k, 0), MultiIndex(k, 4), [&](const MultiIndex& n) { ASSERT_EQ(grid[p++], kterm(w, n)); });
    }
  }
}

TEST(KSeqProperties, SepSumIsAnnihilatedAndSeparable) {
  Gen g(62);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 15; ++trial) {
      const auto k = static_cast<std::size_t>(g.range(1, 3));
      std::vector<LinRecSeq> us;
      std::vector<Vec> vals;
      for (std::size_t j = 0; j < k; ++j) {
        us.push_back(g.seq(r, 3));
        vals.push_back(oracle::recurrence(us.back(), 8));
      }
      const KSeq s = sep_sum(us);
      for (std::size_t j = 0; j < k; ++j) {
        ASSERT_EQ(s.elem()[j], sep_sum_axis_poly(us[j].charpoly()));
        const KSeq killed = kshift(axis_poly(s.elem()[j], j, k), s);
        for (const auto& v : kgrid(killed, MultiIndex(k, 4))) ASSERT_EQ(v, Value{0});
      }
      each_point(MultiIndex(k, 0), MultiIndex(k, 7), [&](const MultiIndex& n) {
        Integer want = 0;
        for (std::size_t j = 0; j < k; ++j) want += vals[j][static_cast<std::size_t>(n[j])];
        ASSERT_EQ(at(s, n), oracle::canon(want, m));
      });
    }
  }
}

TEST(KSeqProperties, DeltaSplittingIdentity) {
  Gen g(63);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 8; ++trial) {
      const auto k = static_cast<std::size_t>(g.range(1, 2));
      const KSeq w = random_kseq(g, r, k, 3);
      const auto pairs = k_delta(w);
      ASSERT_EQ(pairs.size(), w.chain().size());
      each_point(MultiIndex(k, 0), MultiIndex(k, 4), [&](const MultiIndex& n) {
        each_point(MultiIndex(k, 0), MultiIndex(k, 4), [&](const MultiIndex& i) {
          MultiIndex sum(k);
          for (std::size_t j = 0; j < k; ++j) sum[j] = n[j] + i[j];
          Integer s = 0;
          for (const auto& p : pairs) s += at(p.left, i) * at(p.right, n);
          ASSERT_EQ(oracle::canon(s, m), at(w, sum));
        });
      });
    }
  }
}

TEST(KSeqProperties, ReverseTermExtendsAndIsOrderIndependent) {
  Gen g(64);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t k = 2;
      std::vector<Poly> elem;
      for (std::size_t j = 0; j < k; ++j) elem.push_back(g.reversible(r, static_cast<std::size_t>(g.range(1, 3))));
      std::size_t count = 1;
      for (const auto& f : elem) count *= static_cast<std::size_t>(f.degree());
      std::vector<Value> values;
      for (std::size_t i = 0; i < count; ++i) values.push_back(g.value(r, 1));
      const KSeq w(elem, values);

      each_point({0, 0}, {5, 5}, [&](const MultiIndex& n) { ASSERT_EQ(k_reverse_term(w, n), kterm(w, n)); });

      // 25 random points, both axis orders.
      const std::array<std::size_t, 2> swapped{1, 0};
      for (int p = 0; p < 25; ++p) {
        const MultiIndex z{g.range(-12, 6), g.range(-12, 6)};
        ASSERT_EQ(k_reverse_term(w, z), k_reverse_term(w, z, swapped));
      }

      // Each axis polynomial annihilates the extension on negative points too.
      for (std::size_t j = 0; j < k; ++j) {
        const auto& a = elem[j].coeffs();
        each_point({-6, -6}, {1, 1}, [&](const MultiIndex& n) {
          Integer s = 0;
          for (std::size_t i = 0; i < a.size(); ++i) {
            MultiIndex sh = n;
            sh[j] += static_cast<std::int64_t>(i);
            s += a[i] * k_reverse_term(w, sh)[0];
          }
          ASSERT_EQ(oracle::canon(s, m), 0);
        });
      }
    }
  }
}

TEST(KSeqProperties, ReverseTermOfSepProductIsProductOfReversals) {
  Gen g(65);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 6; ++trial) {
      const LinRecSeq a = g.seq(g.reversible(r, 2)), b = g.seq(g.reversible(r, 3));
      const KSeq p = sep_product({a, b});
      const Vec ra = oracle::scalars(bi_terms(reverse(a), -10, 3));
      const Vec rb = oracle::scalars(bi_terms(reverse(b), -10, 3));
      each_point({-10, -10}, {3, 3}, [&](const MultiIndex& n) {
        ASSERT_EQ(k_reverse_term(p, n)[0],
                  oracle::canon(ra[static_cast<std::size_t>(n[0] + 10)] * rb[static_cast<std::size_t>(n[1] + 10)], m));
      });
    }
  }
}

TEST(KSeqProperties, ReverseTermOnDegenerateAxesOverZm) {
  const auto r4 = RingSpec::integers_mod(4);
  // Axis 0 is x(x-1): the extension agrees with the sequence from n_0 >= 1.
  const LinRecSeq u = scalar(Poly(r4, {0, 3, 1}), {2, 1});
  const KSeq p = sep_product({u, fibonacci(r4)});
  const Vec rf = oracle::scalars(bi_terms(reverse(fibonacci(r4)), -6, 4));
  for (std::int64_t i = -5; i <= 4; ++i) {
    for (std::int64_t j = -6; j <= 4; ++j) {
      ASSERT_EQ(k_reverse_term(p, {i, j})[0], rf[static_cast<std::size_t>(j + 6)]) << i << "," << j;
    }
  }
  EXPECT_THROW(k_reverse_term(sep_product({scalar(Poly(Z, {0, -2, 1}), {1, 1})}), {-1}), UnsupportedRing);
  const std::array<std::size_t, 2> bad{0, 0};
  EXPECT_THROW(k_reverse_term(p, {0, 0}, bad), DomainError);
}

TEST(KSeqProperties, HadamardAndHurwitzMatchDefinitions) {
  Gen g(66);
  for (const auto& r : testing::test_rings()) {
    const auto m = oracle::mod_of(r);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Poly> fu, fv;
      for (int j = 0; j < 2; ++j) {
        fu.push_back(g.monic(r, static_cast<std::size_t>(g.range(1, 2))));
        fv.push_back(g.monic(r, static_cast<std::size_t>(g.range(1, 2))));
      }
      auto make = [&](const std::vector<Poly>& e) {
        std::vector<Value> vs;
        for (std::size_t i = 0; i < static_cast<std::size_t>(e[0].degree() * e[1].degree()); ++i) vs.push_back(g.value(r, 1));
        return KSeq(e, vs);
      };
      const KSeq u = make(fu), v = make(fv);
      const KSeq had = k_hadamard(u, v), hur = k_hurwitz(u, v);
      each_point({0, 0}, {6, 6}, [&](const MultiIndex& n) {
        ASSERT_EQ(at(had, n), oracle::canon(at(u, n) * at(v, n), m));
        Integer s = 0;
        each_point({0, 0}, n, [&](const MultiIndex& t) {
          const MultiIndex rest{n[0] - t[0], n[1] - t[1]};
          s += oracle::binom(static_cast<unsigned long>(n[0]), static_cast<unsigned long>(t[0])) *
               oracle::binom(static_cast<unsigned long>(n[1]), static_cast<unsigned long>(t[1])) * at(u, t) * at(v, rest);
        });
        ASSERT_EQ(at(hur, n), oracle::canon(s, m));
      });
    }
  }
}

}  // namespace
}  // namespace linrec
