#pragma once

// k-dimensional linearly recursive sequences over an elementary ideal
// (f_1(x_1), ..., f_k(x_k)) with monic f_j of degree l_j.
//
// Such a sequence is determined by its values on the polyhedron
// {i : i <= l - 1}. Those values are stored in the order of the graded
// lexicographic chain: i precedes n when the first nonzero entry of
//   (|n| - |i|, n_1 - i_1, ..., n_k - i_k)
// is positive.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "linrec/poly.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

using MultiIndex = std::vector<std::int64_t>;

/// Throws DomainError on an arity mismatch.
std::strong_ordering lex_cmp(const MultiIndex& i, const MultiIndex& n);

/// All i with 0 <= i_j < l_j, sorted by lex_cmp. Throws DomainError if some l_j < 1.
std::vector<MultiIndex> polyhedron_chain(const MultiIndex& l);

class KSeq {
 public:
  /// `values` in lex-chain order, |values| = prod deg f_j.
  KSeq(std::vector<Poly> elem, std::vector<Value> values);
  KSeq(std::vector<Poly> elem, const std::vector<Integer>& values);

  const RingSpec& ring() const noexcept { return elem_.front().ring(); }
  std::size_t k() const noexcept { return elem_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Poly>& elem() const noexcept { return elem_; }
  const std::vector<Value>& values() const noexcept { return values_; }
  /// (deg f_1, ..., deg f_k).
  const MultiIndex& extents() const noexcept { return extents_; }
  const std::vector<MultiIndex>& chain() const noexcept { return chain_; }
  /// Value at a point of the polyhedron. Throws DomainError outside it.
  const Value& value_at(const MultiIndex& i) const;

 private:
  std::vector<Poly> elem_;
  std::size_t dim_ = 0;
  std::vector<Value> values_;
  MultiIndex extents_;
  std::vector<MultiIndex> chain_;
  std::vector<std::size_t> slot_;  // row-major box index -> chain position
};

/// w(n) = sum_{i in polyhedron} a_i^(n) w(i), with a^(n) the coefficients of
/// prod_j (x_j^{n_j} mod f_j). Throws DomainError for negative n.
Value kterm(const KSeq& w, const MultiIndex& n);

/// Values on the box [0, extent), row-major with the last axis fastest.
std::vector<Value> kgrid(const KSeq& w, const MultiIndex& extent);

/// e_t: the Kronecker delta at t on the polyhedron of `elem`.
KSeq k_impulse(std::vector<Poly> elem, const MultiIndex& t);

struct Monomial {
  MultiIndex exponent;
  RingElem coeff;
};
/// Sparse multivariate polynomial.
using MultiPoly = std::vector<Monomial>;

/// f(x_axis) as a k-variate polynomial.
MultiPoly axis_poly(const Poly& f, std::size_t axis, std::size_t k);

/// (g -> w)(n) = sum c_m w(n + m); keeps the elementary polynomials of w.
KSeq kshift(const MultiPoly& g, const KSeq& w);

/// f if f(1) = 0, otherwise f * (x - 1): the axis polynomial used by sep_sum.
Poly sep_sum_axis_poly(const Poly& f);

/// n -> u_1(n_1) + ... + u_k(n_k).
KSeq sep_sum(const std::vector<LinRecSeq>& us);
/// n -> u_1(n_1) * ... * u_k(n_k). Scalar only.
KSeq sep_product(const std::vector<LinRecSeq>& us);

/// Termwise product, per-axis polynomials chi(S_f (x) S_g). Scalar only.
KSeq k_hadamard(const KSeq& u, const KSeq& v);
/// n -> sum_{t <= n} C(n,t) u(t) v(n-t), per-axis polynomials
/// chi(S_f (x) E + E (x) S_g). Scalar only.
KSeq k_hurwitz(const KSeq& u, const KSeq& v);

Value k_counit(const KSeq& w);

struct KTensorPair {
  KSeq left;
  KSeq right;
};
/// (x^t -> w) (x) e_t over the polyhedron chain. Scalar only.
std::vector<KTensorPair> k_delta(const KSeq& w);

/// Value at z in Z^k of the unique birecursive extension, by backsolving one
/// axis at a time in `axis_order` (default 0, 1, ..., k-1). Axes with a
/// non-reversible f_j go through split_x_part first, which needs Z/m or a
/// unit cofactor; otherwise UnsupportedRing is thrown.
Value k_reverse_term(const KSeq& w, const MultiIndex& z, std::span<const std::size_t> axis_order = {});

}  // namespace linrec
