#pragma once

// One-dimensional linearly recursive sequences.
//
// A sequence is stored as a monic characteristic polynomial f of degree l
// plus its first l values; every later value follows from
//   u(n+l) = -(a_0 u(n) + ... + a_{l-1} u(n+l-1)).
// Values may be vectors in R^dim (dim = 1 for ordinary scalar sequences).

#include <cstdint>
#include <optional>
#include <vector>

#include "linrec/poly.hpp"
#include "linrec/ring.hpp"

namespace linrec {

/// One value of a sequence: `dim` canonical representatives.
using Value = std::vector<Integer>;

class LinRecSeq {
 public:
  /// Throws DomainError unless f is monic of degree >= 1, |init| = deg f and all
  /// values have the same positive length.
  LinRecSeq(Poly f, std::vector<Value> init);
  /// Scalar sequence.
  LinRecSeq(Poly f, const std::vector<Integer>& init);

  const RingSpec& ring() const noexcept { return f_.ring(); }
  std::size_t dim() const noexcept { return dim_; }
  const Poly& charpoly() const noexcept { return f_; }
  std::size_t order() const noexcept { return init_.size(); }
  const std::vector<Value>& init() const noexcept { return init_; }

 private:
  Poly f_;
  std::size_t dim_;
  std::vector<Value> init_;
};

// Named constructors.

/// n -> r^n m, characteristic polynomial x - r.
LinRecSeq geometric(const RingSpec& ring, const Value& m, const Integer& r);
LinRecSeq geometric(const RingSpec& ring, const Integer& m, const Integer& r);
/// n -> p + n q, characteristic polynomial (x - 1)^2, initial vector (p, p+q).
LinRecSeq arithmetic(const RingSpec& ring, const Value& p, const Value& q);
LinRecSeq arithmetic(const RingSpec& ring, const Integer& p, const Integer& q);
/// 0, 1, 1, 2, 3, 5, ... with x^2 - x - 1.
LinRecSeq fibonacci(const RingSpec& ring);
/// e_t for f: initial vector is the Kronecker delta at t. Throws DomainError if t >= deg f.
LinRecSeq impulse(const Poly& f, std::size_t t);
/// The constant sequence 1 (unit of the Hadamard product).
LinRecSeq ones(const RingSpec& ring);
/// n -> delta_{n,0} (unit of the Hurwitz product).
LinRecSeq hurwitz_unit(const RingSpec& ring);
LinRecSeq zero_sequence(const RingSpec& ring, std::size_t dim = 1);

// Evaluation.

/// u(n) by running the recurrence forward.
Value term(const LinRecSeq& u, std::uint64_t n);
/// u(0), ..., u(count-1) in one pass.
std::vector<Value> terms(const LinRecSeq& u, std::size_t count);
/// u(n) = sum_i r_i u(i) with r = x^n mod f.
Value term_fast(const LinRecSeq& u, std::uint64_t n);
/// u(n) as the first entry of (u(0), ..., u(l-1)) * S_f^n.
Value term_matrix(const LinRecSeq& u, std::uint64_t n);

// Module structure and products.

/// g -> u: n -> sum_i g_i u(n+i). Keeps the characteristic polynomial of u.
LinRecSeq shift_action(const Poly& g, const LinRecSeq& u);
/// Pointwise sum with characteristic polynomial f_u * f_v.
LinRecSeq seq_sum(const LinRecSeq& u, const LinRecSeq& v);
LinRecSeq seq_neg(const LinRecSeq& u);
/// Termwise product; characteristic polynomial chi(S_f (x) S_g). Scalar only.
LinRecSeq hadamard(const LinRecSeq& u, const LinRecSeq& v);
/// Binomial convolution n -> sum_t C(n,t) u(t) v(n-t); characteristic
/// polynomial chi(S_f (x) E + E (x) S_g). Scalar only.
LinRecSeq hurwitz(const LinRecSeq& u, const LinRecSeq& v);

/// Exact decision of g -> u == 0 from the first deg f values of g -> u.
bool annihilates(const Poly& g, const LinRecSeq& u);

struct Degeneration {
  bool degenerating = false;
  /// Least n with u(m) = 0 for all m >= n, when degenerating.
  std::optional<std::size_t> d;
};
Degeneration is_degenerating(const LinRecSeq& u);

struct Period {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
};
/// Minimal preperiod and period of the state orbit (u(n), ..., u(n+l-1)).
/// Throws UnsupportedRing over Z, DomainError if more than `max_states`
/// states are visited.
Period period(const LinRecSeq& u, std::uint64_t max_states = std::uint64_t{1} << 26);

// Coalgebra structure.

/// u(0).
Value counit(const LinRecSeq& u);

struct TensorPair {
  LinRecSeq left;
  LinRecSeq right;
};
/// The l summands (x^t -> u) (x) e_t, t = 0..l-1. They satisfy
/// u(n+i) = sum_t left_t(i) * right_t(n). Scalar only.
std::vector<TensorPair> delta(const LinRecSeq& u);

/// i -> (-1)^i u(i), characteristic polynomial (-1)^l f(-x).
LinRecSeq antipode_hurwitz(const LinRecSeq& u);

/// Binomial coefficients C(i, j), i < rows, computed by Pascal's rule in the ring.
std::vector<std::vector<Integer>> pascal_triangle(const RingSpec& ring, std::size_t rows);

}  // namespace linrec
