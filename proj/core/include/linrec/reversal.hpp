#pragma once

// Bisequences (indexed by Z), backsolving and reversal, and the splitting of
// a linearly recursive sequence over Z/m into a degenerating part plus a
// reversible part.

#include <cstdint>
#include <memory>
#include <vector>

#include "linrec/poly.hpp"
#include "linrec/sequence.hpp"

namespace linrec {

namespace detail {
struct BacksolveCache;
}

/// A bisequence annihilated by a reversible polynomial q of degree l, stored
/// by its values at 0..l-1. Values at negative indices come from backsolving
///   w(z) = -a_0^{-1} (a_1 w(z+1) + ... + a_{l-1} w(z+l-1) + w(z+l))
/// and are memoized; copies share the memo, which is internally locked.
/// l = 0 (q = 1) is the zero bisequence.
class BiRecSeq {
 public:
  /// Throws DomainError unless q is reversible and |init| = deg q, each value of size dim.
  BiRecSeq(Poly q, std::vector<Value> init, std::size_t dim);
  /// dim taken from the values (1 when there are none).
  BiRecSeq(Poly q, std::vector<Value> init);
  BiRecSeq(Poly q, const std::vector<Integer>& init);

  const RingSpec& ring() const noexcept { return q_.ring(); }
  std::size_t dim() const noexcept { return dim_; }
  const Poly& charpoly() const noexcept { return q_; }
  std::size_t order() const noexcept { return init_.size(); }
  const std::vector<Value>& init() const noexcept { return init_; }

 private:
  friend Value bi_term(const BiRecSeq& w, std::int64_t z);

  Poly q_;
  std::size_t dim_;
  std::vector<Value> init_;
  std::shared_ptr<detail::BacksolveCache> cache_;
};

Value bi_term(const BiRecSeq& w, std::int64_t z);
/// w(from), ..., w(to), inclusive.
std::vector<Value> bi_terms(const BiRecSeq& w, std::int64_t from, std::int64_t to);
/// (g -> w)(z) = sum_j g_j w(z+j).
Value bi_action_term(const Poly& g, const BiRecSeq& w, std::int64_t z);

/// The unique bisequence with the same reversible characteristic polynomial
/// that agrees with u on N_0. Throws DomainError if f_u is not reversible.
BiRecSeq reverse(const LinRecSeq& u);

/// The unique bisequence annihilated by the reversible q of split_x_part(f_u)
/// that agrees with u from index d on. Throws UnsupportedRing over Z when the
/// cofactor of the x-power is not reversible.
BiRecSeq gamma(const LinRecSeq& u);

/// Restriction to N_0. The zero bisequence restricts to 0 with polynomial x - 1.
LinRecSeq beta(const BiRecSeq& w);

struct Decomposition {
  LinRecSeq degenerating;  // characteristic polynomial x^s
  LinRecSeq reversible;    // reversible characteristic polynomial
};

/// u = degenerating + reversible over Z/m. The degenerating part is certified
/// with is_degenerating before it is returned. Throws UnsupportedRing over Z.
Decomposition decompose(const LinRecSeq& u);

/// n -> Rev(u)(-n), characteristic polynomial reciprocal(f_u).
LinRecSeq antipode_hadamard(const LinRecSeq& u);

/// Termwise product on all of Z; characteristic polynomial chi(S_q1 (x) S_q2).
BiRecSeq bi_hadamard(const BiRecSeq& w1, const BiRecSeq& w2);

/// The constant bisequence 1.
BiRecSeq bi_ones(const RingSpec& ring);

}  // namespace linrec
