#include "linrec/reversal.hpp"

#include <mutex>

#include "linrec/error.hpp"
#include "linrec/matrix.hpp"

namespace linrec {

namespace detail {

struct BacksolveCache {
  std::mutex mutex;
  std::vector<Value> tail;  // tail[k] = w(-1-k)
};

}  // namespace detail

BiRecSeq::BiRecSeq(Poly q, std::vector<Value> init, std::size_t dim)
    : q_(std::move(q)),
      dim_(dim),
      init_(std::move(init)),
      cache_(std::make_shared<detail::BacksolveCache>()) {
  if (!is_reversible(q_)) {
    throw DomainError("bisequence polynomial must be reversible, got " + to_string(q_));
  }
  if (init_.size() != static_cast<std::size_t>(q_.degree())) {
    throw DomainError("initial vector has " + std::to_string(init_.size()) +
                      " values, polynomial has degree " + std::to_string(q_.degree()));
  }
  if (dim_ == 0) throw DomainError("values must have dimension >= 1");
  for (auto& v : init_) {
    if (v.size() != dim_) throw DomainError("initial values have differing dimensions");
    for (auto& c : v) c = ring().reduce(std::move(c));
  }
}

BiRecSeq::BiRecSeq(Poly q, std::vector<Value> init)
    : BiRecSeq(std::move(q), init, init.empty() ? 1 : init.front().size()) {}

BiRecSeq::BiRecSeq(Poly q, const std::vector<Integer>& init)
    : BiRecSeq(std::move(q), [&] {
        std::vector<Value> v;
        for (const auto& x : init) v.push_back(Value{x});
        return v;
      }()) {}

Value bi_term(const BiRecSeq& w, std::int64_t z) {
  const std::size_t l = w.order();
  if (l == 0) return Value(w.dim());
  if (z >= 0) return term(LinRecSeq(w.q_, w.init_), static_cast<std::uint64_t>(z));

  const auto& R = w.ring();
  const auto& a = w.q_.coeffs();
  const Integer a0_inv = R.inverse(a[0]);
  const auto need = static_cast<std::size_t>(-z);

  std::lock_guard lock(w.cache_->mutex);
  auto& tail = w.cache_->tail;
  // value at index k >= -tail.size(), k < l
  auto at = [&](std::int64_t k) -> const Value& {
    return k >= 0 ? w.init_[static_cast<std::size_t>(k)] : tail[static_cast<std::size_t>(-1 - k)];
  };
  while (tail.size() < need) {
    const auto zz = -1 - static_cast<std::int64_t>(tail.size());
    Value v(w.dim());
    for (std::size_t c = 0; c < w.dim(); ++c) {
      Integer acc = 0;
      for (std::size_t i = 1; i <= l; ++i) acc += a[i] * at(zz + static_cast<std::int64_t>(i))[c];
      v[c] = R.neg(R.mul(R.reduce(std::move(acc)), a0_inv));
    }
    tail.push_back(std::move(v));
  }
  return tail[need - 1];
}

std::vector<Value> bi_terms(const BiRecSeq& w, std::int64_t from, std::int64_t to) {
  std::vector<Value> out;
  if (to < from) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  if (from < 0) bi_term(w, from);  // fill the memo in one pass
  std::int64_t z = from;
  for (; z <= to && z < 0; ++z) out.push_back(bi_term(w, z));
  if (z <= to) {
    if (w.order() == 0) {
      for (; z <= to; ++z) out.push_back(Value(w.dim()));
    } else {
      const auto fwd = terms(LinRecSeq(w.charpoly(), w.init()), static_cast<std::size_t>(to + 1));
      for (; z <= to; ++z) out.push_back(fwd[static_cast<std::size_t>(z)]);
    }
  }
  return out;
}

Value bi_action_term(const Poly& g, const BiRecSeq& w, std::int64_t z) {
  require_same_ring(g.ring(), w.ring(), "bi_action_term");
  const auto& R = w.ring();
  Value out(w.dim());
  if (g.is_zero()) return out;
  const auto values = bi_terms(w, z, z + g.degree());
  for (std::size_t c = 0; c < w.dim(); ++c) {
    Integer acc = 0;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) acc += g.raw(j) * values[j][c];
    out[c] = R.reduce(std::move(acc));
  }
  return out;
}

BiRecSeq reverse(const LinRecSeq& u) {
  if (!is_reversible(u.charpoly())) {
    throw DomainError("reverse: characteristic polynomial " + to_string(u.charpoly()) +
                      " is not reversible; use gamma or decompose");
  }
  return BiRecSeq(u.charpoly(), u.init(), u.dim());
}

BiRecSeq gamma(const LinRecSeq& u) {
  if (is_reversible(u.charpoly())) return reverse(u);
  const XSplit split = split_x_part(u.charpoly());
  if (split.nonunit_constant) {
    throw UnsupportedRing("gamma: over Z the cofactor " + to_string(split.q) +
                          " of the x-power is not reversible");
  }
  const auto lq = static_cast<std::size_t>(split.q.degree());
  if (lq == 0) return BiRecSeq(split.q, {}, u.dim());

  // `shifted` is n -> gamma(u)(n + d); its window starts at u(d).
  const auto values = terms(u, split.d + lq);
  const BiRecSeq shifted(split.q,
                         std::vector<Value>(values.begin() + static_cast<long>(split.d), values.end()),
                         u.dim());
  const auto d = static_cast<std::int64_t>(split.d);
  return BiRecSeq(split.q, bi_terms(shifted, -d, static_cast<std::int64_t>(lq) - 1 - d), u.dim());
}

LinRecSeq beta(const BiRecSeq& w) {
  if (w.order() == 0) {
    return LinRecSeq(Poly::x_minus(w.ring(), 1), std::vector<Value>{Value(w.dim())});
  }
  return LinRecSeq(w.charpoly(), w.init());
}

Decomposition decompose(const LinRecSeq& u) {
  if (!u.ring().is_modular()) {
    throw UnsupportedRing("decompose needs an artinian ring Z/m; Z is not artinian");
  }
  LinRecSeq rev = beta(gamma(u));
  const LinRecSeq diff = seq_sum(u, seq_neg(rev));
  const Degeneration cert = is_degenerating(diff);
  if (!cert.degenerating) {
    throw Error("decompose: difference u - rev failed the degeneration certificate");
  }
  const std::size_t s = std::max<std::size_t>(*cert.d, 1);
  LinRecSeq deg(Poly::monomial(u.ring(), s), terms(diff, s));
  return {std::move(deg), std::move(rev)};
}

LinRecSeq antipode_hadamard(const LinRecSeq& u) {
  const BiRecSeq rev = reverse(u);
  const auto back = bi_terms(rev, -static_cast<std::int64_t>(u.order()) + 1, 0);
  return LinRecSeq(reciprocal(u.charpoly()), std::vector<Value>(back.rbegin(), back.rend()));
}

BiRecSeq bi_hadamard(const BiRecSeq& w1, const BiRecSeq& w2) {
  require_same_ring(w1.ring(), w2.ring(), "bi_hadamard");
  if (w1.dim() != 1 || w2.dim() != 1) {
    throw DomainError("bi_hadamard is defined for scalar bisequences only");
  }
  const auto& R = w1.ring();
  if (w1.order() == 0 || w2.order() == 0) return BiRecSeq(Poly::constant(R, 1), {}, 1);
  const Poly q = char_poly(kronecker(companion(w1.charpoly()), companion(w2.charpoly())));
  const auto l = static_cast<std::int64_t>(w1.order() * w2.order());
  const auto a = bi_terms(w1, 0, l - 1);
  const auto b = bi_terms(w2, 0, l - 1);
  std::vector<Integer> init;
  init.reserve(static_cast<std::size_t>(l));
  for (std::size_t n = 0; n < a.size(); ++n) init.push_back(R.mul(a[n][0], b[n][0]));
  return BiRecSeq(q, init);
}

BiRecSeq bi_ones(const RingSpec& ring) {
  return BiRecSeq(Poly::x_minus(ring, 1), std::vector<Integer>{1});
}

}  // namespace linrec
