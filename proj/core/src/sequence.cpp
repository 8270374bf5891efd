#include "linrec/sequence.hpp"

#include <unordered_map>

#include "linrec/error.hpp"
#include "linrec/matrix.hpp"

namespace linrec {

namespace {

void require_scalar(const LinRecSeq& u, std::string_view what) {
  if (u.dim() != 1) {
    throw DomainError(std::string(what) + " is defined for scalar sequences only (dim = " +
                      std::to_string(u.dim()) + ")");
  }
}

void require_compatible(const LinRecSeq& u, const LinRecSeq& v, std::string_view what) {
  require_same_ring(u.ring(), v.ring(), what);
  if (u.dim() != v.dim()) throw RingMismatch(std::string(what) + ": value dimensions differ");
}

std::vector<Value> to_values(const std::vector<Integer>& xs) {
  std::vector<Value> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(Value{x});
  return out;
}

}  // namespace

LinRecSeq::LinRecSeq(Poly f, std::vector<Value> init)
    : f_(std::move(f)), dim_(init.empty() ? 0 : init.front().size()), init_(std::move(init)) {
  if (!is_monic(f_) || f_.degree() < 1) {
    throw DomainError("characteristic polynomial must be monic of degree >= 1, got " +
                      to_string(f_));
  }
  if (init_.size() != static_cast<std::size_t>(f_.degree())) {
    throw DomainError("initial vector has " + std::to_string(init_.size()) +
                      " values, characteristic polynomial has degree " +
                      std::to_string(f_.degree()));
  }
  if (dim_ == 0) throw DomainError("values must have dimension >= 1");
  for (auto& v : init_) {
    if (v.size() != dim_) throw DomainError("initial values have differing dimensions");
    for (auto& c : v) c = ring().reduce(std::move(c));
  }
}

LinRecSeq::LinRecSeq(Poly f, const std::vector<Integer>& init)
    : LinRecSeq(std::move(f), to_values(init)) {}

LinRecSeq geometric(const RingSpec& ring, const Value& m, const Integer& r) {
  return LinRecSeq(Poly::x_minus(ring, r), std::vector<Value>{m});
}

LinRecSeq geometric(const RingSpec& ring, const Integer& m, const Integer& r) {
  return geometric(ring, Value{m}, r);
}

LinRecSeq arithmetic(const RingSpec& ring, const Value& p, const Value& q) {
  if (p.size() != q.size()) throw RingMismatch("arithmetic: p and q differ in dimension");
  Value second(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) second[c] = p[c] + q[c];
  return LinRecSeq(Poly(ring, {1, -2, 1}), std::vector<Value>{p, second});
}

LinRecSeq arithmetic(const RingSpec& ring, const Integer& p, const Integer& q) {
  return arithmetic(ring, Value{p}, Value{q});
}

LinRecSeq fibonacci(const RingSpec& ring) {
  return LinRecSeq(Poly(ring, {-1, -1, 1}), std::vector<Integer>{0, 1});
}

LinRecSeq impulse(const Poly& f, std::size_t t) {
  if (f.degree() < 1 || t >= static_cast<std::size_t>(f.degree())) {
    throw DomainError("impulse index " + std::to_string(t) + " outside 0.." +
                      std::to_string(f.degree() - 1));
  }
  std::vector<Integer> init(static_cast<std::size_t>(f.degree()));
  init[t] = 1;
  return LinRecSeq(f, init);
}

LinRecSeq ones(const RingSpec& ring) { return geometric(ring, Integer(1), Integer(1)); }

LinRecSeq hurwitz_unit(const RingSpec& ring) {
  return LinRecSeq(Poly::monomial(ring, 1), std::vector<Integer>{1});
}

LinRecSeq zero_sequence(const RingSpec& ring, std::size_t dim) {
  return LinRecSeq(Poly::monomial(ring, 1), std::vector<Value>{Value(dim)});
}

std::vector<Value> terms(const LinRecSeq& u, std::size_t count) {
  const auto& R = u.ring();
  const auto& a = u.charpoly().coeffs();
  const std::size_t l = u.order();
  std::vector<Value> out;
  out.reserve(std::max(count, l));
  for (std::size_t i = 0; i < std::min(count, l); ++i) out.push_back(u.init()[i]);
  for (std::size_t n = l; n < count; ++n) {
    Value next(u.dim());
    for (std::size_t c = 0; c < u.dim(); ++c) {
      Integer acc = 0;
      for (std::size_t i = 0; i < l; ++i) acc += a[i] * out[n - l + i][c];
      next[c] = R.neg(R.reduce(std::move(acc)));
    }
    out.push_back(std::move(next));
  }
  return out;
}

Value term(const LinRecSeq& u, std::uint64_t n) {
  const std::size_t l = u.order();
  if (n < l) return u.init()[n];
  const auto& R = u.ring();
  const auto& a = u.charpoly().coeffs();
  std::vector<Value> window = u.init();
  std::size_t head = 0;  // window[head] is the oldest value
  for (std::uint64_t k = l; k <= n; ++k) {
    Value next(u.dim());
    for (std::size_t c = 0; c < u.dim(); ++c) {
      Integer acc = 0;
      for (std::size_t i = 0; i < l; ++i) acc += a[i] * window[(head + i) % l][c];
      next[c] = R.neg(R.reduce(std::move(acc)));
    }
    window[head] = std::move(next);
    head = (head + 1) % l;
  }
  return window[(head + l - 1) % l];
}

Value term_fast(const LinRecSeq& u, std::uint64_t n) {
  if (n < u.order()) return u.init()[n];
  const Poly r = x_power_rem(n, u.charpoly());
  const auto& R = u.ring();
  Value out(u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    Integer acc = 0;
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) acc += r.raw(i) * u.init()[i][c];
    out[c] = R.reduce(std::move(acc));
  }
  return out;
}

Value term_matrix(const LinRecSeq& u, std::uint64_t n) {
  const Matrix p = mat_pow(companion(u.charpoly()), n);
  const auto& R = u.ring();
  Value out(u.dim());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    Integer acc = 0;
    for (std::size_t i = 0; i < u.order(); ++i) acc += u.init()[i][c] * p.raw(i, 0);
    out[c] = R.reduce(std::move(acc));
  }
  return out;
}

namespace {

// (g -> u)(n) for n < count, from precomputed values of u.
std::vector<Value> act(const Poly& g, const std::vector<Value>& values, std::size_t count,
                       std::size_t dim, const RingSpec& R) {
  std::vector<Value> out(count, Value(dim));
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t c = 0; c < dim; ++c) {
      Integer acc = 0;
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) acc += g.raw(j) * values[n + j][c];
      out[n][c] = R.reduce(std::move(acc));
    }
  }
  return out;
}

std::size_t span_of(const Poly& g) { return g.is_zero() ? 0 : static_cast<std::size_t>(g.degree()); }

}  // namespace

LinRecSeq shift_action(const Poly& g, const LinRecSeq& u) {
  require_same_ring(g.ring(), u.ring(), "shift_action");
  const std::size_t l = u.order();
  const auto values = terms(u, l + span_of(g));
  return LinRecSeq(u.charpoly(), act(g, values, l, u.dim(), u.ring()));
}

LinRecSeq seq_sum(const LinRecSeq& u, const LinRecSeq& v) {
  require_compatible(u, v, "seq_sum");
  const Poly f = u.charpoly() * v.charpoly();
  const auto l = static_cast<std::size_t>(f.degree());
  auto a = terms(u, l);
  const auto b = terms(v, l);
  for (std::size_t n = 0; n < l; ++n) {
    for (std::size_t c = 0; c < u.dim(); ++c) a[n][c] = u.ring().add(a[n][c], b[n][c]);
  }
  return LinRecSeq(f, std::move(a));
}

LinRecSeq seq_neg(const LinRecSeq& u) {
  auto init = u.init();
  for (auto& v : init) {
    for (auto& c : v) c = u.ring().neg(c);
  }
  return LinRecSeq(u.charpoly(), std::move(init));
}

LinRecSeq hadamard(const LinRecSeq& u, const LinRecSeq& v) {
  require_same_ring(u.ring(), v.ring(), "hadamard");
  require_scalar(u, "hadamard");
  require_scalar(v, "hadamard");
  const Poly f = char_poly(kronecker(companion(u.charpoly()), companion(v.charpoly())));
  const std::size_t l = u.order() * v.order();
  const auto a = terms(u, l);
  const auto b = terms(v, l);
  std::vector<Integer> init(l);
  for (std::size_t n = 0; n < l; ++n) init[n] = u.ring().mul(a[n][0], b[n][0]);
  return LinRecSeq(f, init);
}

std::vector<std::vector<Integer>> pascal_triangle(const RingSpec& ring, std::size_t rows) {
  std::vector<std::vector<Integer>> c(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    c[i].resize(i + 1);
    c[i][0] = ring.reduce(1);
    c[i][i] = ring.reduce(1);
    for (std::size_t j = 1; j < i; ++j) c[i][j] = ring.add(c[i - 1][j - 1], c[i - 1][j]);
  }
  return c;
}

LinRecSeq hurwitz(const LinRecSeq& u, const LinRecSeq& v) {
  require_same_ring(u.ring(), v.ring(), "hurwitz");
  require_scalar(u, "hurwitz");
  require_scalar(v, "hurwitz");
  const auto& R = u.ring();
  const Poly f = char_poly(kronecker_sum(companion(u.charpoly()), companion(v.charpoly())));
  const std::size_t l = u.order() * v.order();
  const auto a = terms(u, l);
  const auto b = terms(v, l);
  const auto binom = pascal_triangle(R, l);
  std::vector<Integer> init(l);
  for (std::size_t n = 0; n < l; ++n) {
    Integer acc = 0;
    for (std::size_t t = 0; t <= n; ++t) acc += binom[n][t] * a[t][0] * b[n - t][0];
    init[n] = R.reduce(std::move(acc));
  }
  return LinRecSeq(f, init);
}

bool annihilates(const Poly& g, const LinRecSeq& u) {
  require_same_ring(g.ring(), u.ring(), "annihilates");
  const std::size_t l = u.order();
  const auto values = terms(u, l + span_of(g));
  for (const auto& v : act(g, values, l, u.dim(), u.ring())) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
  }
  return true;
}

Degeneration is_degenerating(const LinRecSeq& u) {
  // x^D q annihilates u with q reversible (over Z: q(0) != 0, which suffices
  // over the fraction field). Then x^D -> u is killed by q, so it vanishes iff
  // its first deg q values do.
  const XSplit split = split_x_part(u.charpoly());
  const std::size_t window = split.d + span_of(split.q);
  const auto values = terms(u, std::max<std::size_t>(window, 1));
  auto is_zero = [](const Value& v) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  };
  for (std::size_t n = split.d; n < window; ++n) {
    if (!is_zero(values[n])) return {false, std::nullopt};
  }
  std::size_t d = split.d;
  while (d > 0 && is_zero(values[d - 1])) --d;
  return {true, d};
}

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<Integer>& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& x : s) {
      h ^= static_cast<std::size_t>(mpz_get_ui(x.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace

Period period(const LinRecSeq& u, std::uint64_t max_states) {
  if (!u.ring().is_modular()) {
    throw UnsupportedRing("period: sequences over Z need not be periodic; use a ring Z/m");
  }
  const auto& R = u.ring();
  const auto& a = u.charpoly().coeffs();
  const std::size_t l = u.order();
  const std::size_t dim = u.dim();

  // state layout: value-major, l consecutive values of `dim` components each
  std::vector<Integer> state;
  state.reserve(l * dim);
  for (const auto& v : u.init()) state.insert(state.end(), v.begin(), v.end());

  std::unordered_map<std::vector<Integer>, std::uint64_t, StateHash> seen;
  for (std::uint64_t n = 0;; ++n) {
    auto [it, inserted] = seen.try_emplace(state, n);
    if (!inserted) return {it->second, n - it->second};
    if (n >= max_states) {
      throw DomainError("period: no repetition within " + std::to_string(max_states) + " states");
    }
    std::vector<Integer> next(state.begin() + static_cast<long>(dim), state.end());
    for (std::size_t c = 0; c < dim; ++c) {
      Integer acc = 0;
      for (std::size_t i = 0; i < l; ++i) acc += a[i] * state[i * dim + c];
      next.push_back(R.neg(R.reduce(std::move(acc))));
    }
    state = std::move(next);
  }
}

Value counit(const LinRecSeq& u) { return u.init().front(); }

std::vector<TensorPair> delta(const LinRecSeq& u) {
  require_scalar(u, "delta");
  std::vector<TensorPair> out;
  out.reserve(u.order());
  for (std::size_t t = 0; t < u.order(); ++t) {
    out.push_back({shift_action(Poly::monomial(u.ring(), t), u), impulse(u.charpoly(), t)});
  }
  return out;
}

LinRecSeq antipode_hurwitz(const LinRecSeq& u) {
  auto init = u.init();
  for (std::size_t i = 1; i < init.size(); i += 2) {
    for (auto& c : init[i]) c = u.ring().neg(c);
  }
  return LinRecSeq(negate_var(u.charpoly()), std::move(init));
}

}  // namespace linrec
