#include "linrec/kseq.hpp"

#include <algorithm>
#include <numeric>

#include "linrec/error.hpp"
#include "linrec/matrix.hpp"
#include "linrec/reversal.hpp"

namespace linrec {

namespace {

void require_arity(const MultiIndex& a, std::size_t k, std::string_view what) {
  if (a.size() != k) {
    throw DomainError(std::string(what) + ": expected a multi-index of arity " + std::to_string(k) +
                      ", got " + std::to_string(a.size()));
  }
}

std::size_t box_size(const MultiIndex& extent) {
  std::size_t n = 1;
  for (auto e : extent) n *= static_cast<std::size_t>(e);
  return n;
}

std::size_t box_index(const MultiIndex& i, const MultiIndex& extent) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < extent.size(); ++j) {
    idx = idx * static_cast<std::size_t>(extent[j]) + static_cast<std::size_t>(i[j]);
  }
  return idx;
}

// Visits every point of [0, extent) in row-major order.
template <class F>
void for_each_in_box(const MultiIndex& extent, F&& visit) {
  if (box_size(extent) == 0) return;
  MultiIndex i(extent.size(), 0);
  while (true) {
    visit(static_cast<const MultiIndex&>(i));
    std::size_t j = extent.size();
    for (;;) {
      if (j == 0) return;
      --j;
      if (++i[j] < extent[j]) break;
      i[j] = 0;
    }
  }
}

MultiIndex extents_of(const std::vector<Poly>& elem) {
  MultiIndex l;
  l.reserve(elem.size());
  for (const auto& f : elem) l.push_back(f.degree());
  return l;
}

void require_scalar(const KSeq& w, std::string_view what) {
  if (w.dim() != 1) throw DomainError(std::string(what) + " is defined for scalar k-sequences only");
}

void require_compatible(const KSeq& u, const KSeq& v, std::string_view what) {
  require_same_ring(u.ring(), v.ring(), what);
  if (u.k() != v.k()) throw RingMismatch(std::string(what) + ": k differs");
  if (u.dim() != v.dim()) throw RingMismatch(std::string(what) + ": value dimensions differ");
}

// Coefficients of x^n mod f, padded to deg f.
std::vector<Integer> power_coeffs(std::uint64_t n, const Poly& f) {
  std::vector<Integer> r = x_power_rem(n, f).coeffs();
  r.resize(static_cast<std::size_t>(f.degree()));
  return r;
}

// Rows r_n = x^n mod f for n < count, by repeated multiplication with x.
std::vector<std::vector<Integer>> power_table(std::size_t count, const Poly& f) {
  const auto& R = f.ring();
  const auto l = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<Integer>> rows;
  rows.reserve(count);
  std::vector<Integer> cur(l);
  cur[0] = 1;
  for (std::size_t n = 0; n < count; ++n) {
    rows.push_back(cur);
    // cur <- x * cur mod f
    const Integer top = cur[l - 1];
    for (std::size_t i = l - 1; i > 0; --i) cur[i] = R.sub(cur[i - 1], R.mul(top, f.raw(i)));
    cur[0] = R.neg(R.mul(top, f.raw(0)));
  }
  return rows;
}

// sum over the chain of prod_j coeff_j[i_j] * values[i]
Value combine(const KSeq& w, const std::vector<const std::vector<Integer>*>& coeff) {
  const auto& R = w.ring();
  Value acc(w.dim());
  for (std::size_t p = 0; p < w.chain().size(); ++p) {
    const auto& i = w.chain()[p];
    Integer c = 1;
    for (std::size_t j = 0; j < w.k() && c != 0; ++j) {
      c = R.reduce(c * (*coeff[j])[static_cast<std::size_t>(i[j])]);
    }
    if (c == 0) continue;
    for (std::size_t d = 0; d < w.dim(); ++d) acc[d] += c * w.values()[p][d];
  }
  for (auto& x : acc) x = R.reduce(std::move(x));
  return acc;
}

}  // namespace

std::strong_ordering lex_cmp(const MultiIndex& i, const MultiIndex& n) {
  require_arity(n, i.size(), "lex_cmp");
  const auto si = std::accumulate(i.begin(), i.end(), std::int64_t{0});
  const auto sn = std::accumulate(n.begin(), n.end(), std::int64_t{0});
  if (si != sn) return si <=> sn;
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (i[j] != n[j]) return i[j] <=> n[j];
  }
  return std::strong_ordering::equal;
}

std::vector<MultiIndex> polyhedron_chain(const MultiIndex& l) {
  for (auto e : l) {
    if (e < 1) throw DomainError("polyhedron extents must be >= 1");
  }
  std::vector<MultiIndex> chain;
  chain.reserve(box_size(l));
  for_each_in_box(l, [&](const MultiIndex& i) { chain.push_back(i); });
  std::sort(chain.begin(), chain.end(),
            [](const MultiIndex& a, const MultiIndex& b) { return lex_cmp(a, b) < 0; });
  return chain;
}

KSeq::KSeq(std::vector<Poly> elem, std::vector<Value> values)
    : elem_(std::move(elem)), values_(std::move(values)) {
  if (elem_.empty()) throw DomainError("a k-sequence needs k >= 1 elementary polynomials");
  for (const auto& f : elem_) {
    require_same_ring(elem_.front().ring(), f.ring(), "KSeq");
    if (!is_monic(f) || f.degree() < 1) {
      throw DomainError("elementary polynomial must be monic of degree >= 1, got " + to_string(f));
    }
  }
  extents_ = extents_of(elem_);
  chain_ = polyhedron_chain(extents_);
  if (values_.size() != chain_.size()) {
    throw DomainError("polyhedron has " + std::to_string(chain_.size()) + " points, got " +
                      std::to_string(values_.size()) + " values");
  }
  dim_ = values_.front().size();
  if (dim_ == 0) throw DomainError("values must have dimension >= 1");
  for (auto& v : values_) {
    if (v.size() != dim_) throw DomainError("values have differing dimensions");
    for (auto& c : v) c = ring().reduce(std::move(c));
  }
  slot_.resize(chain_.size());
  for (std::size_t p = 0; p < chain_.size(); ++p) slot_[box_index(chain_[p], extents_)] = p;
}

KSeq::KSeq(std::vector<Poly> elem, const std::vector<Integer>& values)
    : KSeq(std::move(elem), [&] {
        std::vector<Value> v;
        v.reserve(values.size());
        for (const auto& x : values) v.push_back(Value{x});
        return v;
      }()) {}

const Value& KSeq::value_at(const MultiIndex& i) const {
  require_arity(i, k(), "value_at");
  for (std::size_t j = 0; j < k(); ++j) {
    if (i[j] < 0 || i[j] >= extents_[j]) throw DomainError("value_at: index outside the polyhedron");
  }
  return values_[slot_[box_index(i, extents_)]];
}

Value kterm(const KSeq& w, const MultiIndex& n) {
  require_arity(n, w.k(), "kterm");
  std::vector<std::vector<Integer>> rows(w.k());
  std::vector<const std::vector<Integer>*> coeff(w.k());
  for (std::size_t j = 0; j < w.k(); ++j) {
    if (n[j] < 0) throw DomainError("kterm: negative index; use k_reverse_term");
    rows[j] = power_coeffs(static_cast<std::uint64_t>(n[j]), w.elem()[j]);
    coeff[j] = &rows[j];
  }
  return combine(w, coeff);
}

std::vector<Value> kgrid(const KSeq& w, const MultiIndex& extent) {
  require_arity(extent, w.k(), "kgrid");
  std::vector<std::vector<std::vector<Integer>>> tables(w.k());
  for (std::size_t j = 0; j < w.k(); ++j) {
    tables[j] = power_table(static_cast<std::size_t>(std::max<std::int64_t>(extent[j], 0)), w.elem()[j]);
  }
  std::vector<Value> out;
  out.reserve(box_size(extent));
  std::vector<const std::vector<Integer>*> coeff(w.k());
  for_each_in_box(extent, [&](const MultiIndex& n) {
    for (std::size_t j = 0; j < w.k(); ++j) coeff[j] = &tables[j][static_cast<std::size_t>(n[j])];
    out.push_back(combine(w, coeff));
  });
  return out;
}

KSeq k_impulse(std::vector<Poly> elem, const MultiIndex& t) {
  const MultiIndex l = extents_of(elem);
  require_arity(t, l.size(), "k_impulse");
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (t[j] < 0 || t[j] >= l[j]) throw DomainError("k_impulse: t lies outside the polyhedron");
  }
  std::vector<Integer> values;
  for (const auto& i : polyhedron_chain(l)) values.emplace_back(i == t ? 1 : 0);
  return KSeq(std::move(elem), values);
}

MultiPoly axis_poly(const Poly& f, std::size_t axis, std::size_t k) {
  if (axis >= k) throw DomainError("axis_poly: axis out of range");
  MultiPoly g;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.raw(i) == 0) continue;
    MultiIndex e(k, 0);
    e[axis] = static_cast<std::int64_t>(i);
    g.push_back({std::move(e), f.coeff(i)});
  }
  return g;
}

KSeq kshift(const MultiPoly& g, const KSeq& w) {
  const auto& R = w.ring();
  for (const auto& m : g) {
    require_same_ring(R, m.coeff.ring(), "kshift");
    require_arity(m.exponent, w.k(), "kshift");
    for (auto e : m.exponent) {
      if (e < 0) throw DomainError("kshift: negative exponent");
    }
  }
  std::vector<Value> values;
  values.reserve(w.chain().size());
  for (const auto& i : w.chain()) {
    Value acc(w.dim());
    for (const auto& m : g) {
      MultiIndex at = i;
      for (std::size_t j = 0; j < at.size(); ++j) at[j] += m.exponent[j];
      const Value v = kterm(w, at);
      for (std::size_t d = 0; d < w.dim(); ++d) acc[d] += m.coeff.value() * v[d];
    }
    for (auto& x : acc) x = R.reduce(std::move(x));
    values.push_back(std::move(acc));
  }
  return KSeq(w.elem(), std::move(values));
}

Poly sep_sum_axis_poly(const Poly& f) {
  if (f(f.ring().one()).is_zero()) return f;
  return f * Poly::x_minus(f.ring(), 1);
}

KSeq sep_sum(const std::vector<LinRecSeq>& us) {
  if (us.empty()) throw DomainError("sep_sum needs at least one sequence");
  std::vector<Poly> elem;
  std::vector<std::vector<Value>> axis_terms;
  for (const auto& u : us) {
    require_same_ring(us.front().ring(), u.ring(), "sep_sum");
    if (u.dim() != us.front().dim()) throw RingMismatch("sep_sum: value dimensions differ");
    elem.push_back(sep_sum_axis_poly(u.charpoly()));
    axis_terms.push_back(terms(u, static_cast<std::size_t>(elem.back().degree())));
  }
  const auto& R = us.front().ring();
  const std::size_t dim = us.front().dim();
  std::vector<Value> values;
  for (const auto& i : polyhedron_chain(extents_of(elem))) {
    Value v(dim);
    for (std::size_t j = 0; j < us.size(); ++j) {
      for (std::size_t d = 0; d < dim; ++d) {
        v[d] = R.add(v[d], axis_terms[j][static_cast<std::size_t>(i[j])][d]);
      }
    }
    values.push_back(std::move(v));
  }
  return KSeq(std::move(elem), std::move(values));
}

KSeq sep_product(const std::vector<LinRecSeq>& us) {
  if (us.empty()) throw DomainError("sep_product needs at least one sequence");
  std::vector<Poly> elem;
  std::vector<std::vector<Value>> axis_terms;
  for (const auto& u : us) {
    require_same_ring(us.front().ring(), u.ring(), "sep_product");
    if (u.dim() != 1) throw DomainError("sep_product is defined for scalar sequences only");
    elem.push_back(u.charpoly());
    axis_terms.push_back(u.init());
  }
  const auto& R = us.front().ring();
  std::vector<Integer> values;
  for (const auto& i : polyhedron_chain(extents_of(elem))) {
    Integer v = R.reduce(1);
    for (std::size_t j = 0; j < us.size(); ++j) {
      v = R.mul(v, axis_terms[j][static_cast<std::size_t>(i[j])][0]);
    }
    values.push_back(std::move(v));
  }
  return KSeq(std::move(elem), values);
}

KSeq k_hadamard(const KSeq& u, const KSeq& v) {
  require_compatible(u, v, "k_hadamard");
  require_scalar(u, "k_hadamard");
  std::vector<Poly> elem;
  for (std::size_t j = 0; j < u.k(); ++j) {
    elem.push_back(char_poly(kronecker(companion(u.elem()[j]), companion(v.elem()[j]))));
  }
  const MultiIndex ext = extents_of(elem);
  const auto gu = kgrid(u, ext);
  const auto gv = kgrid(v, ext);
  const auto& R = u.ring();
  std::vector<Integer> values;
  for (const auto& i : polyhedron_chain(ext)) {
    const std::size_t b = box_index(i, ext);
    values.push_back(R.mul(gu[b][0], gv[b][0]));
  }
  return KSeq(std::move(elem), values);
}

KSeq k_hurwitz(const KSeq& u, const KSeq& v) {
  require_compatible(u, v, "k_hurwitz");
  require_scalar(u, "k_hurwitz");
  std::vector<Poly> elem;
  for (std::size_t j = 0; j < u.k(); ++j) {
    elem.push_back(char_poly(kronecker_sum(companion(u.elem()[j]), companion(v.elem()[j]))));
  }
  const MultiIndex ext = extents_of(elem);
  const auto gu = kgrid(u, ext);
  const auto gv = kgrid(v, ext);
  const auto& R = u.ring();
  const auto binom = pascal_triangle(R, static_cast<std::size_t>(*std::max_element(ext.begin(), ext.end())));
  std::vector<Integer> values;
  for (const auto& i : polyhedron_chain(ext)) {
    MultiIndex upto = i;
    for (auto& e : upto) ++e;
    Integer acc = 0;
    for_each_in_box(upto, [&](const MultiIndex& t) {
      Integer c = 1;
      MultiIndex rest(i.size());
      for (std::size_t j = 0; j < i.size(); ++j) {
        c = R.reduce(c * binom[static_cast<std::size_t>(i[j])][static_cast<std::size_t>(t[j])]);
        rest[j] = i[j] - t[j];
      }
      acc += c * R.mul(gu[box_index(t, ext)][0], gv[box_index(rest, ext)][0]);
    });
    values.push_back(R.reduce(std::move(acc)));
  }
  return KSeq(std::move(elem), values);
}

Value k_counit(const KSeq& w) { return w.values().front(); }

std::vector<KTensorPair> k_delta(const KSeq& w) {
  require_scalar(w, "k_delta");
  std::vector<KTensorPair> out;
  out.reserve(w.chain().size());
  for (const auto& t : w.chain()) {
    const MultiPoly xt{{t, w.ring().one()}};
    out.push_back({kshift(xt, w), k_impulse(w.elem(), t)});
  }
  return out;
}

namespace {

struct AxisSplit {
  std::int64_t d = 0;
  Poly q;
};

Value reverse_rec(const KSeq& w, MultiIndex z, std::span<const std::size_t> order,
                  const std::vector<AxisSplit>& axes, std::size_t depth) {
  if (depth == order.size()) return kterm(w, z);
  const std::size_t j = order[depth];
  const AxisSplit& ax = axes[j];
  if (ax.q.degree() == 0) return Value(w.dim());
  if (z[j] >= ax.d) return reverse_rec(w, std::move(z), order, axes, depth + 1);

  const auto lq = static_cast<std::size_t>(ax.q.degree());
  std::vector<Value> window;
  window.reserve(lq);
  for (std::size_t t = 0; t < lq; ++t) {
    MultiIndex at = z;
    at[j] = ax.d + static_cast<std::int64_t>(t);
    window.push_back(reverse_rec(w, std::move(at), order, axes, depth + 1));
  }
  return bi_term(BiRecSeq(ax.q, std::move(window), w.dim()), z[j] - ax.d);
}

}  // namespace

Value k_reverse_term(const KSeq& w, const MultiIndex& z, std::span<const std::size_t> axis_order) {
  require_arity(z, w.k(), "k_reverse_term");
  std::vector<std::size_t> order(axis_order.begin(), axis_order.end());
  if (order.empty()) {
    order.resize(w.k());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (sorted.size() != w.k() || sorted[j] != j) {
        throw DomainError("k_reverse_term: axis order must be a permutation of 0..k-1");
      }
    }
  }
  std::vector<AxisSplit> axes;
  for (std::size_t j = 0; j < w.k(); ++j) {
    const Poly& f = w.elem()[j];
    if (is_reversible(f)) {
      axes.push_back({0, f});
      continue;
    }
    XSplit s = split_x_part(f);
    if (s.nonunit_constant) {
      throw UnsupportedRing("k_reverse_term: axis " + std::to_string(j) + " polynomial " +
                            to_string(f) + " cannot be reversed over Z");
    }
    axes.push_back({static_cast<std::int64_t>(s.d), std::move(s.q)});
  }
  return reverse_rec(w, z, order, axes, 0);
}

}  // namespace linrec
