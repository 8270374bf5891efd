#include "linrec/poly.hpp"

#include <algorithm>
#include <cctype>

#include "linrec/error.hpp"

namespace linrec {

Poly::Poly(RingSpec ring) : ring_(std::move(ring)) {}

Poly::Poly(RingSpec ring, std::vector<Integer> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = ring_.reduce(std::move(c));
  normalize();
}

Poly::Poly(RingSpec ring, std::initializer_list<long> coeffs) : ring_(std::move(ring)) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.push_back(ring_.reduce(Integer(c)));
  normalize();
}

Poly Poly::constant(RingSpec ring, const Integer& c) { return Poly(std::move(ring), {c}); }

Poly Poly::monomial(RingSpec ring, std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(ring), std::move(v));
}

Poly Poly::x_minus(RingSpec ring, const Integer& r) {
  return Poly(std::move(ring), std::vector<Integer>{-r, 1});
}

RingElem Poly::coeff(std::size_t i) const {
  return RingElem(i < coeffs_.size() ? coeffs_[i] : Integer(0), ring_);
}

const Integer& Poly::raw(std::size_t i) const {
  static const Integer kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

RingElem Poly::operator()(const RingElem& at) const {
  require_same_ring(ring_, at.ring(), "poly evaluation");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = ring_.reduce(acc * at.value() + *it);
  }
  return RingElem(acc, ring_);
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_add(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "poly_add");
  const auto& R = f.ring();
  std::vector<Integer> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.add(f.raw(i), g.raw(i));
  return Poly(R, std::move(out));
}

Poly poly_sub(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "poly_sub");
  const auto& R = f.ring();
  std::vector<Integer> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.sub(f.raw(i), g.raw(i));
  return Poly(R, std::move(out));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "poly_mul");
  if (f.is_zero() || g.is_zero()) return Poly(f.ring());
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Poly(f.ring(), std::move(out));
}

Poly poly_scale(const Poly& f, const Integer& c) {
  std::vector<Integer> out = f.coeffs();
  for (auto& x : out) x *= c;
  return Poly(f.ring(), std::move(out));
}

Poly poly_pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.ring(), 1);
  Poly base = f;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

bool is_monic(const Poly& f) { return !f.is_zero() && f.coeffs().back() == 1; }

bool is_reversible(const Poly& f) { return is_monic(f) && f.ring().is_unit(f.raw(0)); }

namespace {

void require_monic_divisor(const Poly& f, std::string_view what) {
  if (!is_monic(f) || f.degree() < 1) {
    throw DomainError(std::string(what) + ": divisor must be monic of degree >= 1, got " +
                      to_string(f));
  }
}

// In-place reduction of an unnormalized coefficient vector modulo monic f.
void reduce_in_place(std::vector<Integer>& a, const Poly& f) {
  const auto& R = f.ring();
  const auto& fc = f.coeffs();
  const std::size_t l = fc.size() - 1;
  for (auto& c : a) c = R.reduce(std::move(c));
  for (std::size_t top = a.size(); top-- > l;) {
    if (a[top] == 0) continue;
    const Integer lead = a[top];
    for (std::size_t i = 0; i < l; ++i) {
      a[top - l + i] = R.reduce(a[top - l + i] - lead * fc[i]);
    }
    a[top] = 0;
  }
  if (a.size() > l) a.resize(l);
}

std::vector<Integer> mul_mod(const std::vector<Integer>& a, const std::vector<Integer>& b,
                             const Poly& f) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  reduce_in_place(out, f);
  return out;
}

}  // namespace

DivResult divmod_by_monic(const Poly& a, const Poly& f) {
  require_same_ring(a.ring(), f.ring(), "divmod_by_monic");
  require_monic_divisor(f, "divmod_by_monic");
  const auto& R = f.ring();
  const auto& fc = f.coeffs();
  const std::size_t l = fc.size() - 1;
  std::vector<Integer> rem = a.coeffs();
  if (rem.size() <= l) return {Poly(R), a};
  std::vector<Integer> quot(rem.size() - l);
  for (std::size_t top = rem.size(); top-- > l;) {
    const Integer lead = rem[top];
    quot[top - l] = lead;
    if (lead == 0) continue;
    for (std::size_t i = 0; i < l; ++i) {
      rem[top - l + i] = R.sub(rem[top - l + i], R.mul(lead, fc[i]));
    }
    rem[top] = 0;
  }
  rem.resize(l);
  return {Poly(R, std::move(quot)), Poly(R, std::move(rem))};
}

Poly rem_by_monic(const Poly& a, const Poly& f) { return divmod_by_monic(a, f).remainder; }

Poly x_power_rem(std::uint64_t n, const Poly& f) {
  require_monic_divisor(f, "x_power_rem");
  std::vector<Integer> result{1};
  reduce_in_place(result, f);
  std::vector<Integer> base{0, 1};
  reduce_in_place(base, f);
  while (n) {
    if (n & 1U) result = mul_mod(result, base, f);
    n >>= 1U;
    if (n) base = mul_mod(base, base, f);
  }
  return Poly(f.ring(), std::move(result));
}

namespace {

XSplit split_over_integers(const Poly& f) {
  std::size_t d = 0;
  while (f.raw(d) == 0) ++d;
  std::vector<Integer> rest(f.coeffs().begin() + static_cast<long>(d), f.coeffs().end());
  Poly q(f.ring(), std::move(rest));
  const bool unit = f.ring().is_unit(q.raw(0));
  return {d, std::move(q), !unit};
}

struct Component {
  Integer modulus;
  std::size_t d = 0;
  Poly q;
};

Component split_prime_power(const Poly& f, const PrimePower& pp) {
  Integer pe;
  mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
  const RingSpec local = RingSpec::integers_mod(pe);
  const Poly fl(local, f.coeffs());

  std::size_t d0 = 0;
  bool exact = true;
  while (mpz_divisible_p(fl.raw(d0).get_mpz_t(), pp.prime.get_mpz_t())) {
    if (fl.raw(d0) != 0) exact = false;
    ++d0;
  }
  Poly cof(local, std::vector<Integer>(fl.coeffs().begin() + static_cast<long>(d0),
                                       fl.coeffs().end()));
  if (exact || d0 == 0) return {pe, d0, std::move(cof)};
  return {pe, pp.exponent * d0, poly_pow(cof, pp.exponent)};
}

XSplit split_over_residues(const Poly& f) {
  std::vector<Component> comps;
  for (const auto& pp : factor_modulus(f.ring())) comps.push_back(split_prime_power(f, pp));

  long top = 0;
  std::size_t d = 0;
  for (const auto& c : comps) {
    top = std::max(top, c.q.degree());
    d = std::max(d, c.d);
  }
  for (auto& c : comps) {
    const RingSpec local = c.q.ring();
    const Poly x_minus_one = Poly::x_minus(local, 1);
    c.q = c.q * poly_pow(x_minus_one, static_cast<unsigned>(top - c.q.degree()));
  }

  // Coefficientwise CRT, folding the components in one at a time.
  std::vector<Integer> glued(static_cast<std::size_t>(top) + 1);
  Integer m = 1;
  for (const auto& c : comps) {
    Integer m_inv;
    mpz_invert(m_inv.get_mpz_t(), Integer(m % c.modulus).get_mpz_t(), c.modulus.get_mpz_t());
    for (std::size_t i = 0; i < glued.size(); ++i) {
      Integer t = (c.q.raw(i) - glued[i]) * m_inv;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), c.modulus.get_mpz_t());
      glued[i] += m * t;
    }
    m *= c.modulus;
  }
  return {d, Poly(f.ring(), std::move(glued)), false};
}

}  // namespace

XSplit split_x_part(const Poly& f) {
  if (!is_monic(f)) throw DomainError("split_x_part: polynomial must be monic, got " + to_string(f));
  return f.ring().is_integers() ? split_over_integers(f) : split_over_residues(f);
}

Poly reciprocal(const Poly& q) {
  if (!is_reversible(q)) {
    throw DomainError("reciprocal: polynomial must be reversible, got " + to_string(q));
  }
  const auto& R = q.ring();
  const Integer c0_inv = R.inverse(q.raw(0));
  std::vector<Integer> out(q.coeffs().rbegin(), q.coeffs().rend());
  for (auto& c : out) c = R.mul(c, c0_inv);
  return Poly(R, std::move(out));
}

Poly negate_var(const Poly& f) {
  if (!is_monic(f)) throw DomainError("negate_var: polynomial must be monic, got " + to_string(f));
  const auto& R = f.ring();
  const std::size_t l = static_cast<std::size_t>(f.degree());
  std::vector<Integer> out = f.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((l - i) % 2 == 1) out[i] = R.neg(out[i]);
  }
  return Poly(R, std::move(out));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (long i = f.degree(); i >= 0; --i) {
    const Integer& c = f.raw(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (negative) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += 'x';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := primary ['^' digits]
// primary:= digits | 'x' | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) t_ += c;
    }
  }

  Poly parse() {
    if (t_.empty()) fail("empty input");
    Poly p = expr();
    if (pos_ != t_.size()) fail(std::string("unexpected '") + t_[pos_] + "'");
    return p;
  }

 private:
  static constexpr std::size_t kMaxDegree = std::size_t{1} << 20;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial '" + std::string(text_) + "': " + why + " at position " +
                     std::to_string(pos_));
  }
  bool peek(char c) const { return pos_ < t_.size() && t_[pos_] == c; }
  bool starts_primary() const {
    return pos_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == 'x' ||
                                t_[pos_] == '(');
  }
  std::string digits() {
    std::string d;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) d += t_[pos_++];
    return d;
  }

  Poly expr() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = t_[pos_++] == '-';
    Poly acc = term();
    if (negate) acc = poly_scale(acc, -1);
    while (peek('+') || peek('-')) {
      const bool minus = t_[pos_++] == '-';
      Poly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const std::string e = digits();
    if (e.empty()) fail("missing exponent");
    const Integer exponent(e);
    const auto deg = static_cast<std::size_t>(std::max<long>(base.degree(), 0));
    if (exponent > Integer(static_cast<unsigned long>(kMaxDegree)) ||
        deg * exponent.get_ui() > kMaxDegree) {
      fail("exponent too large");
    }
    return poly_pow(base, static_cast<unsigned>(exponent.get_ui()));
  }

  Poly primary() {
    if (peek('x')) {
      ++pos_;
      return Poly::monomial(ring_, 1);
    }
    if (peek('(')) {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    const std::string d = digits();
    if (d.empty()) fail("expected a number, 'x' or '('");
    return Poly::constant(ring_, Integer(d));
  }

  const RingSpec& ring_;
  std::string_view text_;
  std::string t_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingSpec& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace linrec
