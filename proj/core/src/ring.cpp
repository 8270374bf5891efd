#include "linrec/ring.hpp"

#include <algorithm>
#include <map>

#include "linrec/error.hpp"

namespace linrec {

RingSpec RingSpec::integers() { return RingSpec{}; }

RingSpec RingSpec::integers_mod(const Integer& modulus) {
  if (modulus < 2) {
    throw DomainError("modulus must be at least 2, got " + modulus.get_str());
  }
  RingSpec r;
  r.modulus_ = std::make_shared<const Integer>(modulus);
  return r;
}

const Integer& RingSpec::modulus() const {
  if (!modulus_) throw UnsupportedRing("the integer ring has no modulus");
  return *modulus_;
}

Integer RingSpec::reduce(Integer v) const {
  if (modulus_) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), modulus_->get_mpz_t());
  return v;
}

Integer RingSpec::add(const Integer& a, const Integer& b) const {
  Integer r = a + b;
  if (modulus_ && r >= *modulus_) r -= *modulus_;
  return r;
}

Integer RingSpec::sub(const Integer& a, const Integer& b) const {
  Integer r = a - b;
  if (modulus_ && r < 0) r += *modulus_;
  return r;
}

Integer RingSpec::neg(const Integer& a) const {
  if (!modulus_) return -a;
  if (a == 0) return a;
  return *modulus_ - a;
}

Integer RingSpec::mul(const Integer& a, const Integer& b) const {
  Integer r = a * b;
  return reduce(std::move(r));
}

bool RingSpec::is_unit(const Integer& a) const {
  if (!modulus_) return a == 1 || a == -1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus_->get_mpz_t());
  return g == 1;
}

Integer RingSpec::inverse(const Integer& a) const {
  if (!is_unit(a)) {
    throw DomainError(a.get_str() + " is not a unit in " + to_string());
  }
  if (!modulus_) return a;  // ±1 are self-inverse
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus_->get_mpz_t());
  return r;
}

RingElem RingSpec::elem(const Integer& v) const { return RingElem(v, *this); }
RingElem RingSpec::zero() const { return RingElem(0, *this); }
RingElem RingSpec::one() const { return RingElem(1, *this); }

std::string RingSpec::to_string() const {
  return modulus_ ? "Z/" + modulus_->get_str() : std::string("Z");
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.is_integers() || b.is_integers()) return a.is_integers() == b.is_integers();
  return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
}

void require_same_ring(const RingSpec& a, const RingSpec& b, std::string_view what) {
  if (!(a == b)) {
    throw RingMismatch(std::string(what) + ": ring mismatch (" + a.to_string() + " vs " +
                       b.to_string() + ")");
  }
}

RingElem::RingElem(const Integer& value, RingSpec ring)
    : value_(ring.reduce(value)), ring_(std::move(ring)) {}

RingElem add(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "add");
  return RingElem(a.ring().add(a.value(), b.value()), a.ring());
}

RingElem sub(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "sub");
  return RingElem(a.ring().sub(a.value(), b.value()), a.ring());
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "mul");
  return RingElem(a.ring().mul(a.value(), b.value()), a.ring());
}

RingElem neg(const RingElem& a) { return RingElem(a.ring().neg(a.value()), a.ring()); }

bool is_unit(const RingElem& a) { return a.ring().is_unit(a.value()); }

RingElem inv_unit(const RingElem& a) { return RingElem(a.ring().inverse(a.value()), a.ring()); }

namespace {

constexpr unsigned long kTrialBound = 1UL << 20;

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; n odd composite.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          step(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot; replay one step at a time
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, unsigned, std::less<>>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  split_into(d, out);
  split_into(Integer(n / d), out);
}

}  // namespace

std::vector<PrimePower> factor_modulus(const RingSpec& ring) {
  if (!ring.is_modular()) throw UnsupportedRing("factor_modulus needs a ring Z/m");
  Integer n = ring.modulus();
  std::map<Integer, unsigned, std::less<>> found;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  split_into(n, found);

  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (auto& [p, e] : found) result.push_back({p, e});
  return result;
}

}  // namespace linrec
