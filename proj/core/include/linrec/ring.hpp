#pragma once

// Ground rings: the integers Z and the residue rings Z/m.
//
// Containers in this library (polynomials, matrices, sequences) store their
// RingSpec once and keep bare canonical representatives; the raw-integer
// members of RingSpec below are the arithmetic they use. RingElem is the
// self-describing element type for the public element-level API.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace linrec {

using Integer = mpz_class;

class RingElem;

class RingSpec {
 public:
  enum class Kind { Integers, IntegersMod };

  static RingSpec integers();
  /// Throws DomainError if modulus < 2.
  static RingSpec integers_mod(const Integer& modulus);
  static RingSpec integers_mod(long modulus) { return integers_mod(Integer(modulus)); }

  Kind kind() const noexcept { return modulus_ ? Kind::IntegersMod : Kind::Integers; }
  bool is_integers() const noexcept { return !modulus_; }
  bool is_modular() const noexcept { return static_cast<bool>(modulus_); }
  /// Throws UnsupportedRing for Z.
  const Integer& modulus() const;

  // Raw arithmetic. Inputs must be canonical; outputs are canonical.
  Integer reduce(Integer v) const;
  Integer add(const Integer& a, const Integer& b) const;
  Integer sub(const Integer& a, const Integer& b) const;
  Integer neg(const Integer& a) const;
  Integer mul(const Integer& a, const Integer& b) const;
  bool is_unit(const Integer& a) const;
  /// Throws DomainError on a non-unit.
  Integer inverse(const Integer& a) const;

  RingElem elem(const Integer& v) const;
  RingElem zero() const;
  RingElem one() const;

  /// "Z" or "Z/<m>".
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingSpec() = default;
  std::shared_ptr<const Integer> modulus_;  // null for Z
};

/// Throws RingMismatch naming `what` when the rings differ.
void require_same_ring(const RingSpec& a, const RingSpec& b, std::string_view what);

class RingElem {
 public:
  /// Canonicalizes `value` (Euclidean remainder for Z/m).
  RingElem(const Integer& value, RingSpec ring);

  const Integer& value() const noexcept { return value_; }
  const RingSpec& ring() const noexcept { return ring_; }
  bool is_zero() const { return value_ == 0; }
  /// Value as printed: the canonical representative, signed over Z.
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  Integer value_;
  RingSpec ring_;
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return mul(a, b); }
inline RingElem operator-(const RingElem& a) { return neg(a); }

bool is_unit(const RingElem& a);
/// Throws DomainError if `a` is not a unit.
RingElem inv_unit(const RingElem& a);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power factorization of the modulus, primes ascending.
/// Throws UnsupportedRing for Z.
std::vector<PrimePower> factor_modulus(const RingSpec& ring);

}  // namespace linrec
