#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linrec/ring.hpp"

namespace linrec {

/// Univariate polynomial over a RingSpec, coefficients ascending by degree.
///
/// Canonical form: the zero polynomial has no coefficients, otherwise the
/// last stored coefficient is nonzero. All coefficients are canonical
/// representatives of the ring.
class Poly {
 public:
  explicit Poly(RingSpec ring);
  Poly(RingSpec ring, std::vector<Integer> coeffs);
  Poly(RingSpec ring, std::initializer_list<long> coeffs);

  static Poly constant(RingSpec ring, const Integer& c);
  static Poly monomial(RingSpec ring, std::size_t degree, const Integer& c = 1);
  /// x - r
  static Poly x_minus(RingSpec ring, const Integer& r);

  const RingSpec& ring() const noexcept { return ring_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  RingElem coeff(std::size_t i) const;
  const Integer& raw(std::size_t i) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  RingElem operator()(const RingElem& at) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  RingSpec ring_;
  std::vector<Integer> coeffs_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, const Integer& c);
Poly poly_pow(const Poly& f, unsigned e);

inline Poly operator+(const Poly& f, const Poly& g) { return poly_add(f, g); }
inline Poly operator-(const Poly& f, const Poly& g) { return poly_sub(f, g); }
inline Poly operator*(const Poly& f, const Poly& g) { return poly_mul(f, g); }

bool is_monic(const Poly& f);
/// Monic with a unit constant term.
bool is_reversible(const Poly& f);

struct DivResult {
  Poly quotient;
  Poly remainder;
};

/// a = q*f + r with deg r < deg f. Throws DomainError unless f is monic of degree >= 1.
DivResult divmod_by_monic(const Poly& a, const Poly& f);
Poly rem_by_monic(const Poly& a, const Poly& f);

/// x^n mod f by square-and-multiply.
Poly x_power_rem(std::uint64_t n, const Poly& f);

/// Result of isolating an x-power factor from a monic polynomial.
struct XSplit {
  std::size_t d = 0;
  Poly q;
  /// Over Z only: the cofactor's constant term is not ±1, so q is not reversible.
  bool nonunit_constant = false;
};

/// Finds d and a monic q with x^d * q in the ideal (f), q reversible.
///
/// Over Z this strips the trailing zero coefficients exactly. Over Z/m each
/// prime-power component p^e is handled separately: with d0 the number of
/// low coefficients divisible by p and Q the cofactor of x^d0, either f
/// already equals x^d0 * Q (component (d0, Q)) or x^d0 * Q - f lies in
/// p*R[x], whose e-th power vanishes, so (x^d0 * Q)^e is a multiple of f
/// (component (e*d0, Q^e)). Components are padded by powers of x - 1 to a
/// common degree and glued coefficientwise by CRT. Neither d nor deg q is
/// minimal in general.
XSplit split_x_part(const Poly& f);

/// q(0)^-1 * x^l * q(1/x). Throws DomainError unless q is reversible.
Poly reciprocal(const Poly& q);

/// (-1)^l * f(-x). Throws DomainError unless f is monic.
Poly negate_var(const Poly& f);

/// Human form, descending: "x^6-5x^5+14x^4-25x^3+28x^2-15x+3".
/// Over Z/m coefficients print as canonical representatives.
std::string to_string(const Poly& f);

/// Parses an expression in x with integer constants, + - * ^ and parentheses,
/// e.g. "x^2-x-1", "(x-1)^2", "3x(x+2)". Throws ParseError.
Poly parse_poly(const RingSpec& ring, std::string_view text);

}  // namespace linrec
