#pragma once

#include <complex>
#include <string>
#include <vector>

#include "locsys/rational.hpp"

namespace locsys {

/// Integer polynomial, coefficients ordered from the constant term upwards.
using IntPolynomial = std::vector<mpz_class>;

int euler_phi(int m);

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by every
/// Phi_d with d a proper divisor of m.
IntPolynomial cyclotomic_polynomial(int m);

/// Element of Q(zeta_M) written in the power basis 1, zeta, ..., zeta^(phi(M)-1).
struct CyclotomicNumber {
  std::vector<Rational> coeffs;

  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;
};

/// Exact arithmetic in the cyclotomic field Q(zeta_M), zeta_M = exp(2 pi i / M).
class CyclotomicField {
 public:
  using value_type = CyclotomicNumber;
  static constexpr bool exact = true;

  explicit CyclotomicField(int modulus);

  int modulus() const { return modulus_; }
  int degree() const { return degree_; }
  const IntPolynomial& minimal_polynomial() const { return phi_; }

  value_type zero() const;
  value_type one() const;
  value_type from_rational(const Rational& r) const;
  /// zeta_order^k; `order` must divide the field modulus.
  value_type root_of_unity(long k, int order) const;
  /// zeta_M^k reduced modulo Phi_M.
  const value_type& zeta_power(long k) const;

  value_type add(const value_type& x, const value_type& y) const;
  value_type sub(const value_type& x, const value_type& y) const;
  value_type neg(const value_type& x) const;
  value_type mul(const value_type& x, const value_type& y) const;
  value_type inv(const value_type& x) const;
  /// x -= f * y, the elimination step.
  void sub_mul(value_type& x, const value_type& f, const value_type& y) const;

  bool is_zero(const value_type& x) const;
  bool equal(const value_type& x, const value_type& y) const { return is_zero(sub(x, y)); }

  /// Reduces an arbitrary-length polynomial in zeta modulo Phi_M.
  value_type reduce(std::vector<Rational> poly) const;

  std::complex<double> to_complex(const value_type& x) const;
  std::string to_string(const value_type& x) const;

 private:
  int modulus_;
  int degree_;
  IntPolynomial phi_;
  // powers_[k] = zeta^k reduced, for 0 <= k < max(M, 2*degree).
  std::vector<value_type> powers_;
};

}  // namespace locsys
