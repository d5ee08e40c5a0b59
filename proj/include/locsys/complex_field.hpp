#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

namespace locsys {

/// Floating-point complex numbers with a zero tolerance. Rank decisions use a
/// pivot threshold relative to the largest entry of the matrix.
class ComplexField {
 public:
  using value_type = std::complex<double>;
  static constexpr bool exact = false;

  explicit ComplexField(double epsilon = 1e-9) : epsilon_(epsilon) {}

  double epsilon() const { return epsilon_; }

  value_type zero() const { return {0.0, 0.0}; }
  value_type one() const { return {1.0, 0.0}; }
  value_type root_of_unity(long k, int order) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / order);
  }

  value_type add(const value_type& x, const value_type& y) const { return x + y; }
  value_type sub(const value_type& x, const value_type& y) const { return x - y; }
  value_type neg(const value_type& x) const { return -x; }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  value_type inv(const value_type& x) const { return 1.0 / x; }
  void sub_mul(value_type& x, const value_type& f, const value_type& y) const { x -= f * y; }

  double magnitude(const value_type& x) const { return std::abs(x); }
  bool is_zero(const value_type& x) const { return std::abs(x) <= epsilon_; }
  bool equal(const value_type& x, const value_type& y) const { return is_zero(x - y); }

  std::complex<double> to_complex(const value_type& x) const { return x; }
  std::string to_string(const value_type& x) const {
    std::ostringstream os;
    os.precision(12);
    os << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
    return os.str();
  }

 private:
  double epsilon_;
};

}  // namespace locsys
