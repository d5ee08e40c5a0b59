#include "locsys/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "locsys/error.hpp"

namespace locsys {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division of integer polynomials by a monic divisor.
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPolynomial quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

// Returns (q, r) with a = q*b + r over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - db, 0);
  const Rational lead = b.back();
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    const Rational c = a[k] / lead;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) fail(ErrorKind::precondition, "cyclotomic order must be positive");
  IntPolynomial p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(int modulus)
    : modulus_(modulus), degree_(euler_phi(modulus)), phi_(cyclotomic_polynomial(modulus)) {
  const int count = std::max(modulus_, 2 * degree_);
  powers_.reserve(count);
  RatPoly current(degree_, 0);
  current[0] = 1;
  for (int k = 0; k < count; ++k) {
    powers_.push_back(value_type{current});
    // multiply by zeta: shift and reduce x^degree = -sum phi_j x^j
    Rational top = current[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) current[j] = current[j - 1];
    current[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j) current[j] -= top * Rational(phi_[j]);
  }
}

CyclotomicField::value_type CyclotomicField::zero() const { return value_type{RatPoly(degree_, 0)}; }

CyclotomicField::value_type CyclotomicField::one() const { return powers_[0]; }

CyclotomicField::value_type CyclotomicField::from_rational(const Rational& r) const {
  auto v = zero();
  v.coeffs[0] = r;
  return v;
}

const CyclotomicField::value_type& CyclotomicField::zeta_power(long k) const {
  long r = k % modulus_;
  if (r < 0) r += modulus_;
  return powers_[static_cast<std::size_t>(r)];
}

CyclotomicField::value_type CyclotomicField::root_of_unity(long k, int order) const {
  if (order <= 0 || modulus_ % order != 0)
    fail(ErrorKind::precondition, "root of unity of order " + std::to_string(order) + " not in Q(zeta_" +
                                      std::to_string(modulus_) + ")");
  return zeta_power(k * (modulus_ / order));
}

CyclotomicField::value_type CyclotomicField::add(const value_type& x, const value_type& y) const {
  value_type z = x;
  for (int j = 0; j < degree_; ++j) z.coeffs[j] += y.coeffs[j];
  return z;
}

CyclotomicField::value_type CyclotomicField::sub(const value_type& x, const value_type& y) const {
  value_type z = x;
  for (int j = 0; j < degree_; ++j) z.coeffs[j] -= y.coeffs[j];
  return z;
}

CyclotomicField::value_type CyclotomicField::neg(const value_type& x) const {
  value_type z = x;
  for (auto& c : z.coeffs) c = -c;
  return z;
}

CyclotomicField::value_type CyclotomicField::mul(const value_type& x, const value_type& y) const {
  RatPoly prod(2 * degree_ - 1, 0);
  mpq_class t;
  for (int i = 0; i < degree_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      if (y.coeffs[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), x.coeffs[i].get_mpq_t(), y.coeffs[j].get_mpq_t());
      prod[i + j] += t;
    }
  }
  return reduce(std::move(prod));
}

void CyclotomicField::sub_mul(value_type& x, const value_type& f, const value_type& y) const {
  const value_type p = mul(f, y);
  for (int j = 0; j < degree_; ++j) x.coeffs[j] -= p.coeffs[j];
}

CyclotomicField::value_type CyclotomicField::reduce(std::vector<Rational> poly) const {
  value_type out = zero();
  mpq_class t;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0) continue;
    if (k < static_cast<std::size_t>(degree_)) {
      out.coeffs[k] += poly[k];
      continue;
    }
    const auto& pw = k < powers_.size() ? powers_[k] : zeta_power(static_cast<long>(k));
    for (int j = 0; j < degree_; ++j) {
      if (pw.coeffs[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), poly[k].get_mpq_t(), pw.coeffs[j].get_mpq_t());
      out.coeffs[j] += t;
    }
  }
  return out;
}

CyclotomicField::value_type CyclotomicField::inv(const value_type& x) const {
  // Extended Euclid: find s with s*x = 1 mod Phi_M.
  RatPoly a(phi_.begin(), phi_.end());
  RatPoly b = x.coeffs;
  trim(b);
  if (b.empty()) fail(ErrorKind::precondition, "division by zero in cyclotomic field");
  RatPoly s0;            // coefficient of x for a
  RatPoly s1{Rational(1)};  // coefficient of x for b
  while (b.size() > 1) {
    auto [q, r] = divmod(a, b);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // b is a nonzero constant: s1 * x = b (mod Phi)
  const Rational c = b[0];
  for (auto& v : s1) v /= c;
  return reduce(std::move(s1));
}

bool CyclotomicField::is_zero(const value_type& x) const {
  for (const auto& c : x.coeffs)
    if (c != 0) return false;
  return true;
}

std::complex<double> CyclotomicField::to_complex(const value_type& x) const {
  std::complex<double> sum{0.0, 0.0};
  for (int j = 0; j < degree_; ++j)
    sum += x.coeffs[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * j / modulus_);
  return sum;
}

std::string CyclotomicField::to_string(const value_type& x) const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < degree_; ++j) {
    const Rational& c = x.coeffs[j];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const Rational mag = abs(c);
    if (j == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace locsys
