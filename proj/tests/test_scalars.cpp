#include <doctest.h>

#include <random>

#include "locsys/complex_field.hpp"
#include "locsys/cyclotomic.hpp"
#include "locsys/linalg.hpp"
#include "locsys/rational.hpp"
#include "support.hpp"

using namespace locsys;

TEST_CASE("rational tokens") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("0.75") == Rational(3, 4));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  for (int m = 1; m <= 40; ++m) {
    const auto phi = cyclotomic_polynomial(m);
    REQUIRE(static_cast<int>(phi.size()) - 1 == euler_phi(m));
    // Primitive M-th roots are roots, nonprimitive ones are not.
    for (int k = 0; k < m; ++k) {
      const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * k / m);
      std::complex<double> v = 0, zp = 1;
      for (const auto& c : phi) v += c.get_d() * zp, zp *= z;
      if (std::gcd(k, m) == 1)
        CHECK(std::abs(v) < 1e-8);
      else
        CHECK(std::abs(v) > 1e-8);
    }
  }
}

TEST_CASE("cyclotomic arithmetic agrees with complex numbers") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int m : {1, 2, 3, 4, 6, 8, 10, 12, 20}) {
    const CyclotomicField f(m);
    auto random_element = [&] {
      CyclotomicNumber x;
      for (int i = 0; i < f.degree() + 2; ++i) x.coeffs.push_back(Rational(coef(rng), 1 + (i % 3)));
      return f.reduce(x.coeffs);
    };
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(), y = random_element();
      const auto cx = f.to_complex(x), cy = f.to_complex(y);
      CHECK(std::abs(f.to_complex(f.add(x, y)) - (cx + cy)) < 1e-9);
      CHECK(std::abs(f.to_complex(f.mul(x, y)) - (cx * cy)) < 1e-8);
      if (!f.is_zero(x)) {
        CHECK(f.equal(f.mul(x, f.inv(x)), f.one()));
        CHECK(std::abs(f.to_complex(f.inv(x)) - 1.0 / cx) < 1e-7);
      } else {
        CHECK(std::abs(cx) < 1e-9);
      }
    }
    for (int k = -2 * m; k <= 2 * m; ++k)
      CHECK(std::abs(f.to_complex(f.zeta_power(k)) - std::polar(1.0, 2 * std::numbers::pi * k / m)) < 1e-9);
  }
}

TEST_CASE("roots of unity of dividing orders") {
  const CyclotomicField f(12);
  CHECK(f.equal(f.root_of_unity(1, 4), f.zeta_power(3)));
  CHECK(f.equal(f.root_of_unity(1, 2), f.from_rational(-1)));
  CHECK(f.equal(f.mul(f.root_of_unity(1, 3), f.root_of_unity(2, 3)), f.one()));
  CHECK_THROWS_AS(f.root_of_unity(1, 5), Error);
}

TEST_CASE("exact rank and kernel") {
  const CyclotomicField f(1);
  auto q = [&](long v) { return f.from_rational(v); };
  Matrix<CyclotomicNumber> a(3, 4, f.zero());
  const long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = q(vals[i][j]);
  CHECK(rank(f, a) == 2);
  const auto basis = kernel_basis(f, a);
  CHECK(basis.size() == 2);
  for (const auto& v : basis)
    for (const auto& x : apply(f, a, v)) CHECK(f.is_zero(x));
  CHECK(rank(f, Matrix<CyclotomicNumber>(0, 3, f.zero())) == 0);
  CHECK(kernel_dimension(f, Matrix<CyclotomicNumber>(0, 3, f.zero())) == 3);
}

TEST_CASE("complex rank matches an independent elimination") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 5);
  const ComplexField f(1e-9);
  for (int trial = 0; trial < 50; ++trial) {
    // Low-rank products of random matrices with root-of-unity entries.
    const int r = 1 + trial % 3, rows = 5, cols = 4;
    std::vector<std::vector<std::complex<double>>> u(rows, std::vector<std::complex<double>>(r)),
        w(r, std::vector<std::complex<double>>(cols));
    for (auto& row : u)
      for (auto& x : row) x = f.root_of_unity(pick(rng), 6) * double(pick(rng));
    for (auto& row : w)
      for (auto& x : row) x = f.root_of_unity(pick(rng), 6) * double(pick(rng));
    Matrix<std::complex<double>> a(rows, cols, 0.0);
    std::vector<std::vector<std::complex<double>>> plain(rows, std::vector<std::complex<double>>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        for (int k = 0; k < r; ++k) a(i, j) += u[i][k] * w[k][j];
        plain[i][j] = a(i, j);
      }
    CHECK(static_cast<int>(rank(f, a)) == testing::numeric_rank(plain));
  }
}
