#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locsys/complex_field.hpp"
#include "locsys/cyclotomic.hpp"
#include "locsys/error.hpp"
#include "locsys/geometry.hpp"

namespace locsys {

/// Rank-one local system on an affine chart, given by a fixed square root
/// h_i of every monodromy q_i = h_i^2. Torsion systems store h_i as
/// zeta_{2N}^{k_i}; complex systems store h_i numerically.
class LocalSystem {
 public:
  /// q_i = zeta_N^{e_i}, with the canonical root h_i = zeta_{2N}^{e_i}.
  static LocalSystem torsion(int order, std::vector<int> exponents);
  /// h_i = zeta_{2N}^{k_i} for arbitrary k_i mod 2N.
  static LocalSystem from_half_exponents(int order, std::vector<int> half_exponents);
  /// Principal square roots of the given monodromies.
  static LocalSystem complex(std::vector<std::complex<double>> monodromies, double tolerance = 1e-9);

  /// Replaces h_i by -h_i for every i in `which`.
  LocalSystem with_flipped_roots(LineSet which) const;
  LocalSystem with_flipped_roots() const;

  int size() const { return static_cast<int>(halves_.size() + complex_halves_.size()); }
  bool is_torsion() const { return order_ > 0; }
  int order() const { return order_; }
  double tolerance() const { return tolerance_; }
  std::span<const int> half_exponents() const { return halves_; }
  std::span<const std::complex<double>> complex_halves() const { return complex_halves_; }

  /// Exponent of q_i in Z/N (torsion only).
  int exponent(int i) const;
  std::complex<double> monodromy(int i) const;
  std::complex<double> infinity_monodromy() const;

  /// Whether prod q_H = 1 over a set of coned ids, where bit n is H_infinity.
  bool product_is_one(LineSet coned) const;
  bool infinity_resonant() const { return product_is_one(bit(size())); }
  bool is_trivial() const;

  std::string convention() const;

 private:
  int order_ = 0;
  double tolerance_ = 1e-9;
  std::vector<int> halves_;
  std::vector<std::complex<double>> complex_halves_;
};

/// Point of the character torus of a projective arrangement: one monodromy
/// per projective line, with product 1.
class TorusPoint {
 public:
  static TorusPoint torsion(int order, std::vector<int> exponents);
  static TorusPoint complex(std::vector<std::complex<double>> monodromies, double tolerance = 1e-9);
  /// Adjoins the forced infinity monodromy of an affine local system.
  static TorusPoint of(const LocalSystem& system);

  int size() const { return is_torsion() ? static_cast<int>(exponents_.size()) : static_cast<int>(values_.size()); }
  bool is_torsion() const { return order_ > 0; }
  int order() const { return order_; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool product_is_one(LineSet lines) const;
  bool resonant(int line) const { return product_is_one(bit(line)); }
  bool is_trivial() const;
  std::complex<double> value(int line) const;

  /// Local system on the chart, with canonical roots; `flip` negates them all.
  LocalSystem on_chart(const Chart& chart, bool flip = false) const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  int order_ = 0;
  double tolerance_ = 1e-9;
  std::vector<int> exponents_;
  std::vector<std::complex<double>> values_;
};

/// "torsion N; e1 ... en" or "complex; re im re im ...".
LocalSystem parse_local_system(std::string_view spec);
/// Same syntax, read as a torus point when the count matches the projective
/// arrangement, or as an affine system on its standard chart.
TorusPoint parse_torus_point(std::string_view spec, const ProjArrangement& p);

/// Evaluates Delta(C, C') = prod h - prod h^{-1} over separating lines in a
/// given scalar field.
template <class Field>
class Twist {
 public:
  using value_type = typename Field::value_type;

  Twist(const Field& field, const LocalSystem& system) : field_(field), system_(system) {
    if (system.is_torsion()) {
      const int m = 2 * system.order();
      roots_.reserve(m);
      for (int k = 0; k < m; ++k) roots_.push_back(field.root_of_unity(k, m));
    } else if constexpr (Field::exact) {
      fail(ErrorKind::precondition, "complex local systems need the complex backend");
    }
  }

  const Field& field() const { return field_; }
  const LocalSystem& system() const { return system_; }

  value_type half_product(LineSet lines) const {
    if (system_.is_torsion()) return roots_[half_exponent_sum(lines)];
    if constexpr (!Field::exact) {
      std::complex<double> prod{1.0, 0.0};
      auto hs = system_.complex_halves();
      for (int i = 0; i < static_cast<int>(hs.size()); ++i)
        if (contains(lines, i)) prod *= hs[i];
      return prod;
    }
    return field_.one();
  }

  value_type delta(LineSet lines) const {
    if (system_.is_torsion()) {
      const int m = 2 * system_.order();
      const int k = half_exponent_sum(lines);
      return field_.sub(roots_[k], roots_[(m - k) % m]);
    }
    const value_type h = half_product(lines);
    return field_.sub(h, field_.inv(h));
  }

  /// Exact vanishing test for torsion systems; tolerance-based otherwise.
  bool delta_vanishes(LineSet lines) const {
    if (system_.is_torsion()) return half_exponent_sum(lines) % system_.order() == 0;
    return system_.product_is_one(lines);
  }

 private:
  int half_exponent_sum(LineSet lines) const {
    const int m = 2 * system_.order();
    int k = 0;
    auto hs = system_.half_exponents();
    while (lines) {
      const int i = __builtin_ctz(lines);
      lines &= lines - 1;
      k += hs[i];
    }
    return k % m;
  }

  const Field& field_;
  const LocalSystem& system_;
  std::vector<value_type> roots_;
};

enum class BackendKind { cyclotomic, complex };

struct Backend {
  BackendKind kind = BackendKind::cyclotomic;
  double epsilon = 1e-9;
};

/// Calls fn(field) with the field selected by the backend: Q(zeta_{2N}) for a
/// torsion system on the cyclotomic backend, floating complex otherwise.
template <class Fn>
decltype(auto) with_field(const LocalSystem& system, Backend backend, Fn&& fn) {
  if (backend.kind == BackendKind::cyclotomic) {
    if (!system.is_torsion()) fail(ErrorKind::precondition, "cyclotomic backend requires a torsion local system");
    const CyclotomicField field(2 * system.order());
    return fn(field);
  }
  const ComplexField field(backend.epsilon);
  return fn(field);
}

struct ResonanceReport {
  LineSet resonant_lines = 0;  // coned ids
  std::vector<IntersectionPoint> resonant_points;
};

ResonanceReport resonance_report(const TorusPoint& q, const ProjArrangement& p);

template <class Field>
typename Field::value_type q_point(const Field& field, const TorusPoint& q, const IntersectionPoint& x) {
  if (q.is_torsion()) {
    long e = 0;
    for (int i = 0; i < q.size(); ++i)
      if (contains(x.incident, i)) e += q.exponents()[i];
    return field.root_of_unity(e, q.order());
  }
  if constexpr (!Field::exact) {
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < q.size(); ++i)
      if (contains(x.incident, i)) prod *= q.value(i);
    return prod;
  }
  fail(ErrorKind::precondition, "complex torus point needs the complex backend");
}

template <class Field>
typename Field::value_type delta(const Twist<Field>& twist, const Chamber& c, const Chamber& d) {
  return twist.delta(sep(c, d));
}

}  // namespace locsys
