#pragma once

#include <string>
#include <vector>

#include "locsys/geometry.hpp"
#include "locsys/linalg.hpp"
#include "locsys/local_system.hpp"
#include "locsys/matrix.hpp"

namespace locsys {

/// sign * Delta(S) for a set S of separating lines; sign 0 is a zero entry.
struct DeltaTerm {
  int sign = 0;
  LineSet sep = 0;

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

using SymbolicMatrix = Matrix<DeltaTerm>;

/// The twisted minimal cochain complex of a flagged arrangement, with the
/// differentials kept symbolic so they can be evaluated for many local
/// systems. Bases: [U_0]; [U_1, ..., U_{n-1}, U_0^v]; ch^2 by sign vector.
struct SymbolicComplex {
  std::vector<int> basis0;
  std::vector<int> basis1;
  std::vector<int> basis2;
  SymbolicMatrix d0;  // |basis1| x 1
  SymbolicMatrix d1;  // |basis2| x |basis1|
};

SymbolicMatrix build_d0(const FlaggedArrangement& fa);
SymbolicMatrix build_d1(const FlaggedArrangement& fa);
SymbolicComplex twisted_complex(const FlaggedArrangement& fa);

template <class Field>
Matrix<typename Field::value_type> evaluate(const SymbolicMatrix& m, const Twist<Field>& twist) {
  const auto& field = twist.field();
  Matrix<typename Field::value_type> out(m.rows(), m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const DeltaTerm& t = m(i, j);
      if (t.is_zero()) continue;
      auto v = twist.delta(t.sep);
      out(i, j) = t.sign > 0 ? std::move(v) : field.neg(v);
    }
  return out;
}

struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;

  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

template <class Field>
CohomologyDims cohomology_dims(const SymbolicComplex& cx, const Twist<Field>& twist) {
  const auto& field = twist.field();
  const int r0 = static_cast<int>(rank(field, evaluate(cx.d0, twist)));
  const int r1 = static_cast<int>(rank(field, evaluate(cx.d1, twist)));
  const int n1 = static_cast<int>(cx.basis1.size());
  const int n2 = static_cast<int>(cx.basis2.size());
  return {1 - r0, n1 - r1 - r0, n2 - r1};
}

CohomologyDims cohomology_dims(const LocalSystem& system, const FlaggedArrangement& fa, Backend backend = {});
CohomologyDims cohomology_dims(const LocalSystem& system, const SymbolicComplex& cx, Backend backend = {});

/// "q_{125}^{1/2}-q_{125}^{-1/2}", with 1-based line labels.
std::string format_delta(const DeltaTerm& t, const std::vector<int>& labels);
std::string format_matrix(const SymbolicMatrix& m, const std::vector<int>& labels);

}  // namespace locsys
