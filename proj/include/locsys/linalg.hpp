#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "locsys/matrix.hpp"

namespace locsys {

template <class Field>
using Vector = std::vector<typename Field::value_type>;

template <class Field>
struct Echelon {
  Matrix<typename Field::value_type> reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;             // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Exact fields take the first nonzero pivot; the
/// complex field uses partial pivoting and treats entries below
/// epsilon * max|a_ij| as zero.
template <class Field>
Echelon<Field> row_reduce(const Field& field, Matrix<typename Field::value_type> a) {
  using V = typename Field::value_type;
  Echelon<Field> out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  [[maybe_unused]] double threshold = 0.0;
  if constexpr (!Field::exact) {
    double largest = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) largest = std::max(largest, field.magnitude(a(i, j)));
    threshold = field.epsilon() * largest;
  }
  auto negligible = [&](const V& v) {
    if constexpr (Field::exact)
      return field.is_zero(v);
    else
      return field.magnitude(v) <= threshold;
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = rows;
    if constexpr (Field::exact) {
      for (std::size_t i = row; i < rows; ++i)
        if (!field.is_zero(a(i, col))) {
          pivot = i;
          break;
        }
    } else {
      double best = threshold;
      for (std::size_t i = row; i < rows; ++i) {
        const double m = field.magnitude(a(i, col));
        if (m > best) {
          best = m;
          pivot = i;
        }
      }
    }
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(row, j));

    const V scale = field.inv(a(row, col));
    for (std::size_t j = col; j < cols; ++j) a(row, j) = field.mul(a(row, j), scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || negligible(a(i, col))) continue;
      const V f = a(i, col);
      for (std::size_t j = col; j < cols; ++j) field.sub_mul(a(i, j), f, a(row, j));
    }
    if constexpr (!Field::exact)
      for (std::size_t i = 0; i < rows; ++i)
        if (i != row) a(i, col) = field.zero();
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class Field>
std::size_t rank(const Field& field, const Matrix<typename Field::value_type>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return row_reduce(field, a).pivots.size();
}

template <class Field>
std::size_t kernel_dimension(const Field& field, const Matrix<typename Field::value_type>& a) {
  return a.cols() - rank(field, a);
}

/// Basis of the right kernel {v : A v = 0}, one vector per free column.
template <class Field>
std::vector<Vector<Field>> kernel_basis(const Field& field, const Matrix<typename Field::value_type>& a) {
  const std::size_t cols = a.cols();
  std::vector<Vector<Field>> basis;
  if (a.rows() == 0) {
    for (std::size_t j = 0; j < cols; ++j) {
      Vector<Field> v(cols, field.zero());
      v[j] = field.one();
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto ech = row_reduce(field, a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector<Field> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = field.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Field>
Matrix<typename Field::value_type> multiply(const Field& field, const Matrix<typename Field::value_type>& a,
                                            const Matrix<typename Field::value_type>& b) {
  Matrix<typename Field::value_type> c(a.rows(), b.cols(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = field.add(c(i, j), field.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class Field>
Vector<Field> apply(const Field& field, const Matrix<typename Field::value_type>& a, const Vector<Field>& v) {
  Vector<Field> out(a.rows(), field.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = field.add(out[i], field.mul(a(i, j), v[j]));
  return out;
}

template <class Field>
bool is_zero_matrix(const Field& field, const Matrix<typename Field::value_type>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!field.is_zero(a(i, j))) return false;
  return true;
}

}  // namespace locsys
