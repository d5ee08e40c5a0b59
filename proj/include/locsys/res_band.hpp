#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "locsys/geometry.hpp"
#include "locsys/linalg.hpp"
#include "locsys/local_system.hpp"
#include "locsys/min_complex.hpp"

namespace locsys {

/// Strip between two consecutive parallel lines.
struct Band {
  int lower = -1;  // the band lies on the positive side of `lower`
  int upper = -1;  // and on the negative side of `upper`
  int u1 = -1;     // unbounded chamber with the lexicographically smaller sign vector
  int u2 = -1;
  std::vector<int> inner;  // all chambers inside the band, sorted
  LineSet direction = 0;   // coned ids through the point at infinity X(B), infinity included
  ProjVector infinity_point;
};

/// Lines and chambers of an affine arrangement together with its bands.
struct BandData {
  std::vector<Line> lines;
  std::vector<Chamber> chambers;
  std::vector<Band> bands;

  int size() const { return static_cast<int>(lines.size()); }
};

std::vector<Band> bands(const std::vector<Line>& lines, const std::vector<Chamber>& chambers);
BandData analyze_bands(std::vector<Line> lines);
BandData analyze_bands(const FlaggedArrangement& fa);

/// Bands with Delta(U_1(B), U_2(B)) = 0.
template <class Field>
std::vector<int> resonant_bands(const Twist<Field>& twist, const BandData& data) {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(data.bands.size()); ++b) {
    const Band& band = data.bands[b];
    const LineSet s = sep(data.chambers[band.u1], data.chambers[band.u2]);
    if (twist.field().is_zero(twist.delta(s))) out.push_back(b);
  }
  return out;
}

/// Bands whose point at infinity is resonant, q_{X(B)} = 1.
std::vector<int> resonant_bands_by_point(const LocalSystem& system, const BandData& data);

/// Coefficients Delta(U_i(B), C) over the chambers C of the band, i = 1 or 2.
std::vector<std::pair<int, DeltaTerm>> standing_wave(const BandData& data, const Band& band, int from = 1);

template <class Field>
struct BandKernel {
  int dimension = 0;
  std::vector<int> resonant;                  // band indices, columns of nabla
  std::vector<int> rows;                      // chambers touched by some wave
  Matrix<typename Field::value_type> nabla;   // rows x resonant
  std::vector<Vector<Field>> basis;           // kernel vectors in band coordinates
};

template <class Field>
Matrix<typename Field::value_type> nabla_matrix(const Twist<Field>& twist, const BandData& data,
                                                const std::vector<int>& resonant, std::vector<int>& rows) {
  const auto& field = twist.field();
  rows.clear();
  for (int b : resonant)
    for (int c : data.bands[b].inner) rows.push_back(c);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  Matrix<typename Field::value_type> m(rows.size(), resonant.size(), field.zero());
  for (std::size_t col = 0; col < resonant.size(); ++col)
    for (const auto& [c, term] : standing_wave(data, data.bands[resonant[col]])) {
      if (term.sep == 0) continue;
      const auto row = std::lower_bound(rows.begin(), rows.end(), c) - rows.begin();
      m(row, col) = twist.delta(term.sep);
    }
  return m;
}

/// dim H^1 as the number of linear relations among the standing waves of
/// the resonant bands. Requires q_infinity != 1.
template <class Field>
BandKernel<Field> h1_via_bands(const Twist<Field>& twist, const BandData& data, bool with_basis = true) {
  if (twist.system().size() != data.size()) fail(ErrorKind::precondition, "local system and arrangement sizes disagree");
  if (twist.system().infinity_resonant())
    fail(ErrorKind::theorem_inapplicable,
         "q_infinity = 1: the band algorithm does not apply; use the full complex or move a non-resonant line to "
         "infinity");
  BandKernel<Field> out;
  out.resonant = resonant_bands(twist, data);
  if (out.resonant.empty()) return out;
  out.nabla = nabla_matrix(twist, data, out.resonant, out.rows);
  if (with_basis) {
    out.basis = kernel_basis(twist.field(), out.nabla);
    out.dimension = static_cast<int>(out.basis.size());
  } else {
    out.dimension = static_cast<int>(kernel_dimension(twist.field(), out.nabla));
  }
  return out;
}

int h1_via_bands(const LocalSystem& system, const BandData& data, Backend backend = {});

}  // namespace locsys
