#pragma once

// Fixtures and independent reference computations shared by the unit and
// acceptance tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "locsys/char_var.hpp"
#include "locsys/geometry.hpp"

namespace testing {

using locsys::Line;
using locsys::LineSet;
using locsys::Rational;

inline std::vector<Line> five_lines() {
  return {Line::make(1, -2, -60), Line::make(1, 0, -140), Line::make(1, 0, -170), Line::make(1, 0, -200),
          Line::make(1, 2, -280)};
}

inline std::vector<Line> grid() {
  std::vector<Line> lines;
  for (int x : {140, 180, 220, 260}) lines.push_back(Line::make(1, 0, -x));
  for (int y : {45, 75, 105}) lines.push_back(Line::make(0, 1, -y));
  lines.push_back(Line::make(Rational(3, 4), -1, -60));
  lines.push_back(Line::make(Rational(3, 4), -1, -90));
  lines.push_back(Line::make(Rational(3, 4), 1, -210));
  lines.push_back(Line::make(Rational(3, 4), 1, -240));
  return lines;
}

/// Deleted B3 seen from the chart of projective line h (0-based).
inline locsys::Chart b3_chart(int h) { return locsys::move_to_infinity(locsys::deleted_b3().arrangement, h); }

/// Small random arrangement: directions from a fixed palette, integer offsets
/// in [-2, 2], no repeated lines, at least two directions.
inline std::vector<Line> random_arrangement(std::mt19937& rng, int n) {
  static const int dirs[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
  std::uniform_int_distribution<int> pick_dir(0, 4), pick_off(-2, 2);
  while (true) {
    std::vector<Line> lines;
    std::set<std::pair<int, int>> used;
    std::set<int> directions;
    while (static_cast<int>(lines.size()) < n) {
      const int d = pick_dir(rng), c = pick_off(rng);
      if (!used.insert({d, c}).second) continue;
      directions.insert(d);
      lines.push_back(Line::make(dirs[d][0], dirs[d][1], c));
    }
    if (directions.size() >= 2) return lines;
  }
}

/// sum over affine intersection points of (multiplicity - 1).
inline int multiplicity_sum(const std::vector<Line>& lines) {
  int s = 0;
  for (const auto& x : locsys::affine_points(lines)) s += x.multiplicity() - 1;
  return s;
}

inline double as_double(const Rational& r) { return r.get_d(); }

/// Sign vector of a floating point sample (bit i set iff line i is positive).
/// Returns nullopt when the sample is too close to a line.
inline std::optional<LineSet> signs_at(const std::vector<Line>& lines, double x, double y, double eps = 1e-9) {
  LineSet s = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const double v = as_double(lines[i].a) * x + as_double(lines[i].b) * y + as_double(lines[i].c);
    const double scale = std::abs(as_double(lines[i].a)) + std::abs(as_double(lines[i].b));
    if (std::abs(v) <= eps * scale * (1 + std::abs(x) + std::abs(y))) return std::nullopt;
    if (v > 0) s |= LineSet{1} << i;
  }
  return s;
}

inline std::optional<LineSet> signs_at_exact(const std::vector<Line>& lines, const Rational& x, const Rational& y) {
  LineSet s = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Rational v = lines[i].eval(x, y);
    if (v == 0) return std::nullopt;
    if (v > 0) s |= LineSet{1} << i;
  }
  return s;
}

/// Chambers found by exact sampling: centroids of triangles of intersection
/// points and of points shifted off every intersection and line pair,
/// plus far-away points. Every chamber of a line arrangement with at least
/// one vertex is hit: each bounded chamber contains the centroid of three of
/// its vertices, and unbounded chambers contain far points along
/// directions between consecutive asymptotic angles.
inline std::set<LineSet> sampled_chambers(const std::vector<Line>& lines) {
  std::set<LineSet> out;
  std::vector<std::pair<Rational, Rational>> verts;
  for (const auto& p : locsys::affine_points(lines))
    verts.push_back({p.coords[0] / p.coords[2], p.coords[1] / p.coords[2]});
  // Small perturbations of each vertex reach every chamber incident to it.
  const Rational eps(1, 1000);
  for (const auto& [vx, vy] : verts)
    for (int k = 0; k < 64; ++k) {
      const double t = 2 * std::numbers::pi * (k + 0.5) / 64;
      const Rational dx(static_cast<long>(std::lround(std::cos(t) * 1000)), 1000);
      const Rational dy(static_cast<long>(std::lround(std::sin(t) * 1000)), 1000);
      if (auto s = signs_at_exact(lines, vx + eps * dx, vy + eps * dy)) out.insert(*s);
    }
  // Far samples for chambers without vertices (strips and sectors near infinity).
  for (int k = 0; k < 720; ++k) {
    const double t = 2 * std::numbers::pi * (k + 0.25) / 720;
    for (double r : {1e5, 1e7})
      if (auto s = signs_at(lines, r * std::cos(t), r * std::sin(t), 1e-12)) out.insert(*s);
  }
  return out;
}

/// Unbounded chambers in counterclockwise order around a large circle, each
/// with the chamber reached by walking back through the arrangement: the
/// sample point p of an arc is reflected to -p, except on arcs between two
/// parallel lines (strip ends), where only the component along the strip
/// direction is reversed.
inline std::vector<std::pair<LineSet, LineSet>> boundary_cycle(const std::vector<Line>& lines, double radius = 1e6) {
  struct Crossing {
    double angle;
    int line;
  };
  std::vector<Crossing> crossings;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    // a x + b y + c = 0 meets x = R cos t, y = R sin t where
    // a cos t + b sin t = -c / R.
    const auto& l = lines[i];
    const double a = as_double(l.a), b = as_double(l.b), c = as_double(l.c);
    const double norm = std::hypot(a, b), phi = std::atan2(b, a);
    const double s = std::acos(std::clamp(-c / (radius * norm), -1.0, 1.0));
    for (double t : {phi + s, phi - s}) {
      t = std::fmod(t, 2 * std::numbers::pi);
      if (t < 0) t += 2 * std::numbers::pi;
      crossings.push_back({t, i});
    }
  }
  std::sort(crossings.begin(), crossings.end(), [](const Crossing& x, const Crossing& y) { return x.angle < y.angle; });
  std::vector<std::pair<LineSet, LineSet>> out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& lo = crossings[i];
    const Crossing& hi = crossings[(i + 1) % crossings.size()];
    const double end = i + 1 < crossings.size() ? hi.angle : hi.angle + 2 * std::numbers::pi;
    const double mid = 0.5 * (lo.angle + end);
    const double px = radius * std::cos(mid), py = radius * std::sin(mid);
    double qx = -px, qy = -py;
    if (lines[lo.line].parallel_to(lines[hi.line])) {
      // Unit direction of the strip, oriented like p.
      double dx = -as_double(lines[lo.line].b), dy = as_double(lines[lo.line].a);
      const double len = std::hypot(dx, dy);
      dx /= len, dy /= len;
      const double along = px * dx + py * dy;
      qx = px - 2 * along * dx;
      qy = py - 2 * along * dy;
    }
    out.push_back({*signs_at(lines, px, py, 0), *signs_at(lines, qx, qy, 0)});
  }
  return out;
}

/// Numerical twisted value prod h - prod h^{-1} with h_i = exp(pi i k_i / N).
inline std::complex<double> numeric_delta(int order, const std::vector<int>& halves, LineSet s) {
  int k = 0;
  for (std::size_t i = 0; i < halves.size(); ++i)
    if (s >> i & 1) k += halves[i];
  const std::complex<double> h = std::polar(1.0, std::numbers::pi * k / order);
  return h - 1.0 / h;
}

/// Rank of a complex matrix by SVD-free Gaussian elimination with full
/// pivoting; used as an independent reference for small matrices.
inline int numeric_rank(std::vector<std::vector<std::complex<double>>> a, double tol = 1e-8) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  std::vector<bool> used(cols, false);
  for (int step = 0; step < std::min(rows, cols); ++step) {
    int pi = -1, pj = -1;
    double best = tol;
    for (int i = r; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!used[j] && std::abs(a[i][j]) > best) best = std::abs(a[i][j]), pi = i, pj = j;
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    used[pj] = true;
    for (int i = r + 1; i < rows; ++i) {
      const auto f = a[i][pj] / a[r][pj];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Every exponent vector in (Z/N)^n, in lexicographic order.
inline std::vector<std::vector<int>> all_exponents(int order, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  while (true) {
    out.push_back(e);
    int j = n - 1;
    while (j >= 0 && ++e[j] == order) e[j--] = 0;
    if (j < 0) return out;
  }
}

inline int infinity_exponent(int order, const std::vector<int>& e) {
  long s = 0;
  for (int v : e) s += v;
  return static_cast<int>(((-s) % order + order) % order);
}

}  // namespace testing
