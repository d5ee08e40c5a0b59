#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locsys/rational.hpp"

namespace locsys {

/// Affine line a*x + b*y + c = 0, canonically scaled so that the first
/// nonzero coefficient is 1. Parallel lines therefore share (a, b).
struct Line {
  Rational a, b, c;

  static Line make(Rational a, Rational b, Rational c);

  Rational eval(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
  bool parallel_to(const Line& other) const { return a == other.a && b == other.b; }

  friend bool operator==(const Line&, const Line&) = default;
};

/// Homogeneous triple; used both for projective lines and points.
using ProjVector = std::array<Rational, 3>;

/// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
ProjVector canonical(ProjVector v);
Rational dot(const ProjVector& u, const ProjVector& v);
ProjVector cross(const ProjVector& u, const ProjVector& v);

struct ProjArrangement {
  std::vector<ProjVector> lines;
  int infinity = -1;

  int size() const { return static_cast<int>(lines.size()); }
};

struct IntersectionPoint {
  ProjVector coords;
  LineSet incident = 0;  // ids of the lines of the arrangement through the point

  int multiplicity() const { return popcount(incident); }
  bool is_multiple() const { return multiplicity() >= 3; }
};

/// A chamber is stored by its sign vector: bit i set iff line i evaluates
/// positive on it (in the line's stored orientation).
struct Chamber {
  LineSet signs = 0;
  bool bounded = false;
  int flag_degree = -1;
  std::optional<int> opposite;  // index into the chamber list, unbounded chambers only
};

/// Lexicographic order on sign vectors, reading line 0 first, with - < +.
bool sign_vector_less(LineSet x, LineSet y);
std::string sign_string(LineSet signs, int n);

/// Affine picture of a projective arrangement with one line sent to infinity.
struct Chart {
  std::vector<Line> lines;
  std::vector<int> proj_ids;  // proj_ids[j] = projective id of affine line j
  int infinity_id = -1;       // projective id of the line at infinity

  /// Coned arrangement in chart numbering: affine ids 0..n-1, infinity n.
  ProjArrangement coned() const;
};

/// Generic flag: F^1 is the line y = mu*x + offset, F^0 the point on it with
/// x = origin_x. Intersections lie strictly above F^1, every line crosses it
/// to the right of F^0.
struct FlagFrame {
  Rational mu;
  Rational offset;
  Rational origin_x;
  std::vector<int> order;      // order[p] = line crossing F^1 at position p (p = 0 is a_1)
  std::vector<Rational> intercepts;  // a_1 < a_2 < ... measured from F^0 along x
  LineSet flips = 0;           // lines whose orientation is reversed so F^0 is negative
};

struct FlaggedArrangement {
  std::vector<Line> lines;
  std::vector<Chamber> chambers;
  FlagFrame frame;
  int u0 = -1;
  std::vector<int> ch1;  // U_1, ..., U_{n-1}, U_0^v
  std::vector<int> ch2;  // sorted by sign vector

  int size() const { return static_cast<int>(lines.size()); }
  /// Sign of the flag-normalized alpha_i on chamber c: true iff positive.
  bool positive(int chamber, int line) const {
    return contains(chambers[chamber].signs ^ frame.flips, line);
  }
};

inline constexpr int kMaxChamberLines = 16;

std::vector<Line> parse_arrangement(std::string_view text);
/// Projective format: "P a b c" rows plus an "infinity: k" header (1-based).
ProjArrangement parse_projective_arrangement(std::string_view text);
/// Accepts either format; affine sources are coned.
ProjArrangement load_arrangement(std::string_view text);
std::string format_arrangement(const ProjArrangement& p);

ProjArrangement cone(const std::vector<Line>& lines);

std::vector<IntersectionPoint> intersections(const ProjArrangement& p, bool restrict_to_infinity = false);
/// Intersection points of the affine arrangement (the ones off the line at infinity).
std::vector<IntersectionPoint> affine_points(const std::vector<Line>& lines);

Chart move_to_infinity(const ProjArrangement& p, int h);

bool chamber_feasible(const std::vector<Line>& lines, LineSet signs);
bool chamber_bounded(const std::vector<Line>& lines, LineSet signs);

/// All chambers, sorted by sign vector, with boundedness and opposites.
/// Feasibility tests over the 2^n sign vectors run in parallel.
std::vector<Chamber> chambers(const std::vector<Line>& lines);
/// Single-threaded reference for `chambers`.
std::vector<Chamber> chambers_serial(const std::vector<Line>& lines);

/// `variant` selects the variant-th admissible slope for F^1, so callers can
/// compare different flags on one arrangement.
FlaggedArrangement choose_flag(const std::vector<Line>& lines, int variant = 0);
bool frame_is_valid(const std::vector<Line>& lines, const FlagFrame& frame);

inline LineSet sep(const Chamber& c, const Chamber& d) { return c.signs ^ d.signs; }

int find_chamber(const std::vector<Chamber>& chambers, LineSet signs);

}  // namespace locsys
