#include "locsys/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "locsys/error.hpp"

namespace locsys {

Line Line::make(Rational a, Rational b, Rational c) {
  if (a == 0 && b == 0) fail(ErrorKind::parse, "degenerate line: both a and b are zero");
  const Rational lead = a != 0 ? a : b;
  return Line{a / lead, b / lead, c / lead};
}

ProjVector canonical(ProjVector v) {
  for (const auto& x : v)
    if (x != 0) {
      const Rational lead = x;
      for (auto& y : v) y /= lead;
      return v;
    }
  fail(ErrorKind::parse, "zero projective vector");
}

Rational dot(const ProjVector& u, const ProjVector& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

ProjVector cross(const ProjVector& u, const ProjVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool sign_vector_less(LineSet x, LineSet y) {
  const LineSet diff = x ^ y;
  if (diff == 0) return false;
  const int first = __builtin_ctz(diff);
  return !contains(x, first);
}

std::string sign_string(LineSet signs, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += contains(signs, i) ? '+' : '-';
  return s;
}

ProjArrangement Chart::coned() const { return cone(lines); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> tokens_of(std::string_view row) {
  std::vector<std::string> out;
  std::istringstream is{std::string(row)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// Splits into rows with comments removed; keeps 1-based source row numbers.
std::vector<std::pair<int, std::string>> content_rows(std::string_view text) {
  std::vector<std::pair<int, std::string>> rows;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string row(text.substr(start, end - start));
    ++number;
    if (auto hash = row.find('#'); hash != std::string::npos) row.resize(hash);
    if (row.find_first_not_of(" \t\r") != std::string::npos) rows.emplace_back(number, row);
    if (end == text.size()) break;
    start = end + 1;
  }
  return rows;
}

[[noreturn]] void row_error(int number, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(number) + ": " + what);
}

bool is_projective_source(std::string_view text) {
  for (const auto& [number, row] : content_rows(text)) {
    auto toks = tokens_of(row);
    if (!toks.empty() && (toks[0] == "P" || toks[0] == "infinity:" || toks[0].rfind("infinity:", 0) == 0)) return true;
  }
  return false;
}

}  // namespace

std::vector<Line> parse_arrangement(std::string_view text) {
  std::vector<Line> lines;
  for (const auto& [number, row] : content_rows(text)) {
    auto toks = tokens_of(row);
    if (toks.size() != 3) row_error(number, "expected three rationals 'a b c'");
    Rational a, b, c;
    try {
      a = parse_rational(toks[0]);
      b = parse_rational(toks[1]);
      c = parse_rational(toks[2]);
    } catch (const Error& e) {
      row_error(number, e.what());
    }
    if (a == 0 && b == 0) row_error(number, "degenerate row (0, 0, c)");
    Line line = Line::make(a, b, c);
    if (std::find(lines.begin(), lines.end(), line) != lines.end()) row_error(number, "duplicate line");
    lines.push_back(std::move(line));
  }
  if (lines.size() > static_cast<std::size_t>(kMaxLineSetBits - 1))
    fail(ErrorKind::precondition, "too many lines");
  return lines;
}

ProjArrangement parse_projective_arrangement(std::string_view text) {
  ProjArrangement p;
  int infinity = 0;
  for (const auto& [number, row] : content_rows(text)) {
    auto toks = tokens_of(row);
    if (toks[0].rfind("infinity:", 0) == 0) {
      std::string value = toks[0].size() > 9 ? toks[0].substr(9) : (toks.size() > 1 ? toks[1] : "");
      try {
        infinity = std::stoi(value);
      } catch (const std::exception&) {
        row_error(number, "malformed infinity header");
      }
      continue;
    }
    if (toks.size() != 4 || toks[0] != "P") row_error(number, "expected 'P a b c'");
    ProjVector v;
    try {
      for (int k = 0; k < 3; ++k) v[k] = parse_rational(toks[k + 1]);
    } catch (const Error& e) {
      row_error(number, e.what());
    }
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) row_error(number, "zero projective line");
    v = canonical(v);
    if (std::find(p.lines.begin(), p.lines.end(), v) != p.lines.end()) row_error(number, "duplicate line");
    p.lines.push_back(v);
  }
  if (infinity < 1 || infinity > p.size()) fail(ErrorKind::parse, "missing or out-of-range 'infinity: k' header");
  if (p.size() > kMaxLineSetBits) fail(ErrorKind::precondition, "too many lines");
  p.infinity = infinity - 1;
  return p;
}

ProjArrangement load_arrangement(std::string_view text) {
  return is_projective_source(text) ? parse_projective_arrangement(text) : cone(parse_arrangement(text));
}

std::string format_arrangement(const ProjArrangement& p) {
  std::ostringstream os;
  os << "infinity: " << p.infinity + 1 << "\n";
  for (const auto& v : p.lines) os << "P " << v[0] << " " << v[1] << " " << v[2] << "\n";
  return os.str();
}

ProjArrangement cone(const std::vector<Line>& lines) {
  ProjArrangement p;
  for (const auto& l : lines) p.lines.push_back({l.a, l.b, l.c});
  p.lines.push_back({0, 0, 1});
  p.infinity = static_cast<int>(lines.size());
  return p;
}

// ---------------------------------------------------------------------------
// Intersections and chart changes

std::vector<IntersectionPoint> intersections(const ProjArrangement& p, bool restrict_to_infinity) {
  std::map<ProjVector, LineSet> points;
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ProjVector x = canonical(cross(p.lines[i], p.lines[j]));
      points.emplace(std::move(x), 0);
    }
  std::vector<IntersectionPoint> out;
  for (auto& [coords, incident] : points) {
    for (int k = 0; k < n; ++k)
      if (dot(p.lines[k], coords) == 0) incident |= bit(k);
    if (restrict_to_infinity && !contains(incident, p.infinity)) continue;
    out.push_back({coords, incident});
  }
  return out;
}

std::vector<IntersectionPoint> affine_points(const std::vector<Line>& lines) {
  const ProjArrangement p = cone(lines);
  std::vector<IntersectionPoint> out;
  for (auto& x : intersections(p))
    if (!contains(x.incident, p.infinity)) out.push_back(x);
  return out;
}

namespace {

Rational det3(const std::array<ProjVector, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse of a 3x3 rational matrix given by rows.
std::array<ProjVector, 3> inverse3(const std::array<ProjVector, 3>& m) {
  const Rational d = det3(m);
  std::array<ProjVector, 3> inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  return inv;
}

}  // namespace

Chart move_to_infinity(const ProjArrangement& p, int h) {
  if (h < 0 || h >= p.size()) fail(ErrorKind::precondition, "line id out of range");
  const ProjVector& target = p.lines[h];
  const std::array<ProjVector, 3> basis = {ProjVector{1, 0, 0}, ProjVector{0, 1, 0}, ProjVector{0, 0, 1}};
  // Points transform by T (rows r1, r2, target); lines by l -> l T^{-1}.
  std::array<ProjVector, 3> t{};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = i + 1; j < 3 && !found; ++j) {
      t = {basis[i], basis[j], target};
      found = det3(t) != 0;
    }
  const auto t_inv = inverse3(t);

  Chart chart;
  chart.infinity_id = h;
  for (int k = 0; k < p.size(); ++k) {
    if (k == h) continue;
    ProjVector img{0, 0, 0};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) img[j] += p.lines[k][i] * t_inv[i][j];
    chart.lines.push_back(Line::make(img[0], img[1], img[2]));
    chart.proj_ids.push_back(k);
  }
  return chart;
}

// ---------------------------------------------------------------------------
// Chambers

namespace {

struct Constraint {
  Rational p, q, r;  // p*x + q*y + r > 0
};

std::vector<Constraint> constraints_of(const std::vector<Line>& lines, LineSet signs) {
  std::vector<Constraint> cs;
  cs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (contains(signs, static_cast<int>(i)))
      cs.push_back({l.a, l.b, l.c});
    else
      cs.push_back({-l.a, -l.b, -l.c});
  }
  return cs;
}

// Strict Fourier-Motzkin elimination of y, then x.
bool strictly_feasible(const std::vector<Constraint>& cs) {
  std::vector<const Constraint*> lower, upper;
  // one-dimensional constraints u*x + v > 0
  std::vector<std::pair<Rational, Rational>> linear;
  for (const auto& c : cs) {
    if (c.q > 0)
      lower.push_back(&c);
    else if (c.q < 0)
      upper.push_back(&c);
    else
      linear.emplace_back(c.p, c.r);
  }
  // y > -(p_j x + r_j)/q_j and y < -(p_k x + r_k)/q_k combine to
  // (p_j/q_j - p_k/q_k) x + (r_j/q_j - r_k/q_k) > 0.
  for (const auto* lo : lower)
    for (const auto* up : upper)
      linear.emplace_back(lo->p / lo->q - up->p / up->q, lo->r / lo->q - up->r / up->q);

  std::optional<Rational> x_min, x_max;  // x > x_min, x < x_max
  for (const auto& [u, v] : linear) {
    if (u == 0) {
      if (v <= 0) return false;
      continue;
    }
    Rational bound = -v / u;
    if (u > 0) {
      if (!x_min || bound > *x_min) x_min = bound;
    } else {
      if (!x_max || bound < *x_max) x_max = bound;
    }
  }
  return !x_min || !x_max || *x_min < *x_max;
}

using Direction = std::array<Rational, 2>;

// Directions d on the boundary of the recession cone {d : n_i . d >= 0}.
std::vector<Direction> recession_rays(const std::vector<Constraint>& cs) {
  std::vector<Direction> rays;
  for (const auto& c : cs)
    for (int s : {1, -1}) {
      Direction d{Rational(-c.q * s), Rational(c.p * s)};
      bool ok = true;
      for (const auto& e : cs)
        if (e.p * d[0] + e.q * d[1] < 0) {
          ok = false;
          break;
        }
      if (ok && std::find(rays.begin(), rays.end(), d) == rays.end()) rays.push_back(d);
    }
  return rays;
}

bool strictly_inside(const std::vector<Constraint>& cs, const Direction& d) {
  for (const auto& e : cs)
    if (e.p * d[0] + e.q * d[1] <= 0) return false;
  return true;
}

// Sign vector of the opposite unbounded chamber. Sector-shaped chambers are
// opposite to the full negation; a chamber whose recession cone is a single
// ray (a strip end) keeps the signs of the lines parallel to that ray.
LineSet opposite_signs(const std::vector<Constraint>& cs, LineSet signs, int n) {
  const auto rays = recession_rays(cs);
  const LineSet all = n == 32 ? ~LineSet{0} : (bit(n) - 1);
  std::vector<Direction> candidates = rays;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) candidates.push_back({rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]});
  for (const auto& c : cs) candidates.push_back({c.p, c.q});
  for (const auto& d : candidates)
    if (strictly_inside(cs, d)) return ~signs & all;
  const Direction& d = rays.front();
  LineSet flipped = 0;
  for (int i = 0; i < n; ++i)
    if (cs[i].p * d[0] + cs[i].q * d[1] != 0) flipped |= bit(i);
  return signs ^ flipped;
}

std::vector<Chamber> assemble(const std::vector<Line>& lines, const std::vector<LineSet>& feasible) {
  const int n = static_cast<int>(lines.size());
  std::vector<Chamber> out;
  out.reserve(feasible.size());
  for (LineSet s : feasible) out.push_back(Chamber{s, chamber_bounded(lines, s), -1, std::nullopt});
  std::sort(out.begin(), out.end(), [](const Chamber& x, const Chamber& y) { return sign_vector_less(x.signs, y.signs); });
  for (auto& c : out) {
    if (c.bounded) continue;
    const LineSet opp = opposite_signs(constraints_of(lines, c.signs), c.signs, n);
    const int idx = find_chamber(out, opp);
    if (idx < 0 || out[idx].bounded) throw std::logic_error("opposite chamber missing for " + sign_string(c.signs, n));
    c.opposite = idx;
  }
  return out;
}

void check_chamber_bound(const std::vector<Line>& lines) {
  if (lines.empty()) fail(ErrorKind::precondition, "empty arrangement");
  if (lines.size() > static_cast<std::size_t>(kMaxChamberLines))
    fail(ErrorKind::budget, "chamber enumeration supports at most " + std::to_string(kMaxChamberLines) + " lines");
}

}  // namespace

bool chamber_feasible(const std::vector<Line>& lines, LineSet signs) {
  return strictly_feasible(constraints_of(lines, signs));
}

bool chamber_bounded(const std::vector<Line>& lines, LineSet signs) {
  return recession_rays(constraints_of(lines, signs)).empty();
}

int find_chamber(const std::vector<Chamber>& cs, LineSet signs) {
  auto it = std::lower_bound(cs.begin(), cs.end(), signs,
                             [](const Chamber& c, LineSet s) { return sign_vector_less(c.signs, s); });
  if (it == cs.end() || it->signs != signs) return -1;
  return static_cast<int>(it - cs.begin());
}

std::vector<Chamber> chambers_serial(const std::vector<Line>& lines) {
  check_chamber_bound(lines);
  const LineSet count = bit(static_cast<int>(lines.size()));
  std::vector<LineSet> feasible;
  for (LineSet s = 0; s < count; ++s)
    if (chamber_feasible(lines, s)) feasible.push_back(s);
  return assemble(lines, feasible);
}

std::vector<Chamber> chambers(const std::vector<Line>& lines) {
  check_chamber_bound(lines);
  const long count = static_cast<long>(bit(static_cast<int>(lines.size())));
  std::vector<char> ok(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long s = 0; s < count; ++s) ok[s] = chamber_feasible(lines, static_cast<LineSet>(s)) ? 1 : 0;
  std::vector<LineSet> feasible;
  for (long s = 0; s < count; ++s)
    if (ok[s]) feasible.push_back(static_cast<LineSet>(s));
  return assemble(lines, feasible);
}

// ---------------------------------------------------------------------------
// Flag

namespace {

// 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3, -3, 2/3, ...
std::vector<Rational> slope_family(std::size_t count) {
  std::vector<Rational> out{Rational(0)};
  std::set<Rational> seen{Rational(0)};
  for (int k = 1; out.size() < count; ++k)
    for (int m = 1; m <= k && out.size() < count; ++m) {
      if (std::gcd(m, k) != 1) continue;
      for (Rational v : {Rational(m, k), Rational(k, m)}) {
        v.canonicalize();
        for (Rational s : {v, Rational(-v)})
          if (seen.insert(s).second) out.push_back(s);
      }
    }
  return out;
}

struct AffinePoint {
  Rational x, y;
};

std::vector<AffinePoint> cartesian_points(const std::vector<Line>& lines) {
  std::vector<AffinePoint> pts;
  for (const auto& pt : affine_points(lines)) pts.push_back({pt.coords[0] / pt.coords[2], pt.coords[1] / pt.coords[2]});
  return pts;
}

}  // namespace

FlaggedArrangement choose_flag(const std::vector<Line>& lines, int variant) {
  const auto points = cartesian_points(lines);
  if (points.empty()) fail(ErrorKind::precondition, "arrangement has no intersection point (all lines parallel)");
  const int n = static_cast<int>(lines.size());

  const auto family = slope_family(4096);
  int admissible = -1;
  FlagFrame frame;
  bool found = false;
  for (const auto& mu : family) {
    bool ok = true;
    for (const auto& l : lines)
      if (l.a + l.b * mu == 0) {
        ok = false;
        break;
      }
    if (!ok || ++admissible < variant) continue;
    frame.mu = mu;
    found = true;
    break;
  }
  if (!found) fail(ErrorKind::precondition, "no admissible flag slope in the search family");

  Rational lowest = points.front().y - frame.mu * points.front().x;
  for (const auto& p : points) lowest = std::min(lowest, Rational(p.y - frame.mu * p.x));
  frame.offset = lowest - 1;

  std::vector<Rational> crossing(n);
  for (int i = 0; i < n; ++i) crossing[i] = -(lines[i].b * frame.offset + lines[i].c) / (lines[i].a + lines[i].b * frame.mu);
  frame.origin_x = *std::min_element(crossing.begin(), crossing.end()) - 1;
  frame.order.resize(n);
  std::iota(frame.order.begin(), frame.order.end(), 0);
  std::sort(frame.order.begin(), frame.order.end(), [&](int i, int j) { return crossing[i] < crossing[j]; });
  for (int i : frame.order) frame.intercepts.push_back(crossing[i] - frame.origin_x);
  const Rational oy = frame.mu * frame.origin_x + frame.offset;
  for (int i = 0; i < n; ++i)
    if (lines[i].eval(frame.origin_x, oy) > 0) frame.flips |= bit(i);

  FlaggedArrangement fa;
  fa.lines = lines;
  fa.chambers = chambers(lines);
  fa.frame = frame;

  auto locate = [&](LineSet normalized) {
    const int idx = find_chamber(fa.chambers, normalized ^ frame.flips);
    if (idx < 0) throw std::logic_error("flag chamber missing");
    return idx;
  };
  fa.u0 = locate(0);
  fa.chambers[fa.u0].flag_degree = 0;
  LineSet prefix = 0;
  for (int p = 1; p < n; ++p) {
    prefix |= bit(frame.order[p - 1]);
    fa.ch1.push_back(locate(prefix));
  }
  fa.ch1.push_back(locate(bit(n) - 1));
  for (int idx : fa.ch1) fa.chambers[idx].flag_degree = 1;
  for (int idx = 0; idx < static_cast<int>(fa.chambers.size()); ++idx)
    if (fa.chambers[idx].flag_degree < 0) {
      fa.chambers[idx].flag_degree = 2;
      fa.ch2.push_back(idx);
    }
  return fa;
}

bool frame_is_valid(const std::vector<Line>& lines, const FlagFrame& frame) {
  const int n = static_cast<int>(lines.size());
  if (static_cast<int>(frame.order.size()) != n || static_cast<int>(frame.intercepts.size()) != n) return false;
  for (const auto& l : lines)
    if (l.a + l.b * frame.mu == 0) return false;
  for (const auto& p : cartesian_points(lines))
    if (p.y - frame.mu * p.x - frame.offset <= 0) return false;
  Rational previous = 0;
  for (int pos = 0; pos < n; ++pos) {
    const auto& l = lines[frame.order[pos]];
    const Rational x = -(l.b * frame.offset + l.c) / (l.a + l.b * frame.mu);
    const Rational a = x - frame.origin_x;
    if (a != frame.intercepts[pos] || a <= previous) return false;
    previous = a;
  }
  const Rational oy = frame.mu * frame.origin_x + frame.offset;
  for (int i = 0; i < n; ++i) {
    Rational v = lines[i].eval(frame.origin_x, oy);
    if (contains(frame.flips, i)) v = -v;
    if (v >= 0) return false;
  }
  return true;
}

}  // namespace locsys
