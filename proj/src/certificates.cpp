#include "locsys/certificates.hpp"

#include <sstream>

namespace locsys {

std::optional<int> CertificateReport::dimension() const {
  for (const auto& c : certificates)
    if (c.dimension) return c.dimension;
  return std::nullopt;
}

CertificateReport vanishing_certificates(const TorusPoint& q, const ProjArrangement& p) {
  if (q.size() != p.size()) fail(ErrorKind::precondition, "torus point and arrangement sizes disagree");
  const auto points = intersections(p);
  const LineSet all = bit(p.size()) - 1;
  CertificateReport report;
  for (int h = 0; h < p.size(); ++h) {
    if (q.resonant(h)) continue;
    Certificate cert;
    cert.line = h;
    for (const auto& x : points) {
      if (!contains(x.incident, h) || !x.is_multiple() || !q.product_is_one(x.incident)) continue;
      ++cert.resonant_points;
      cert.witness = x;
    }
    if (cert.resonant_points == 0) {
      cert.kind = CertificateKind::no_resonant_point;
      cert.witness.reset();
      cert.dimension = 0;
    } else if (cert.resonant_points == 1) {
      cert.kind = CertificateKind::unique_resonant_point;
      const LineSet away = all & ~cert.witness->incident;
      bool away_resonant = true;
      for (int k = 0; k < p.size(); ++k)
        if (contains(away, k) && !q.resonant(k)) away_resonant = false;
      cert.dimension = away_resonant ? cert.witness->multiplicity() - 2 : 0;
    } else {
      cert.witness.reset();
    }
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

namespace {

bool region_is_empty(const ProjArrangement& p, const std::vector<IntersectionPoint>& points, int h, int k) {
  // For a point x the sign of (h.x)(k.x) is independent of the scaling of x
  // and tells which of the two regions contains it.
  bool positive = false, negative = false;
  for (const auto& x : points) {
    const Rational sh = dot(p.lines[h], x.coords);
    const Rational sk = dot(p.lines[k], x.coords);
    if (sh == 0 || sk == 0) continue;
    (sgn(sh) * sgn(sk) > 0 ? positive : negative) = true;
  }
  return !(positive && negative);
}

}  // namespace

bool region_is_empty(const ProjArrangement& p, int h, int k) { return region_is_empty(p, intersections(p), h, k); }

SharpPairReport sharp_pairs(const TorusPoint& q, const ProjArrangement& p) {
  if (q.size() != p.size()) fail(ErrorKind::precondition, "torus point and arrangement sizes disagree");
  const auto points = intersections(p);
  SharpPairReport report;
  report.hypothesis = true;
  for (int h = 0; h < p.size(); ++h) {
    if (q.resonant(h)) continue;
    int count = 0;
    for (const auto& x : points)
      if (contains(x.incident, h) && x.is_multiple() && q.product_is_one(x.incident)) ++count;
    if (count < 2) report.hypothesis = false;
  }
  for (int h = 0; h < p.size(); ++h)
    for (int k = h + 1; k < p.size(); ++k) {
      if (q.resonant(h) || q.resonant(k) || !region_is_empty(p, points, h, k)) continue;
      SharpPair pair{h, k, SharpBound::none};
      if (report.hypothesis) {
        pair.bound = SharpBound::at_most_one;
        for (const auto& x : points) {
          if (!contains(x.incident, h) || !contains(x.incident, k)) continue;
          if (x.multiplicity() == 2 || !q.product_is_one(x.incident)) pair.bound = SharpBound::zero;
        }
      }
      report.pairs.push_back(pair);
    }
  return report;
}

std::string format_point(const IntersectionPoint& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < kMaxLineSetBits; ++i)
    if (contains(x.incident, i)) {
      os << (first ? "" : ",") << i + 1;
      first = false;
    }
  os << "} at (" << x.coords[0] << ":" << x.coords[1] << ":" << x.coords[2] << ")";
  return os.str();
}

std::string format_certificates(const CertificateReport& r) {
  std::ostringstream os;
  for (const auto& c : r.certificates) {
    os << "line " << c.line + 1 << ": resonant_points=" << c.resonant_points;
    switch (c.kind) {
      case CertificateKind::no_resonant_point:
        os << " certificate=no-resonant-point h1=0";
        break;
      case CertificateKind::unique_resonant_point:
        os << " certificate=unique-resonant-point witness=" << format_point(*c.witness) << " h1=" << *c.dimension;
        break;
      case CertificateKind::none:
        os << " certificate=none";
        break;
    }
    os << "\n";
  }
  return os.str();
}

std::string format_sharp_pairs(const SharpPairReport& r) {
  std::ostringstream os;
  os << "hypothesis(every non-resonant line has >=2 resonant points)=" << (r.hypothesis ? "yes" : "no") << "\n";
  for (const auto& p : r.pairs) {
    os << "sharp pair " << p.first + 1 << " " << p.second + 1 << ": bound=";
    switch (p.bound) {
      case SharpBound::none:
        os << "none";
        break;
      case SharpBound::at_most_one:
        os << "h1<=1";
        break;
      case SharpBound::zero:
        os << "h1=0";
        break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace locsys
