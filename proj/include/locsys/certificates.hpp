#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locsys/geometry.hpp"
#include "locsys/local_system.hpp"

namespace locsys {

enum class CertificateKind {
  none,
  no_resonant_point,      // non-resonant line without resonant multiple points: H^1 = 0
  unique_resonant_point,  // exactly one resonant multiple point X: dim is |A_X| - 2 or 0
};

struct Certificate {
  int line = -1;  // projective id of the non-resonant line used as infinity
  CertificateKind kind = CertificateKind::none;
  int resonant_points = 0;
  std::optional<IntersectionPoint> witness;
  std::optional<int> dimension;
};

struct CertificateReport {
  std::vector<Certificate> certificates;  // one per non-resonant line

  /// First asserted dimension, if any certificate applies.
  std::optional<int> dimension() const;
};

CertificateReport vanishing_certificates(const TorusPoint& q, const ProjArrangement& p);

enum class SharpBound {
  none,         // the hypothesis on resonant points fails
  at_most_one,  // dim H^1 <= 1
  zero,         // H^1 = 0
};

struct SharpPair {
  int first = -1;
  int second = -1;
  SharpBound bound = SharpBound::none;
};

struct SharpPairReport {
  /// Every non-resonant line carries at least two resonant multiple points.
  bool hypothesis = false;
  std::vector<SharpPair> pairs;
};

/// Geometric part of sharpness: one of the two regions of RP^2 cut out by the
/// lines h and k contains no intersection point of the other lines.
bool region_is_empty(const ProjArrangement& p, int h, int k);

SharpPairReport sharp_pairs(const TorusPoint& q, const ProjArrangement& p);

std::string format_point(const IntersectionPoint& x);
std::string format_certificates(const CertificateReport& r);
std::string format_sharp_pairs(const SharpPairReport& r);

}  // namespace locsys
