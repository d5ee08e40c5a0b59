#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locsys/geometry.hpp"
#include "locsys/local_system.hpp"
#include "locsys/res_band.hpp"

namespace locsys {

/// Parametrized subtorus (possibly translated) of the character torus:
/// q_i = (-1)^{torsion_i} * prod_j s_j^{coefficients[i][j]}.
struct ComponentFamily {
  std::string name;
  int parameters = 0;
  std::vector<std::vector<int>> coefficients;  // one row per projective line
  std::vector<int> torsion;                    // 0 or 1 per line: sign of q_i
  std::optional<int> generic_h1;

  int size() const { return static_cast<int>(coefficients.size()); }

  /// The point with s_j = zeta_order^{params[j]}. Throws when the torsion
  /// part needs an even order or the point leaves the torus.
  TorusPoint point(int order, std::span<const int> params) const;

  /// Exact membership of a torsion point. Every parameter of the catalog
  /// families equals +-q_i for some line, so it suffices to search s_j among
  /// the 2N-th roots of unity.
  bool contains(const TorusPoint& q) const;
};

struct DeletedB3 {
  ProjArrangement arrangement;
  std::vector<ComponentFamily> catalog;
};

/// The deleted B3 arrangement, H_8 = {z = 0} at infinity, with the thirteen
/// components of its first characteristic variety.
DeletedB3 deleted_b3();

std::vector<std::string> matching_families(const std::vector<ComponentFamily>& catalog, const TorusPoint& q);

/// Affine picture with line h at infinity and its band data, precomputed for
/// every projective line.
class ChartCache {
 public:
  explicit ChartCache(const ProjArrangement& p);

  const ProjArrangement& arrangement() const { return p_; }
  const Chart& chart(int h) const { return charts_[h]; }
  const BandData& bands(int h) const { return bands_[h]; }

 private:
  ProjArrangement p_;
  std::vector<Chart> charts_;
  std::vector<BandData> bands_;
};

/// First line with q_H != 1, or -1 for the trivial point.
int first_non_resonant(const TorusPoint& q);

/// dim H^1 through the band algorithm on the chart of the first
/// non-resonant line. The trivial point goes to the full complex.
int h1_at(const ChartCache& cache, const TorusPoint& q, Backend backend = {});
int h1_at(const ProjArrangement& p, const TorusPoint& q, Backend backend = {});

/// dim H^1 from the full twisted complex on the chart with line h at
/// infinity (the arrangement's own infinity when h < 0).
int h1_oracle(const ProjArrangement& p, const TorusPoint& q, Backend backend = {}, int h = -1);

struct ScanOptions {
  std::uint64_t budget = 20'000'000;  // maximum number of enumerated exponent vectors
  Backend backend{};
};

struct ScanHit {
  TorusPoint point;
  int h1 = 0;
};

struct ScanResult {
  int order = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t trivial = 0;
  std::vector<ScanHit> hits;  // sorted by exponent vector
};

/// Torsion points of order dividing N with h1 >= 1. Exponents of the lines
/// other than the arrangement's infinity are enumerated; the infinity
/// exponent is derived from the torus constraint.
ScanResult torsion_scan(const ProjArrangement& p, int order, ScanOptions options = {});
/// Single-threaded reference for `torsion_scan`.
ScanResult torsion_scan_serial(const ProjArrangement& p, int order, ScanOptions options = {});

/// All torus points of order dividing N, in enumeration order.
std::vector<TorusPoint> torsion_points(const ProjArrangement& p, int order, std::uint64_t budget = 20'000'000);

struct MembershipSample {
  std::vector<int> params;
  TorusPoint point;
  int h1 = 0;
};

struct MembershipVerdict {
  std::string family;
  int order = 0;
  std::vector<MembershipSample> samples;
  bool supported = false;  // h1 >= 1 at every sample
};

MembershipVerdict component_membership(const ComponentFamily& family, int order,
                                       const std::vector<std::vector<int>>& samples, const ProjArrangement& p,
                                       Backend backend = {});

struct SamplePlan {
  int order = 0;
  std::vector<int> params;
};

/// Three sample parameter choices per family, at distinct orders up to 20,
/// with every parametrized coordinate nontrivial.
std::vector<SamplePlan> membership_samples(const ComponentFamily& family);

std::string format_exponents(const TorusPoint& q);
/// One tab-separated record per hit: order, exponents, h1, families.
std::string format_scan(const ScanResult& r, const std::vector<ComponentFamily>& catalog);

}  // namespace locsys
