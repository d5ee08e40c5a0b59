#include "locsys/res_band.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace locsys {

std::vector<Band> bands(const std::vector<Line>& lines, const std::vector<Chamber>& chambers) {
  const int n = static_cast<int>(lines.size());
  // Canonical scaling makes parallel lines share (a, b); group on that.
  std::map<std::pair<Rational, Rational>, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[{lines[i].a, lines[i].b}].push_back(i);

  std::vector<Band> out;
  for (auto& [dir, members] : classes) {
    if (members.size() < 2) continue;
    // Position along the common normal is -c; sort increasing.
    std::sort(members.begin(), members.end(), [&](int i, int j) { return lines[i].c > lines[j].c; });
    LineSet direction = bit(n);
    for (int i : members) direction |= bit(i);
    for (std::size_t k = 0; k + 1 < members.size(); ++k) {
      Band b;
      b.lower = members[k];
      b.upper = members[k + 1];
      b.direction = direction;
      b.infinity_point = canonical({dir.second, Rational(-dir.first), Rational(0)});
      std::vector<int> ends;
      for (int c = 0; c < static_cast<int>(chambers.size()); ++c) {
        const LineSet s = chambers[c].signs;
        if (!contains(s, b.lower) || contains(s, b.upper)) continue;
        b.inner.push_back(c);
        if (!chambers[c].bounded) ends.push_back(c);
      }
      if (ends.size() != 2) throw std::logic_error("band without exactly two unbounded chambers");
      // chambers are sorted by sign vector, so ends[0] is the smaller one
      b.u1 = ends[0];
      b.u2 = ends[1];
      out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), [](const Band& x, const Band& y) {
    return std::pair(x.lower, x.upper) < std::pair(y.lower, y.upper);
  });
  return out;
}

BandData analyze_bands(std::vector<Line> lines) {
  BandData data;
  data.chambers = chambers(lines);
  data.bands = bands(lines, data.chambers);
  data.lines = std::move(lines);
  return data;
}

BandData analyze_bands(const FlaggedArrangement& fa) {
  BandData data;
  data.lines = fa.lines;
  data.chambers = fa.chambers;
  data.bands = bands(data.lines, data.chambers);
  return data;
}

std::vector<int> resonant_bands_by_point(const LocalSystem& system, const BandData& data) {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(data.bands.size()); ++b)
    if (system.product_is_one(data.bands[b].direction)) out.push_back(b);
  return out;
}

std::vector<std::pair<int, DeltaTerm>> standing_wave(const BandData& data, const Band& band, int from) {
  const Chamber& u = data.chambers[from == 2 ? band.u2 : band.u1];
  std::vector<std::pair<int, DeltaTerm>> wave;
  for (int c : band.inner) wave.emplace_back(c, DeltaTerm{1, sep(u, data.chambers[c])});
  return wave;
}

int h1_via_bands(const LocalSystem& system, const BandData& data, Backend backend) {
  return with_field(system, backend, [&](const auto& field) {
    const Twist twist(field, system);
    return h1_via_bands(twist, data, false).dimension;
  });
}

}  // namespace locsys
