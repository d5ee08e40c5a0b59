#include <doctest.h>

#include <random>

#include "locsys/certificates.hpp"
#include "support.hpp"

using namespace locsys;

namespace {

const Certificate& on_line(const CertificateReport& r, int line) {
  for (const auto& c : r.certificates)
    if (c.line == line) return c;
  FAIL("no certificate for line " << line);
  throw;
}

TorusPoint random_point(std::mt19937& rng, int size, int order) {
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<int> e(size);
  long s = 0;
  for (int i = 0; i + 1 < size; ++i) s += e[i] = pick(rng);
  e.back() = static_cast<int>(((-s) % order + order) % order);
  return TorusPoint::torsion(order, e);
}

}  // namespace

TEST_CASE("deleted B3 certificates on H5") {
  const auto b3 = deleted_b3().arrangement;
  {
    const auto r = vanishing_certificates(TorusPoint::torsion(5, {1, 0, 0, 0, 1, 0, 0, 3}), b3);
    const auto& c = on_line(r, 4);
    CHECK(c.kind == CertificateKind::no_resonant_point);
    CHECK(c.dimension == 0);
  }
  {
    const auto r = vanishing_certificates(TorusPoint::torsion(5, {0, 0, 0, 0, 1, 2, 3, 4}), b3);
    const auto& c = on_line(r, 4);
    CHECK(c.kind == CertificateKind::unique_resonant_point);
    CHECK(c.witness->incident == 0b11110000);
    CHECK(c.dimension == 2);
    CHECK(r.dimension() == 2);
  }
  {
    const auto r = vanishing_certificates(TorusPoint::torsion(5, {0, 1, 2, 0, 2, 0, 0, 0}), b3);
    const auto& c = on_line(r, 4);
    CHECK(c.kind == CertificateKind::unique_resonant_point);
    CHECK(c.witness->incident == 0b00010110);
    CHECK(c.dimension == 1);
  }
  {
    // q+ : every non-resonant line carries at least two resonant points.
    const auto q = TorusPoint::torsion(2, {0, 1, 1, 0, 0, 1, 0, 1});
    const auto r = vanishing_certificates(q, b3);
    CHECK_FALSE(r.dimension());
    CHECK(sharp_pairs(q, b3).hypothesis);
  }
}

TEST_CASE("the first vertical and the line at infinity form a sharp pair") {
  const auto p = cone(testing::grid());
  CHECK(region_is_empty(p, 0, 11));
  // The strip between the first two verticals only meets intersections on its boundary.
  CHECK(region_is_empty(p, 0, 1));
  CHECK_FALSE(region_is_empty(p, 4, 11));
  const auto q = TorusPoint::torsion(3, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2});
  const auto sharp = sharp_pairs(q, p);
  REQUIRE(sharp.pairs.size() == 1);
  CHECK(sharp.pairs[0].first == 0);
  CHECK(sharp.pairs[0].second == 11);
  CHECK_FALSE(sharp.hypothesis);
  CHECK(sharp.pairs[0].bound == SharpBound::none);
}

TEST_CASE("certificates and bounds agree with the full complex") {
  std::mt19937 rng(3);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    const auto p = cone(testing::random_arrangement(rng, n));
    const auto q = random_point(rng, p.size(), 2 + trial % 3);
    if (q.is_trivial()) continue;
    const int h1 = h1_oracle(p, q);
    const auto r = vanishing_certificates(q, p);
    for (const auto& c : r.certificates)
      if (c.dimension) {
        CHECK(*c.dimension == h1);
        ++certified;
      }
    const auto sharp = sharp_pairs(q, p);
    for (const auto& s : sharp.pairs) {
      if (s.bound == SharpBound::zero) CHECK(h1 == 0);
      if (s.bound == SharpBound::at_most_one) CHECK(h1 <= 1);
    }
    if (h1 >= 2 && sharp.hypothesis) CHECK(sharp.pairs.empty());
  }
  CHECK(certified > 100);
}

TEST_CASE("no sharp-pair conclusion without the resonant-point hypothesis") {
  // q_1 = q_5 = 1 on the five-line example: h1 = 2 although (H_2, H_inf)
  // is a sharp pair of non-resonant lines; H_inf has one resonant point.
  const auto p = cone(testing::five_lines());
  const auto q = TorusPoint::torsion(4, {0, 1, 3, 2, 0, 2});
  CHECK(h1_oracle(p, q) == 2);
  const auto sharp = sharp_pairs(q, p);
  CHECK_FALSE(sharp.hypothesis);
  CHECK(std::any_of(sharp.pairs.begin(), sharp.pairs.end(),
                    [](const SharpPair& s) { return s.first == 1 && s.second == 5; }));
  for (const auto& s : sharp.pairs) CHECK(s.bound == SharpBound::none);
}

TEST_CASE("reports name lines from 1") {
  const auto b3 = deleted_b3().arrangement;
  const auto q = TorusPoint::torsion(5, {0, 0, 0, 0, 1, 2, 3, 4});
  const auto text = format_certificates(vanishing_certificates(q, b3));
  CHECK(text.find("line 5: resonant_points=1 certificate=unique-resonant-point witness={5,6,7,8}") !=
        std::string::npos);
  CHECK(format_sharp_pairs(sharp_pairs(q, b3)).rfind("hypothesis", 0) == 0);
}
