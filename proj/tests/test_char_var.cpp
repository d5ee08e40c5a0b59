#include <doctest.h>

#include <set>

#include "locsys/certificates.hpp"
#include "locsys/char_var.hpp"
#include "support.hpp"

using namespace locsys;

namespace {

std::set<LineSet> multiple_points_on(const ProjArrangement& p, int line) {
  std::set<LineSet> out;
  for (const auto& x : intersections(p))
    if (x.is_multiple() && contains(x.incident, line)) out.insert(x.incident);
  return out;
}

LineSet ids(std::initializer_list<int> one_based) {
  LineSet s = 0;
  for (int i : one_based) s |= bit(i - 1);
  return s;
}

}  // namespace

TEST_CASE("deleted B3 incidences") {
  const auto b3 = deleted_b3();
  CHECK(b3.arrangement.size() == 8);
  CHECK(b3.arrangement.infinity == 7);
  CHECK(b3.catalog.size() == 13);
  CHECK(multiple_points_on(b3.arrangement, 4) == std::set<LineSet>{ids({2, 3, 5}), ids({5, 6, 7, 8})});
  CHECK(multiple_points_on(b3.arrangement, 7) ==
        std::set<LineSet>{ids({1, 2, 8}), ids({3, 4, 8}), ids({5, 6, 7, 8})});
}

TEST_CASE("catalog families lie on the torus and contain their points") {
  for (const auto& f : deleted_b3().catalog) {
    INFO(f.name);
    CHECK(f.size() == 8);
    for (const auto& plan : membership_samples(f)) {
      const auto q = f.point(plan.order, plan.params);
      CHECK(q.size() == 8);
      CHECK(f.contains(q));
    }
  }
}

TEST_CASE("the translated component passes through q-") {
  const auto b3 = deleted_b3();
  const auto it = std::find_if(b3.catalog.begin(), b3.catalog.end(), [](const auto& f) { return f.parameters == 1 && f.torsion != std::vector<int>(8, 0); });
  REQUIRE(it != b3.catalog.end());
  const std::vector<int> one{1};
  CHECK(it->point(2, one) == TorusPoint::torsion(2, {1, 0, 0, 1, 0, 1, 0, 1}));
  CHECK_THROWS_AS(it->point(3, one), Error);
  CHECK(it->contains(TorusPoint::torsion(2, {1, 0, 0, 1, 0, 1, 0, 1})));
  // s = 1 gives q+, so both double-point systems lie on this component.
  CHECK(it->point(2, std::vector<int>{0}) == TorusPoint::torsion(2, {0, 1, 1, 0, 0, 1, 0, 1}));
  CHECK_FALSE(it->contains(TorusPoint::torsion(2, {1, 1, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("order one has no hits") {
  const auto r = torsion_scan(deleted_b3().arrangement, 1);
  CHECK(r.enumerated == 1);
  CHECK(r.trivial == 1);
  CHECK(r.hits.empty());
}

TEST_CASE("parallel scan equals the serial reference") {
  const auto p = deleted_b3().arrangement;
  for (int order : {2, 3}) {
    const auto a = torsion_scan(p, order);
    const auto b = torsion_scan_serial(p, order);
    CHECK(a.enumerated == b.enumerated);
    CHECK(a.trivial == b.trivial);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
      CHECK(a.hits[i].point == b.hits[i].point);
      CHECK(a.hits[i].h1 == b.hits[i].h1);
    }
  }
}

TEST_CASE("scans stop at the budget") {
  try {
    torsion_scan(deleted_b3().arrangement, 4, {.budget = 10});
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget);
  }
  CHECK_THROWS_AS(torsion_points(deleted_b3().arrangement, 4, 10), Error);
  CHECK(torsion_points(deleted_b3().arrangement, 2).size() == 128);
}

TEST_CASE("scan hits do not depend on the backend") {
  const auto p = deleted_b3().arrangement;
  const auto a = torsion_scan(p, 2);
  const auto b = torsion_scan(p, 2, {.backend = {BackendKind::complex}});
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].point == b.hits[i].point);
    CHECK(a.hits[i].h1 == b.hits[i].h1);
  }
}

TEST_CASE("h1 is the same seen from every non-resonant line") {
  const auto p = deleted_b3().arrangement;
  const ChartCache cache(p);
  for (const auto& q : torsion_points(p, 3)) {
    if (q.is_trivial()) continue;
    const int h1 = h1_at(cache, q);
    for (int h = 0; h < p.size(); ++h) {
      if (q.resonant(h)) continue;
      auto data = cache.bands(h);
      CHECK(h1_via_bands(q.on_chart(cache.chart(h)), data) == h1);
    }
    CHECK(h1_oracle(p, q, {}, first_non_resonant(q)) == h1);
  }
}

TEST_CASE("trivial point falls back to the full complex") {
  const auto p = deleted_b3().arrangement;
  const auto q = TorusPoint::torsion(3, std::vector<int>(8, 0));
  CHECK(first_non_resonant(q) == -1);
  // Trivial system: h1 = n on any chart.
  CHECK(h1_at(p, q) == 7);
}

TEST_CASE("order-two hits are the catalog points") {
  const auto b3 = deleted_b3();
  const auto scan = torsion_scan(b3.arrangement, 2);
  std::set<std::vector<int>> hits, catalog;
  for (const auto& h : scan.hits) hits.insert(h.point.exponents());
  for (const auto& q : torsion_points(b3.arrangement, 2))
    if (!q.is_trivial() && !matching_families(b3.catalog, q).empty()) catalog.insert(q.exponents());
  CHECK(hits == catalog);
  CHECK(hits.size() == 36);
}

TEST_CASE("every family is supported at its samples") {
  const auto b3 = deleted_b3();
  for (const auto& f : b3.catalog) {
    INFO(f.name);
    const auto plans = membership_samples(f);
    CHECK(plans.size() == 3);
    std::set<int> orders;
    for (const auto& plan : plans) {
      orders.insert(plan.order);
      CHECK(plan.order <= 20);
      const auto v = component_membership(f, plan.order, {plan.params}, b3.arrangement);
      CHECK(v.supported);
      REQUIRE(v.samples.size() == 1);
      if (f.generic_h1) CHECK(v.samples[0].h1 == *f.generic_h1);
      for (int i = 0; i < 8; ++i)
        if (!f.coefficients[i].empty() && std::any_of(f.coefficients[i].begin(), f.coefficients[i].end(), [](int c) { return c != 0; }))
          CHECK_FALSE(v.samples[0].point.resonant(i));
    }
    CHECK(orders.size() == 3);
  }
}

TEST_CASE("scan report format") {
  const auto b3 = deleted_b3();
  const auto text = format_scan(torsion_scan(b3.arrangement, 2), b3.catalog);
  CHECK(text.rfind("# order\texponents\th1\tfamilies\n", 0) == 0);
  CHECK(text.find("\n2\t0,1,1,0,0,1,0,1\t2\t") != std::string::npos);
  CHECK(text.find("# enumerated 128, trivial 1, hits 36") != std::string::npos);
}
