#include "locsys/char_var.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "locsys/min_complex.hpp"

namespace locsys {

namespace {

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

ComponentFamily local_component(std::vector<int> ids, int generic_h1) {
  // q_{i_1} = s_1, ..., q_{i_{k-1}} = s_{k-1}, q_{i_k} = (s_1...s_{k-1})^{-1}.
  const int k = static_cast<int>(ids.size());
  ComponentFamily f;
  f.name = "C_";
  for (int i : ids) f.name += std::to_string(i + 1);
  f.parameters = k - 1;
  f.coefficients.assign(8, std::vector<int>(k - 1, 0));
  f.torsion.assign(8, 0);
  for (int j = 0; j + 1 < k; ++j) {
    f.coefficients[ids[j]][j] = 1;
    f.coefficients[ids[k - 1]][j] = -1;
  }
  f.generic_h1 = generic_h1;
  return f;
}

ComponentFamily braid_component(int a, int b, int c, int d, int e, int g) {
  ComponentFamily f;
  f.name = "C_(" + std::to_string(a + 1) + std::to_string(b + 1) + "|" + std::to_string(c + 1) +
           std::to_string(d + 1) + "|" + std::to_string(e + 1) + std::to_string(g + 1) + ")";
  f.parameters = 2;
  f.coefficients.assign(8, std::vector<int>(2, 0));
  f.torsion.assign(8, 0);
  f.coefficients[a] = f.coefficients[b] = {1, 0};
  f.coefficients[c] = f.coefficients[d] = {0, 1};
  f.coefficients[e] = f.coefficients[g] = {-1, -1};
  f.generic_h1 = 1;
  return f;
}

TorusPoint point_at(const ProjArrangement& p, int order, std::uint64_t index, const std::vector<int>& free_lines,
                    int infinity) {
  std::vector<int> e(p.size(), 0);
  long sum = 0;
  for (auto it = free_lines.rbegin(); it != free_lines.rend(); ++it) {
    e[*it] = static_cast<int>(index % order);
    sum += e[*it];
    index /= order;
  }
  e[infinity] = mod(-sum, order);
  return TorusPoint::torsion(order, std::move(e));
}

struct Enumeration {
  int infinity = -1;
  std::vector<int> free_lines;
  std::uint64_t count = 1;
};

Enumeration plan(const ProjArrangement& p, int order, std::uint64_t budget) {
  if (order < 1) fail(ErrorKind::precondition, "torsion order must be at least 1");
  if (p.size() < 1) fail(ErrorKind::precondition, "empty arrangement");
  Enumeration en;
  en.infinity = p.infinity >= 0 ? p.infinity : p.size() - 1;
  for (int i = 0; i < p.size(); ++i)
    if (i != en.infinity) en.free_lines.push_back(i);
  for (std::size_t i = 0; i < en.free_lines.size(); ++i) {
    if (en.count > budget / static_cast<std::uint64_t>(order))
      fail(ErrorKind::budget, "scan of " + std::to_string(order) + "^" + std::to_string(en.free_lines.size()) +
                                  " points exceeds the budget of " + std::to_string(budget));
    en.count *= static_cast<std::uint64_t>(order);
  }
  if (en.count > budget) fail(ErrorKind::budget, "scan exceeds the budget of " + std::to_string(budget));
  return en;
}

bool exponent_less(const ScanHit& a, const ScanHit& b) { return a.point.exponents() < b.point.exponents(); }

}  // namespace

TorusPoint ComponentFamily::point(int order, std::span<const int> params) const {
  if (static_cast<int>(params.size()) != parameters) fail(ErrorKind::precondition, "wrong number of parameters for " + name);
  const bool translated = std::any_of(torsion.begin(), torsion.end(), [](int t) { return t != 0; });
  if (translated && order % 2 != 0) fail(ErrorKind::precondition, name + " needs an even order");
  std::vector<int> e(size(), 0);
  for (int i = 0; i < size(); ++i) {
    long v = torsion[i] * (order / 2);
    for (int j = 0; j < parameters; ++j) v += static_cast<long>(coefficients[i][j]) * params[j];
    e[i] = mod(v, order);
  }
  return TorusPoint::torsion(order, std::move(e));
}

bool ComponentFamily::contains(const TorusPoint& q) const {
  if (!q.is_torsion()) fail(ErrorKind::precondition, "membership is decided for torsion points only");
  if (q.size() != size()) return false;
  const int m = 2 * q.order();
  std::vector<int> target(size());
  for (int i = 0; i < size(); ++i) target[i] = mod(2L * q.exponents()[i], m);
  std::vector<int> s(parameters, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < size() && ok; ++i) {
      long v = static_cast<long>(torsion[i]) * q.order();
      for (int j = 0; j < parameters; ++j) v += static_cast<long>(coefficients[i][j]) * s[j];
      ok = mod(v, m) == target[i];
    }
    if (ok) return true;
    int j = 0;
    while (j < parameters && ++s[j] == m) s[j++] = 0;
    if (j == parameters) return false;
  }
}

DeletedB3 deleted_b3() {
  DeletedB3 out;
  out.arrangement.lines = {
      {0, 1, 0},   // y = 0
      {0, 1, -1},  // y - z = 0
      {1, 0, 0},   // x = 0
      {1, 0, -1},  // x - z = 0
      {1, -1, 1},  // x - y + z = 0
      {1, -1, 0},  // x - y = 0
      {1, -1, -1}, // x - y - z = 0
      {0, 0, 1},   // z = 0
  };
  out.arrangement.infinity = 7;
  auto& c = out.catalog;
  for (const auto& ids : std::vector<std::vector<int>>{{0, 2, 5}, {0, 3, 6}, {1, 2, 4}, {0, 1, 7}, {1, 3, 5}, {2, 3, 7}})
    c.push_back(local_component(ids, 1));
  c.push_back(local_component({4, 5, 6, 7}, 2));
  c.push_back(braid_component(0, 3, 1, 2, 5, 7));
  c.push_back(braid_component(1, 7, 2, 5, 3, 4));
  c.push_back(braid_component(0, 4, 1, 5, 2, 7));
  c.push_back(braid_component(0, 7, 2, 6, 3, 5));
  c.push_back(braid_component(0, 5, 1, 6, 3, 7));

  // (s, -s^{-1}, -s^{-1}, s, s^2, -1, s^{-2}, -1)
  ComponentFamily omega;
  omega.name = "Omega";
  omega.parameters = 1;
  omega.coefficients = {{1}, {-1}, {-1}, {1}, {2}, {0}, {-2}, {0}};
  omega.torsion = {0, 1, 1, 0, 0, 1, 0, 1};
  c.push_back(std::move(omega));
  return out;
}

std::vector<std::string> matching_families(const std::vector<ComponentFamily>& catalog, const TorusPoint& q) {
  std::vector<std::string> out;
  for (const auto& f : catalog)
    if (f.contains(q)) out.push_back(f.name);
  return out;
}

ChartCache::ChartCache(const ProjArrangement& p) : p_(p) {
  for (int h = 0; h < p.size(); ++h) {
    charts_.push_back(move_to_infinity(p, h));
    bands_.push_back(analyze_bands(charts_.back().lines));
  }
}

int first_non_resonant(const TorusPoint& q) {
  for (int h = 0; h < q.size(); ++h)
    if (!q.resonant(h)) return h;
  return -1;
}

int h1_at(const ChartCache& cache, const TorusPoint& q, Backend backend) {
  if (q.size() != cache.arrangement().size()) fail(ErrorKind::precondition, "torus point and arrangement sizes disagree");
  const int h = first_non_resonant(q);
  if (h < 0) return h1_oracle(cache.arrangement(), q, backend);
  return h1_via_bands(q.on_chart(cache.chart(h)), cache.bands(h), backend);
}

int h1_at(const ProjArrangement& p, const TorusPoint& q, Backend backend) {
  const int h = first_non_resonant(q);
  if (h < 0) return h1_oracle(p, q, backend);
  const Chart chart = move_to_infinity(p, h);
  return h1_via_bands(q.on_chart(chart), analyze_bands(chart.lines), backend);
}

int h1_oracle(const ProjArrangement& p, const TorusPoint& q, Backend backend, int h) {
  if (q.size() != p.size()) fail(ErrorKind::precondition, "torus point and arrangement sizes disagree");
  if (h < 0) h = p.infinity >= 0 ? p.infinity : p.size() - 1;
  const Chart chart = move_to_infinity(p, h);
  return cohomology_dims(q.on_chart(chart), choose_flag(chart.lines), backend).h1;
}

std::vector<TorusPoint> torsion_points(const ProjArrangement& p, int order, std::uint64_t budget) {
  const Enumeration en = plan(p, order, budget);
  std::vector<TorusPoint> out;
  out.reserve(en.count);
  for (std::uint64_t i = 0; i < en.count; ++i) out.push_back(point_at(p, order, i, en.free_lines, en.infinity));
  return out;
}

ScanResult torsion_scan_serial(const ProjArrangement& p, int order, ScanOptions options) {
  const Enumeration en = plan(p, order, options.budget);
  const ChartCache cache(p);
  ScanResult r;
  r.order = order;
  r.enumerated = en.count;
  for (std::uint64_t i = 0; i < en.count; ++i) {
    TorusPoint q = point_at(p, order, i, en.free_lines, en.infinity);
    if (q.is_trivial()) {
      ++r.trivial;
      continue;
    }
    const int h1 = h1_at(cache, q, options.backend);
    if (h1 > 0) r.hits.push_back({std::move(q), h1});
  }
  std::sort(r.hits.begin(), r.hits.end(), exponent_less);
  return r;
}

ScanResult torsion_scan(const ProjArrangement& p, int order, ScanOptions options) {
  const Enumeration en = plan(p, order, options.budget);
  const ChartCache cache(p);
  ScanResult r;
  r.order = order;
  r.enumerated = en.count;
  std::exception_ptr error;
  const auto count = static_cast<long long>(en.count);
#pragma omp parallel
  {
    std::vector<ScanHit> local;
    std::uint64_t trivial = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < count; ++i) {
      try {
        TorusPoint q = point_at(p, order, static_cast<std::uint64_t>(i), en.free_lines, en.infinity);
        if (q.is_trivial()) {
          ++trivial;
          continue;
        }
        const int h1 = h1_at(cache, q, options.backend);
        if (h1 > 0) local.push_back({std::move(q), h1});
      } catch (...) {
#pragma omp critical(locsys_scan_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(locsys_scan_merge)
    {
      r.trivial += trivial;
      r.hits.insert(r.hits.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
  }
  if (error) std::rethrow_exception(error);
  std::sort(r.hits.begin(), r.hits.end(), exponent_less);
  return r;
}

MembershipVerdict component_membership(const ComponentFamily& family, int order,
                                       const std::vector<std::vector<int>>& samples, const ProjArrangement& p,
                                       Backend backend) {
  if (family.size() != p.size()) fail(ErrorKind::precondition, family.name + " does not match the arrangement");
  MembershipVerdict v;
  v.family = family.name;
  v.order = order;
  v.supported = !samples.empty();
  for (const auto& params : samples) {
    TorusPoint q = family.point(order, params);
    const int h1 = h1_at(p, q, backend);
    if (h1 < 1) v.supported = false;
    v.samples.push_back({params, std::move(q), h1});
  }
  return v;
}

std::vector<SamplePlan> membership_samples(const ComponentFamily& family) {
  const bool translated = std::any_of(family.torsion.begin(), family.torsion.end(), [](int t) { return t != 0; });
  if (translated) {
    // s a primitive 5th, 7th and 20th root of unity.
    std::vector<int> p(family.parameters, 2);
    std::vector<int> q(family.parameters, 1);
    return {{10, p}, {14, p}, {20, q}};
  }
  std::vector<int> p(family.parameters);
  for (int j = 0; j < family.parameters; ++j) p[j] = j + 1;
  return {{5, p}, {7, p}, {11, p}};
}

std::string format_exponents(const TorusPoint& q) {
  std::ostringstream os;
  for (int i = 0; i < q.size(); ++i) os << (i ? "," : "") << q.exponents()[i];
  return os.str();
}

std::string format_scan(const ScanResult& r, const std::vector<ComponentFamily>& catalog) {
  std::ostringstream os;
  os << "# order\texponents\th1\tfamilies\n";
  for (const auto& hit : r.hits) {
    os << r.order << "\t" << format_exponents(hit.point) << "\t" << hit.h1 << "\t";
    const auto names = catalog.empty() ? std::vector<std::string>{} : matching_families(catalog, hit.point);
    if (names.empty()) os << "-";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
    os << "\n";
  }
  os << "# enumerated " << r.enumerated << ", trivial " << r.trivial << ", hits " << r.hits.size() << "\n";
  return os.str();
}

}  // namespace locsys
