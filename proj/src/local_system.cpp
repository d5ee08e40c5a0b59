#include "locsys/local_system.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace locsys {

namespace {

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::complex<double> unit_root(long k, int order) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(k, order)) / order);
}

}  // namespace

LocalSystem LocalSystem::torsion(int order, std::vector<int> exponents) {
  if (order < 1) fail(ErrorKind::precondition, "torsion order must be at least 1");
  for (auto& e : exponents) e = mod(e, order);
  return from_half_exponents(order, std::move(exponents));
}

LocalSystem LocalSystem::from_half_exponents(int order, std::vector<int> half_exponents) {
  if (order < 1) fail(ErrorKind::precondition, "torsion order must be at least 1");
  LocalSystem ls;
  ls.order_ = order;
  for (auto& k : half_exponents) k = mod(k, 2 * order);
  ls.halves_ = std::move(half_exponents);
  return ls;
}

LocalSystem LocalSystem::complex(std::vector<std::complex<double>> monodromies, double tolerance) {
  LocalSystem ls;
  ls.tolerance_ = tolerance;
  for (const auto& q : monodromies) {
    if (std::abs(q) <= tolerance) fail(ErrorKind::precondition, "monodromy must be nonzero");
    ls.complex_halves_.push_back(std::sqrt(q));
  }
  return ls;
}

LocalSystem LocalSystem::with_flipped_roots(LineSet which) const {
  LocalSystem out = *this;
  if (is_torsion()) {
    for (int i = 0; i < static_cast<int>(out.halves_.size()); ++i)
      if (contains(which, i)) out.halves_[i] = mod(out.halves_[i] + order_, 2 * order_);
  } else {
    for (int i = 0; i < static_cast<int>(out.complex_halves_.size()); ++i)
      if (contains(which, i)) out.complex_halves_[i] = -out.complex_halves_[i];
  }
  return out;
}

LocalSystem LocalSystem::with_flipped_roots() const { return with_flipped_roots(~LineSet{0}); }

int LocalSystem::exponent(int i) const {
  if (!is_torsion()) fail(ErrorKind::precondition, "exponents exist only for torsion systems");
  return halves_[i] % order_;
}

std::complex<double> LocalSystem::monodromy(int i) const {
  if (is_torsion()) return unit_root(halves_[i], order_);
  return complex_halves_[i] * complex_halves_[i];
}

std::complex<double> LocalSystem::infinity_monodromy() const {
  std::complex<double> prod{1.0, 0.0};
  for (int i = 0; i < size(); ++i) prod *= monodromy(i);
  return 1.0 / prod;
}

bool LocalSystem::product_is_one(LineSet coned) const {
  const int n = size();
  if (is_torsion()) {
    long e = 0;
    for (int i = 0; i < n; ++i)
      if (contains(coned, i)) e += halves_[i];
    if (contains(coned, n))
      for (int i = 0; i < n; ++i) e -= halves_[i];
    return mod(e, order_) == 0;
  }
  std::complex<double> prod{1.0, 0.0};
  for (int i = 0; i < n; ++i)
    if (contains(coned, i)) prod *= monodromy(i);
  if (contains(coned, n)) prod *= infinity_monodromy();
  return std::abs(prod - 1.0) <= tolerance_;
}

bool LocalSystem::is_trivial() const {
  for (int i = 0; i < size(); ++i)
    if (!product_is_one(bit(i))) return false;
  return true;
}

std::string LocalSystem::convention() const {
  std::ostringstream os;
  if (is_torsion()) {
    os << "q_i = zeta_" << order_ << "^e_i, q_i^{1/2} = zeta_" << 2 * order_ << "^k_i with k =";
    for (int k : halves_) os << " " << k;
  } else {
    os << "principal square roots of the given monodromies";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

TorusPoint TorusPoint::torsion(int order, std::vector<int> exponents) {
  if (order < 1) fail(ErrorKind::precondition, "torsion order must be at least 1");
  long total = 0;
  for (auto& e : exponents) {
    e = mod(e, order);
    total += e;
  }
  if (mod(total, order) != 0) fail(ErrorKind::precondition, "torus point violates prod q_H = 1");
  TorusPoint t;
  t.order_ = order;
  t.exponents_ = std::move(exponents);
  return t;
}

TorusPoint TorusPoint::complex(std::vector<std::complex<double>> monodromies, double tolerance) {
  std::complex<double> prod{1.0, 0.0};
  for (const auto& q : monodromies) {
    if (std::abs(q) <= tolerance) fail(ErrorKind::precondition, "monodromy must be nonzero");
    prod *= q;
  }
  if (std::abs(prod - 1.0) > tolerance * 10) fail(ErrorKind::precondition, "torus point violates prod q_H = 1");
  TorusPoint t;
  t.tolerance_ = tolerance;
  t.values_ = std::move(monodromies);
  return t;
}

TorusPoint TorusPoint::of(const LocalSystem& system) {
  const int n = system.size();
  if (system.is_torsion()) {
    std::vector<int> e(n + 1);
    long total = 0;
    for (int i = 0; i < n; ++i) {
      e[i] = system.exponent(i);
      total += e[i];
    }
    e[n] = mod(-total, system.order());
    return torsion(system.order(), std::move(e));
  }
  std::vector<std::complex<double>> v;
  for (int i = 0; i < n; ++i) v.push_back(system.monodromy(i));
  v.push_back(system.infinity_monodromy());
  return complex(std::move(v), system.tolerance());
}

bool TorusPoint::product_is_one(LineSet lines) const {
  if (is_torsion()) {
    long e = 0;
    for (int i = 0; i < size(); ++i)
      if (contains(lines, i)) e += exponents_[i];
    return mod(e, order_) == 0;
  }
  std::complex<double> prod{1.0, 0.0};
  for (int i = 0; i < size(); ++i)
    if (contains(lines, i)) prod *= values_[i];
  return std::abs(prod - 1.0) <= tolerance_;
}

bool TorusPoint::is_trivial() const {
  for (int i = 0; i < size(); ++i)
    if (!resonant(i)) return false;
  return true;
}

std::complex<double> TorusPoint::value(int line) const {
  if (is_torsion()) return unit_root(exponents_[line], order_);
  return values_[line];
}

LocalSystem TorusPoint::on_chart(const Chart& chart, bool flip) const {
  if (static_cast<int>(chart.proj_ids.size()) + 1 != size())
    fail(ErrorKind::precondition, "torus point and chart sizes disagree");
  LocalSystem ls;
  if (is_torsion()) {
    std::vector<int> e;
    for (int id : chart.proj_ids) e.push_back(exponents_[id]);
    ls = LocalSystem::torsion(order_, std::move(e));
  } else {
    std::vector<std::complex<double>> v;
    for (int id : chart.proj_ids) v.push_back(values_[id]);
    ls = LocalSystem::complex(std::move(v), tolerance_);
  }
  return flip ? ls.with_flipped_roots() : ls;
}

// ---------------------------------------------------------------------------

namespace {

struct ParsedSpec {
  bool torsion = false;
  int order = 0;
  std::vector<int> exponents;
  std::vector<std::complex<double>> values;
};

ParsedSpec parse_spec(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos) fail(ErrorKind::parse, "local system spec needs a ';'");
  std::istringstream head{std::string(spec.substr(0, semi))};
  std::istringstream body{std::string(spec.substr(semi + 1))};
  std::string kind;
  head >> kind;
  ParsedSpec out;
  if (kind == "torsion") {
    out.torsion = true;
    if (!(head >> out.order) || out.order < 1) fail(ErrorKind::parse, "torsion order must be a positive integer");
    std::string tok;
    while (body >> tok) {
      try {
        std::size_t used = 0;
        out.exponents.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(ErrorKind::parse, "malformed exponent '" + tok + "'");
      }
    }
  } else if (kind == "complex") {
    std::vector<double> xs;
    std::string tok;
    while (body >> tok) {
      try {
        xs.push_back(std::stod(tok));
      } catch (const std::exception&) {
        fail(ErrorKind::parse, "malformed number '" + tok + "'");
      }
    }
    if (xs.size() % 2) fail(ErrorKind::parse, "complex spec needs re im pairs");
    for (std::size_t i = 0; i < xs.size(); i += 2) out.values.emplace_back(xs[i], xs[i + 1]);
  } else {
    fail(ErrorKind::parse, "local system kind must be 'torsion N' or 'complex'");
  }
  return out;
}

}  // namespace

LocalSystem parse_local_system(std::string_view spec) {
  auto p = parse_spec(spec);
  if (p.torsion) return LocalSystem::torsion(p.order, std::move(p.exponents));
  return LocalSystem::complex(std::move(p.values));
}

TorusPoint parse_torus_point(std::string_view spec, const ProjArrangement& arr) {
  auto p = parse_spec(spec);
  const std::size_t total = static_cast<std::size_t>(arr.size());
  const std::size_t given = p.torsion ? p.exponents.size() : p.values.size();
  if (given == total) {
    if (p.torsion) return TorusPoint::torsion(p.order, std::move(p.exponents));
    return TorusPoint::complex(std::move(p.values));
  }
  if (given + 1 != total) fail(ErrorKind::parse, "local system size does not match the arrangement");
  // Values are listed for the affine lines in id order; infinity is forced.
  if (p.torsion) {
    std::vector<int> e;
    long sum = 0;
    std::size_t k = 0;
    for (int id = 0; id < arr.size(); ++id) {
      if (id == arr.infinity) {
        e.push_back(0);
        continue;
      }
      e.push_back(p.exponents[k++]);
      sum += e.back();
    }
    e[arr.infinity] = mod(-sum, p.order);
    return TorusPoint::torsion(p.order, std::move(e));
  }
  std::vector<std::complex<double>> v;
  std::complex<double> prod{1.0, 0.0};
  std::size_t k = 0;
  for (int id = 0; id < arr.size(); ++id) {
    if (id == arr.infinity) {
      v.emplace_back(1.0, 0.0);
      continue;
    }
    v.push_back(p.values[k++]);
    prod *= v.back();
  }
  v[arr.infinity] = 1.0 / prod;
  return TorusPoint::complex(std::move(v));
}

ResonanceReport resonance_report(const TorusPoint& q, const ProjArrangement& p) {
  if (q.size() != p.size()) fail(ErrorKind::precondition, "torus point and arrangement sizes disagree");
  ResonanceReport r;
  for (int i = 0; i < p.size(); ++i)
    if (q.resonant(i)) r.resonant_lines |= bit(i);
  for (auto& x : intersections(p))
    if (x.is_multiple() && q.product_is_one(x.incident)) r.resonant_points.push_back(x);
  return r;
}

}  // namespace locsys
