#include "locsys/min_complex.hpp"

#include <sstream>

namespace locsys {

SymbolicMatrix build_d0(const FlaggedArrangement& fa) {
  SymbolicMatrix d0(fa.ch1.size(), 1, DeltaTerm{});
  const Chamber& u0 = fa.chambers[fa.u0];
  for (std::size_t row = 0; row < fa.ch1.size(); ++row) d0(row, 0) = DeltaTerm{1, sep(u0, fa.chambers[fa.ch1[row]])};
  return d0;
}

SymbolicMatrix build_d1(const FlaggedArrangement& fa) {
  const int n = fa.size();
  const auto& order = fa.frame.order;
  SymbolicMatrix d1(fa.ch2.size(), fa.ch1.size(), DeltaTerm{});
  for (std::size_t row = 0; row < fa.ch2.size(); ++row) {
    const int c = fa.ch2[row];
    const Chamber& chamber = fa.chambers[c];
    // U_p for p = 1..n-1 sits in column p-1 and is bounded by the p-th and
    // (p+1)-th lines along F^1.
    for (int p = 1; p < n; ++p) {
      const Chamber& up = fa.chambers[fa.ch1[p - 1]];
      const bool left = fa.positive(c, order[p - 1]);
      const bool right = fa.positive(c, order[p]);
      if (left && !right)
        d1(row, p - 1) = DeltaTerm{-1, sep(up, chamber)};
      else if (!left && right)
        d1(row, p - 1) = DeltaTerm{1, sep(up, chamber)};
    }
    if (fa.positive(c, order[n - 1])) d1(row, n - 1) = DeltaTerm{-1, sep(fa.chambers[fa.ch1[n - 1]], chamber)};
  }
  return d1;
}

SymbolicComplex twisted_complex(const FlaggedArrangement& fa) {
  SymbolicComplex cx;
  cx.basis0 = {fa.u0};
  cx.basis1 = fa.ch1;
  cx.basis2 = fa.ch2;
  cx.d0 = build_d0(fa);
  cx.d1 = build_d1(fa);
  return cx;
}

CohomologyDims cohomology_dims(const LocalSystem& system, const SymbolicComplex& cx, Backend backend) {
  if (static_cast<std::size_t>(system.size()) != cx.basis1.size())
    fail(ErrorKind::precondition, "local system and arrangement sizes disagree");
  return with_field(system, backend, [&](const auto& field) {
    const Twist twist(field, system);
    return cohomology_dims(cx, twist);
  });
}

CohomologyDims cohomology_dims(const LocalSystem& system, const FlaggedArrangement& fa, Backend backend) {
  return cohomology_dims(system, twisted_complex(fa), backend);
}

std::string format_delta(const DeltaTerm& t, const std::vector<int>& labels) {
  if (t.is_zero()) return "0";
  std::string idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (contains(t.sep, static_cast<int>(i))) {
      if (!idx.empty() && labels.size() > 9) idx += ",";
      idx += std::to_string(labels[i]);
    }
  if (idx.empty()) return "0";
  std::string body = "q_{" + idx + "}^{1/2}-q_{" + idx + "}^{-1/2}";
  return t.sign > 0 ? body : "-(" + body + ")";
}

std::string format_matrix(const SymbolicMatrix& m, const std::vector<int>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : " ") << format_delta(m(i, j), labels);
    os << " ]\n";
  }
  return os.str();
}

}  // namespace locsys
