#include "locsys/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "locsys/certificates.hpp"
#include "locsys/char_var.hpp"
#include "locsys/min_complex.hpp"
#include "locsys/res_band.hpp"

namespace locsys::cli {

namespace {

ProjArrangement load(const RunConfig& config) {
  if (config.arrangement.empty()) fail(ErrorKind::precondition, "--arrangement is required");
  if (config.arrangement == "b3") return deleted_b3().arrangement;
  std::ifstream in(config.arrangement);
  if (!in) fail(ErrorKind::precondition, "cannot read arrangement file '" + config.arrangement + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_arrangement(buf.str());
}

TorusPoint require_point(const RunConfig& config, const ProjArrangement& p) {
  if (config.local_system.empty()) fail(ErrorKind::precondition, "--local-system is required");
  return parse_torus_point(config.local_system, p);
}

std::vector<int> labels_of(const Chart& chart) {
  std::vector<int> labels;
  for (int id : chart.proj_ids) labels.push_back(id + 1);
  return labels;
}

std::string line_set(LineSet s, bool compact = false) {
  std::string out;
  for (int i = 0; i < kMaxLineSetBits; ++i)
    if (contains(s, i)) {
      if (!out.empty() && !compact) out += ",";
      out += std::to_string(i + 1);
    }
  return out;
}

/// Line ids of a band in projective numbering.
std::string band_name(const Chart& chart, const Band& b) {
  return "(" + std::to_string(chart.proj_ids[b.lower] + 1) + "," + std::to_string(chart.proj_ids[b.upper] + 1) + ")";
}

template <class Field>
std::string format_vector(const Field& field, const Vector<Field>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : " ") + field.to_string(v[i]);
  return out + " ]";
}

void print_bands(std::ostream& out, const LocalSystem& system, const Chart& chart, const BandData& data,
                 Backend backend) {
  with_field(system, backend, [&](const auto& field) {
    const Twist twist(field, system);
    const auto k = h1_via_bands(twist, data, true);
    out << "resonant bands:";
    for (int b : k.resonant) out << " " << band_name(chart, data.bands[b]);
    out << "\n";
    for (const auto& v : k.basis) out << "kernel vector " << format_vector(field, v) << "\n";
    return 0;
  });
}

void print_points(std::ostream& out, const ProjArrangement& p) {
  for (const auto& x : intersections(p))
    if (x.is_multiple()) out << "  " << format_point(x) << "\n";
}

}  // namespace

int cmd_chambers(const RunConfig& config, std::ostream& out) {
  const ProjArrangement p = load(config);
  const Chart chart = move_to_infinity(p, p.infinity);
  const FlaggedArrangement fa = choose_flag(chart.lines);
  const auto labels = labels_of(chart);
  const int n = fa.size();
  int mult = 0;
  for (const auto& x : affine_points(chart.lines)) mult += x.multiplicity() - 1;

  out << "lines: " << n << " affine, line " << p.infinity + 1 << " at infinity\n";
  out << "multiple points:\n";
  print_points(out, p);
  int bounded = 0;
  for (const auto& c : fa.chambers) bounded += c.bounded;
  out << "chambers: " << fa.chambers.size() << " (bounded " << bounded << ")\n";
  out << "flag: |ch0|=1 |ch1|=" << fa.ch1.size() << " |ch2|=" << fa.ch2.size() << " sum(mult-1)=" << mult << "\n";
  out << "signs over lines";
  for (int l : labels) out << " " << l;
  out << "\n# index\tsigns\tbounded\tdegree\topposite\n";
  for (std::size_t i = 0; i < fa.chambers.size(); ++i) {
    const Chamber& c = fa.chambers[i];
    out << i << "\t" << sign_string(c.signs, n) << "\t" << (c.bounded ? "yes" : "no") << "\t" << c.flag_degree << "\t"
        << (c.opposite ? std::to_string(*c.opposite) : "-") << "\n";
  }
  return kExitOk;
}

int cmd_complex(const RunConfig& config, std::ostream& out) {
  const ProjArrangement p = load(config);
  const Chart chart = move_to_infinity(p, p.infinity);
  const FlaggedArrangement fa = choose_flag(chart.lines);
  const SymbolicComplex cx = twisted_complex(fa);
  const auto labels = labels_of(chart);
  const int n = fa.size();
  auto basis = [&](const char* name, const std::vector<int>& ids) {
    out << name << ":";
    for (int c : ids) out << " " << c << ":" << sign_string(fa.chambers[c].signs ^ fa.frame.flips, n);
    out << "\n";
  };
  out << "flag order:";
  for (int l : fa.frame.order) out << " " << labels[l];
  out << "\n";
  basis("ch0", cx.basis0);
  basis("ch1", cx.basis1);
  basis("ch2", cx.basis2);
  out << "d0 (" << cx.d0.rows() << "x" << cx.d0.cols() << "):\n" << format_matrix(cx.d0, labels);
  out << "d1 (" << cx.d1.rows() << "x" << cx.d1.cols() << "):\n" << format_matrix(cx.d1, labels);
  if (!config.local_system.empty()) {
    const LocalSystem system = require_point(config, p).on_chart(chart);
    const CohomologyDims d = cohomology_dims(system, cx, config.backend);
    out << "h0 = " << d.h0 << "\nh1 = " << d.h1 << "\nh2 = " << d.h2 << "\n";
  }
  return kExitOk;
}

int cmd_h1(const RunConfig& config, std::ostream& out) {
  const ProjArrangement p = load(config);
  const TorusPoint q = require_point(config, p);
  int h1 = 0;
  if (q.is_trivial()) {
    out << "trivial local system: using the full complex\n";
    h1 = h1_oracle(p, q, config.backend);
  } else {
    int h = p.infinity;
    if (q.resonant(h)) {
      h = first_non_resonant(q);
      out << "note: q_infinity = 1; line " << h + 1 << " moved to infinity\n";
    }
    const Chart chart = move_to_infinity(p, h);
    const BandData data = analyze_bands(chart.lines);
    const LocalSystem system = q.on_chart(chart);
    if (config.verbosity > 0) print_bands(out, system, chart, data, config.backend);
    h1 = h1_via_bands(system, data, config.backend);
  }
  out << "h1 = " << h1 << "\n";
  if (config.check) {
    const int oracle = h1_oracle(p, q, config.backend);
    out << "oracle h1 = " << oracle << "\n";
    out << "check: " << (oracle == h1 ? "agree" : "MISMATCH") << "\n";
    if (oracle != h1) return kExitFailure;
  }
  return kExitOk;
}

int cmd_certify(const RunConfig& config, std::ostream& out) {
  const ProjArrangement p = load(config);
  const TorusPoint q = require_point(config, p);
  const ResonanceReport res = resonance_report(q, p);
  out << "resonant lines: " << (res.resonant_lines ? line_set(res.resonant_lines) : "-") << "\n";
  out << "resonant multiple points:\n";
  for (const auto& x : res.resonant_points) out << "  " << format_point(x) << "\n";
  const CertificateReport certs = vanishing_certificates(q, p);
  const SharpPairReport sharp = sharp_pairs(q, p);
  out << format_certificates(certs) << format_sharp_pairs(sharp);
  if (config.check) {
    const int h1 = h1_at(p, q, config.backend);
    out << "h1 = " << h1 << "\n";
    bool ok = !certs.dimension() || *certs.dimension() == h1;
    for (const auto& s : sharp.pairs) {
      if (s.bound == SharpBound::zero) ok = ok && h1 == 0;
      if (s.bound == SharpBound::at_most_one) ok = ok && h1 <= 1;
    }
    out << "check: " << (ok ? "agree" : "MISMATCH") << "\n";
    if (!ok) return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out) {
  if (config.order < 1) fail(ErrorKind::precondition, "scan requires --order N");
  const ProjArrangement p = load(config);
  const auto catalog = config.arrangement == "b3" ? deleted_b3().catalog : std::vector<ComponentFamily>{};
  const ScanResult r = torsion_scan(p, config.order, {config.budget, config.backend});
  out << format_scan(r, catalog);
  return kExitOk;
}

int cmd_b3(const RunConfig& config, std::ostream& out) {
  const DeletedB3 b3 = deleted_b3();
  const ProjArrangement& p = b3.arrangement;
  const int order = config.order > 0 ? config.order : 2;
  bool ok = true;

  out << "## arrangement\n" << format_arrangement(p);
  out << "## multiple points by line\n";
  const auto points = intersections(p);
  for (int h = 0; h < p.size(); ++h) {
    out << "H" << h + 1 << ":";
    for (const auto& x : points)
      if (x.is_multiple() && contains(x.incident, h)) out << " " << line_set(x.incident, true);
    out << "\n";
  }

  out << "## resonant double points q+ and q-\n";
  const Chart chart = move_to_infinity(p, p.infinity);
  const BandData data = analyze_bands(chart.lines);
  out << "bands:";
  for (const auto& b : data.bands) out << " " << band_name(chart, b);
  out << "\n";
  const std::vector<std::pair<std::string, std::vector<int>>> examples = {
      {"q+", {0, 1, 1, 0, 0, 1, 0, 1}}, {"q-", {1, 0, 0, 1, 0, 1, 0, 1}}};
  for (const auto& [name, e] : examples) {
    const TorusPoint q = TorusPoint::torsion(2, e);
    const LocalSystem system = q.on_chart(chart);
    const int h1 = h1_via_bands(system, data, config.backend);
    out << name << " = (" << format_exponents(q) << ") mod 2: h1 = " << h1 << "\n";
    print_bands(out, system, chart, data, config.backend);
    ok = ok && h1 == 2;
  }

  out << "## torsion scan, order " << order << "\n";
  const ScanResult r = torsion_scan(p, order, {config.budget, config.backend});
  out << format_scan(r, b3.catalog);
  std::set<std::vector<int>> hits, in_catalog;
  for (const auto& hit : r.hits) hits.insert(hit.point.exponents());
  for (const auto& q : torsion_points(p, order, config.budget))
    if (!q.is_trivial() && !matching_families(b3.catalog, q).empty()) in_catalog.insert(q.exponents());
  const bool equal = hits == in_catalog;
  out << "scan hits equal nontrivial catalog points: " << (equal ? "yes" : "NO") << " (" << hits.size() << " vs "
      << in_catalog.size() << ")\n";
  ok = ok && equal;

  out << "## component samples\n# family\torder\tparams\texponents\th1\n";
  for (const auto& f : b3.catalog) {
    bool supported = true;
    for (const auto& s : membership_samples(f)) {
      const auto v = component_membership(f, s.order, {s.params}, p, config.backend);
      const auto& sample = v.samples.front();
      std::string params;
      for (std::size_t j = 0; j < s.params.size(); ++j) params += (j ? "," : "") + std::to_string(s.params[j]);
      out << f.name << "\t" << s.order << "\t" << params << "\t" << format_exponents(sample.point) << "\t"
          << sample.h1 << "\n";
      supported = supported && v.supported;
    }
    out << f.name << ": " << (supported ? "supported" : "NOT SUPPORTED") << "\n";
    ok = ok && supported;
  }

  out << "## certificates on H5\n";
  const std::vector<std::pair<std::string, std::vector<int>>> cases = {
      {"(1)", {1, 0, 0, 0, 1, 0, 0, 3}}, {"(2)", {0, 0, 0, 0, 1, 2, 3, 4}}, {"(3)", {0, 1, 2, 0, 2, 0, 0, 0}}};
  for (const auto& [name, e] : cases) {
    const TorusPoint q = TorusPoint::torsion(5, e);
    const auto certs = vanishing_certificates(q, p);
    const int h1 = h1_oracle(p, q, config.backend);
    for (const auto& c : certs.certificates)
      if (c.line == 4) {
        out << "case " << name << " q = (" << format_exponents(q) << ") mod 5: resonant points on H5 "
            << c.resonant_points << ", certificate h1 = " << (c.dimension ? std::to_string(*c.dimension) : "-")
            << ", oracle h1 = " << h1 << "\n";
        ok = ok && c.dimension && *c.dimension == h1;
      }
  }
  out << "## verdict: " << (ok ? "all checks passed" : "FAILED") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-one local system cohomology of real line arrangement complements", "locsys"};
  app.require_subcommand(1);
  RunConfig config;
  std::string backend = "cyclotomic";

  auto common = [&](CLI::App* sub, bool needs_system) {
    sub->add_option("--arrangement", config.arrangement, "arrangement file, or b3 for the built-in deleted B3");
    if (needs_system) sub->add_option("--local-system", config.local_system, "\"torsion N; e...\" or \"complex; re im ...\"");
    sub->add_option("--backend", backend, "scalar field")->check(CLI::IsMember({"cyclotomic", "complex"}));
    sub->add_option("--out", config.out, "write the report to a file");
    sub->add_flag("-v,--verbose", "more detail");
  };
  auto* chambers = app.add_subcommand("chambers", "chambers, flag degrees and opposites");
  common(chambers, false);
  auto* complex = app.add_subcommand("complex", "bases and boundary matrices of the twisted complex");
  common(complex, true);
  auto* h1 = app.add_subcommand("h1", "dim H^1 through resonant bands");
  common(h1, true);
  h1->add_flag("--check", config.check, "also run the full complex and compare");
  auto* certify = app.add_subcommand("certify", "combinatorial vanishing certificates and sharp pairs");
  common(certify, true);
  certify->add_flag("--check", config.check, "compare with the computed dimension");
  auto* scan = app.add_subcommand("scan", "torsion points with nonvanishing H^1");
  common(scan, false);
  scan->add_option("--order", config.order, "torsion order N")->required();
  scan->add_option("--budget", config.budget, "maximum number of enumerated points");
  auto* b3 = app.add_subcommand("b3", "deleted B3 verification table");
  common(b3, false);
  b3->add_option("--order", config.order, "scan order (default 2)");
  b3->add_option("--budget", config.budget, "maximum number of enumerated points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  config.verbosity = static_cast<int>(chosen->count("--verbose"));
  config.backend.kind = backend == "complex" ? BackendKind::complex : BackendKind::cyclotomic;
  try {
    std::ostringstream report;
    int status = kExitOk;
    if (config.command == "chambers") status = cmd_chambers(config, report);
    if (config.command == "complex") status = cmd_complex(config, report);
    if (config.command == "h1") status = cmd_h1(config, report);
    if (config.command == "certify") status = cmd_certify(config, report);
    if (config.command == "scan") status = cmd_scan(config, report);
    if (config.command == "b3") status = cmd_b3(config, report);
    if (config.out.empty()) {
      out << report.str();
    } else {
      std::ofstream file(config.out);
      if (!file) fail(ErrorKind::precondition, "cannot write '" + config.out + "'");
      file << report.str();
    }
    return status;
  } catch (const Error& e) {
    const char* kind = e.kind() == ErrorKind::parse                  ? "parse error"
                       : e.kind() == ErrorKind::theorem_inapplicable ? "theorem inapplicable"
                       : e.kind() == ErrorKind::budget               ? "budget exceeded"
                                                                     : "precondition failed";
    err << kind << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::budget ? kExitBudget : kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace locsys::cli
