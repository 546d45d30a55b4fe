// sphroots: command-line front end.
//
// Exit codes: 0 success, 1 validation or usage error, 2 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sphroots/cone.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/json_io.hpp"
#include "sphroots/verify.hpp"
#include "sphroots/weylx.hpp"

using namespace sphroots;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFailed = 2;

std::int64_t default_q_max() {
  if (const char* env = std::getenv("SPHROOTS_Q_MAX")) {
    try {
      const long long q = std::stoll(env);
      if (q >= 1) return q;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("SPHROOTS_Q_MAX must be a positive integer, got '") + env + "'");
  }
  return 4;
}

std::string nodes_text(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int n : s.elements()) {
    if (!first) out += ",";
    out += DynkinDiagram::node_name(n);
    first = false;
  }
  return out + "}";
}

std::string vec_text(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

Coeffs parse_coeff_list(const std::string& text) {
  Coeffs c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("bad coefficient list '" + text + "' (expected e.g. 1,2,1)");
    }
  }
  return c;
}

void emit(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

SphericalDatum load_datum(const std::string& path) {
  const DatumSpec spec = read_datum_file(path);
  if (!spec.lattice) std::cerr << "warning: " << path << " names no lattice; using the Z-span of Sigma\n";
  return make_datum(spec);
}

// ---- verbs ------------------------------------------------------------

struct Options {
  std::string type;
  std::int64_t p = 1;
  std::int64_t q_max = 0;
  std::string datum;
  std::vector<std::string> sigma;
  std::string suite;
  int max_rank = 5;
  bool with_e = false;
  bool json = false;
  bool report = false;
  bool serial = false;
  std::int64_t p_filter = 0;
};

int run_enumerate(const Options& o) {
  validate_characteristic(o.p);
  const RootSystem system = RootSystem::parse(o.type);
  const auto roots = spherical_roots_of_G(system, o.p, o.q_max);
  if (o.json) {
    emit(enumerate_json(system, o.p, o.q_max, roots));
    return kOk;
  }
  std::cout << roots.size() << " spherical roots of " << system.name() << " at p=" << o.p << " (q_max " << o.q_max
            << ")\n";
  std::size_t width = 4;
  for (const auto& s : roots) width = std::max(width, format_coeffs(s.coefficients).size());
  for (const auto& s : roots) {
    std::string rows;
    for (const auto& m : s.matches) {
      if (!rows.empty()) rows += " ";
      rows += m.pattern->id + nodes_text(m.black);
      if (m.pattern->frobenius) rows += "[q=" + std::to_string(m.q) + "]";
    }
    std::cout << "  " << std::left << std::setw(static_cast<int>(width)) << format_coeffs(s.coefficients) << "  "
              << std::setw(8) << (is_reduced(s, system, o.p, o.q_max) ? "reduced" : "") << rows << "\n";
  }
  return kOk;
}

int run_compat(const Options& o) {
  validate_characteristic(o.p);
  const RootSystem system = RootSystem::parse(o.type);
  std::vector<SphericalRoot> roots;
  std::vector<CompatEntry> entries;
  for (const auto& text : o.sigma) {
    const Coeffs c = parse_coeff_list(text);
    if (static_cast<int>(c.size()) != system.rank())
      throw ValidationError("'" + text + "' has " + std::to_string(c.size()) + " entries, rank is " +
                            std::to_string(system.rank()));
    auto s = classify(system, c, o.p, o.q_max);
    if (!s) throw ValidationError(format_coeffs(c) + " is not a spherical root of " + system.name());
    entries.push_back({c, compatible_sp_sets(*s, system)});
    roots.push_back(std::move(*s));
  }
  std::vector<const SphericalRoot*> ptrs;
  for (const auto& s : roots) ptrs.push_back(&s);
  const auto common = common_compatible_sp(ptrs, system);
  if (o.json) {
    emit(compat_json(system, o.p, entries, common));
    return kOk;
  }
  for (const auto& e : entries) {
    std::cout << format_coeffs(e.sigma) << ": " << e.sp_sets.size() << " compatible S^P sets\n";
    for (NodeSet s : e.sp_sets) std::cout << "  " << nodes_text(s) << "\n";
  }
  std::cout << "minimal common S^P:";
  if (common.empty()) std::cout << " none";
  for (NodeSet s : common) std::cout << " " << nodes_text(s);
  std::cout << "\n";
  return kOk;
}

int run_weyl(const Options& o) {
  const SphericalDatum d = load_datum(o.datum);
  const auto wx = generate_W_X(d);
  const auto rx = build_R_X(d, wx);
  std::vector<Matrix> ambient;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < wx.lifts.size(); ++k) {
    ambient.push_back(wx.lifts[k].element.matrix);
    names.push_back("n_" + format_coeffs(d.sigma()[k].coefficients));
  }
  const auto inv = check_lattice_invariance(d.lattice(), ambient, names);
  const auto s1 = axiom_sigma1_check(d);
  if (o.json) {
    emit(weyl_json(d, wx, rx, inv, s1));
    return kOk;
  }
  std::cout << "|W_X| = " << wx.order() << "\n";
  for (std::size_t k = 0; k < wx.lifts.size(); ++k) {
    const auto& l = wx.lifts[k];
    std::cout << "  n_sigma for " << format_coeffs(d.sigma()[k].coefficients) << ": case " << l.lemma_case
              << ", word";
    for (int i : l.element.word) std::cout << " s" << i + 1;
    std::cout << "\n";
  }
  std::cout << "R_X (" << rx.size() << " roots):\n";
  for (const Vec& v : rx) std::cout << "  " << vec_text(*d.system().to_coeffs(v)) << "\n";
  for (const auto& v : inv)
    std::cout << "  " << v.generator << ": Xi_p " << (v.xi_p ? "stable" : "NOT stable") << ", Xi "
              << (v.strict ? "stable" : "not stable") << "\n";
  std::cout << "Sigma1 parity " << (s1.parity_clean() ? "ok" : "violated") << ", sign "
            << (s1.sign_clean() ? "ok" : "violated") << "\n";
  return kOk;
}

int run_cone(const Options& o) {
  const SphericalDatum d = load_datum(o.datum);
  const Cone c = valuation_cone(d);
  const auto wx = generate_W_X(d);
  const auto ch = chamber_decomposition(c, d, wx);
  const auto angles = dihedral_angles(c, d);
  if (o.json) {
    emit(cone_json(d, c, ch, angles));
    return kOk;
  }
  std::cout << "valuation cone in N_Q (dimension " << c.dim << ")\n";
  for (std::size_t k = 0; k < c.facet_normals.size(); ++k)
    std::cout << "  facet  " << format_coeffs(d.sigma()[k].coefficients) << " <= 0\n";
  for (const Vec& l : c.lineality) std::cout << "  line   " << vec_text(dual_to_ambient(d, l)) << "\n";
  for (const Vec& r : c.extremal_rays) std::cout << "  ray    " << vec_text(primitive_ray(dual_to_ambient(d, r))) << "\n";
  std::cout << "|W_X| = " << wx.order() << ", chambers in the cone: " << ch.chambers.size() << "\n";
  if (o.report)
    for (const auto& chamber : ch.chambers) {
      std::cout << "  chamber w#" << chamber.element << " rays";
      for (const Vec& r : chamber.extremal_rays) std::cout << " " << vec_text(primitive_ray(dual_to_ambient(d, r)));
      std::cout << "\n";
    }
  for (const auto& a : angles)
    std::cout << "  angle " << std::left << std::setw(6) << to_string(a.angle) << " between "
              << format_coeffs(d.sigma()[a.i].coefficients) << " and " << format_coeffs(d.sigma()[a.j].coefficients)
              << " (cos^2 " << a.cos2 << ")\n";
  std::cout << "simple system: "
            << (d.sigma().empty() || is_simple_system(d.sigma_vectors(), d.system()) ? "yes" : "no") << "\n";
  return kOk;
}

int run_verify(const Options& o) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw ValidationError("unknown suite '" + o.suite + "'");
  const auto report = run_suite(*suite, o.p, o.max_rank, o.with_e, {o.q_max, !o.serial});
  if (o.json) {
    emit(report_json(report));
  } else {
    std::cout << report.claim << " p=" << report.p << " q_max=" << report.q_max << "\n"
              << "search space: " << report.search_space << "\n";
    for (const auto& i : report.items) {
      if (i.verdict == Verdict::Expected && report.items.size() > 40) continue;
      std::cout << "  " << std::left << std::setw(11) << to_string(i.verdict) << std::setw(5) << i.type << " "
                << format_coeffs(i.sigma) << (i.tau.empty() ? "" : " | " + format_coeffs(i.tau)) << "  " << i.detail
                << "\n";
    }
    std::cout << "expected " << report.count(Verdict::Expected) << ", unexpected "
              << report.count(Verdict::Unexpected) << ", missing " << report.count(Verdict::Missing) << ", excluded "
              << report.count(Verdict::Excluded) << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kFailed;
}

int run_table_dump(const Options& o) {
  if (o.p_filter != 0) validate_characteristic(o.p_filter);
  std::cout << table_json(o.p_filter) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical roots, little Weyl groups and valuation cones in any characteristic"};
  app.require_subcommand(1);
  Options o;

  auto add_p = [&](CLI::App* c) { c->add_option("--p", o.p, "characteristic exponent (1 or a prime)"); };
  auto add_q = [&](CLI::App* c) {
    c->add_option("--q-max", o.q_max, "largest Frobenius parameter q (default: $SPHROOTS_Q_MAX or 4)")
        ->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "emit one JSON document"); };

  auto* en = app.add_subcommand("enumerate", "list the spherical roots of a root system");
  en->add_option("--type", o.type, "Dynkin type, e.g. A3 or B2xG2")->required();
  add_p(en);
  add_q(en);
  add_json(en);

  auto* co = app.add_subcommand("compat", "S^P sets compatible with given spherical roots");
  co->add_option("--type", o.type, "Dynkin type")->required();
  co->add_option("--sigma", o.sigma, "coefficients on simple roots, e.g. 1,2,1 (repeatable)")->required();
  add_p(co);
  add_q(co);
  add_json(co);

  auto* we = app.add_subcommand("weyl", "little Weyl group, lifts and R_X of a datum");
  we->add_option("--datum", o.datum, "datum JSON file")->required();
  add_json(we);

  auto* cn = app.add_subcommand("cone", "valuation cone, chambers and dihedral angles of a datum");
  cn->add_option("--datum", o.datum, "datum JSON file")->required();
  cn->add_flag("--report", o.report, "list every chamber");
  add_json(cn);

  auto* ve = app.add_subcommand("verify", "run a verification suite over the search space");
  ve->add_option("--suite", o.suite,
                 "obtuseness | obtuseness-combinatorial | nested | angles | simple-systems | lifts")
      ->required();
  add_p(ve);
  add_q(ve);
  ve->add_option("--max-rank", o.max_rank, "largest rank searched")->check(CLI::Range(1, 8));
  ve->add_flag("--with-e", o.with_e, "include E6, E7, E8 up to --max-rank");
  ve->add_flag("--serial", o.serial, "disable the OpenMP pair scan");
  add_json(ve);

  auto* td = app.add_subcommand("table-dump", "the table of rank-one spherical roots as JSON");
  td->add_option("--p", o.p_filter, "only rows existing at this p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (o.q_max == 0) o.q_max = default_q_max();
    if (en->parsed()) return run_enumerate(o);
    if (co->parsed()) return run_compat(o);
    if (we->parsed()) return run_weyl(o);
    if (cn->parsed()) return run_cone(o);
    if (ve->parsed()) return run_verify(o);
    if (td->parsed()) return run_table_dump(o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
