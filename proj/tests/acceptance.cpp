// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sphroots/cone.hpp"
#include "sphroots/enumerate.hpp"
#include "sphroots/verify.hpp"
#include "sphroots/weylx.hpp"

using namespace sphroots;

namespace {

using Clock = std::chrono::steady_clock;

std::set<Coeffs> coeff_set(const std::vector<SphericalRoot>& roots) {
  std::set<Coeffs> s;
  for (const auto& r : roots) s.insert(r.coefficients);
  return s;
}

// Problems found by a criterion go into `notes`; empty means pass.
struct Outcome {
  std::vector<std::string> notes;
  std::string summary;
  void fail(const std::string& s) { notes.push_back(s); }
};

std::string describe(const ReportItem& i) {
  std::ostringstream o;
  o << i.type << " (" << format_coeffs(i.sigma) << ")";
  if (!i.tau.empty()) o << ", (" << format_coeffs(i.tau) << ")";
  o << ": " << to_string(i.verdict);
  if (!i.detail.empty()) o << " [" << i.detail << "]";
  return o.str();
}

void absorb(Outcome& out, const VerificationReport& r, std::int64_t p) {
  for (const auto& i : r.items)
    if (i.verdict == Verdict::Unexpected || i.verdict == Verdict::Missing)
      out.fail("p=" + std::to_string(p) + " " + describe(i));
}

Outcome a3_enumeration() {
  Outcome out;
  auto a3 = RootSystem::parse("A3");
  const std::set<Coeffs> p1{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1},
                            {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 2, 1}, {1, 0, 1}};
  const std::set<Coeffs> p2{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1},
                            {1, 2, 1}, {1, 0, 1}, {1, 0, 2}, {2, 0, 1}, {1, 0, 4}, {4, 0, 1}};
  const auto got1 = coeff_set(spherical_roots_of_G(a3, 1, 4));
  const auto got2 = coeff_set(spherical_roots_of_G(a3, 2, 4));
  if (got1 != p1) out.fail("p=1 set differs");
  if (got2 != p2) out.fail("p=2 set differs");
  out.summary = std::to_string(got1.size()) + " roots at p=1, " + std::to_string(got2.size()) + " at p=2";
  return out;
}

Outcome schalke_cone() {
  Outcome out;
  auto a2 = std::make_shared<const RootSystem>(RootSystem::parse("A2"));
  SphericalDatum d(a2, 2, {{1, 0}, {1, 1}}, NodeSet());
  Cone c = valuation_cone(d);
  auto wx = generate_W_X(d);
  auto dec = chamber_decomposition(c, d, wx);
  if (wx.order() != 6) out.fail("|W_X| = " + std::to_string(wx.order()));
  if (dec.chambers.size() != 2) out.fail("chambers = " + std::to_string(dec.chambers.size()));
  // {x1 <= x2, x1 <= x3} on x1 + x2 + x3 = 0 is spanned by these two rays
  std::set<Vec> rays;
  for (const Vec& r : c.extremal_rays) rays.insert(primitive_ray(dual_to_ambient(d, r)));
  if (!c.lineality.empty() || rays != std::set<Vec>{{-1, -1, 2}, {-1, 2, -1}}) out.fail("cone differs");
  out.summary = "|W_X| = " + std::to_string(wx.order()) + ", " + std::to_string(dec.chambers.size()) + " chambers";
  return out;
}

Outcome lift_lemma() {
  Outcome out;
  std::size_t n = 0;
  for (std::int64_t p : {1, 2, 3, 5}) {
    auto r = verify_lift_lemma(p, 6);
    n += r.items.size();
    absorb(out, r, p);
  }
  out.summary = std::to_string(n) + " table instances";
  return out;
}

// Runs `suite` on every type of the rank <= 5 search space for each p.
template <class F>
Outcome over_search_space(std::initializer_list<std::int64_t> ps, F suite, std::size_t& checked,
                          const std::function<void(Outcome&, const VerificationReport&, std::int64_t)>& extra = {}) {
  Outcome out;
  for (std::int64_t p : ps)
    for (const auto& t : search_space(5)) {
      auto r = suite(RootSystem::parse(t), p);
      checked += r.items.size();
      absorb(out, r, p);
      if (extra) extra(out, r, p);
    }
  return out;
}

Outcome obtuseness() {
  std::size_t n = 0, expected2 = 0;
  auto out = over_search_space({1, 2, 3, 5}, [](const RootSystem& s, std::int64_t p) { return verify_obtuseness_theorem(s, p); }, n,
                               [&](Outcome& o, const VerificationReport& r, std::int64_t p) {
                                 if (p == 2) expected2 += r.count(Verdict::Expected);
                                 else if (r.count(Verdict::Expected) != 0) o.fail("p=" + std::to_string(p) + " nonempty in " + r.search_space);
                               });
  out.summary = std::to_string(expected2) + " obtuse pairs at p=2, none otherwise";
  return out;
}

Outcome dihedral_angles() {
  std::size_t n = 0;
  auto out = over_search_space({1, 2, 3, 5}, [](const RootSystem& s, std::int64_t p) { return verify_dihedral_angles(s, p); }, n);
  out.summary = std::to_string(n) + " labelled pairs";
  return out;
}

Outcome simple_systems() {
  std::size_t n = 0;
  auto out = over_search_space({1, 3, 5}, [](const RootSystem& s, std::int64_t p) { return verify_simple_systems(s, p); }, n);
  out.summary = std::to_string(n) + " data";
  return out;
}

Outcome nested_support() {
  std::size_t n = 0;
  auto out = over_search_space({1, 2, 3, 5}, [](const RootSystem& s, std::int64_t p) { return verify_nested_support(s, p); }, n);
  out.summary = std::to_string(n) + " nested pairs";
  return out;
}

// every nonzero vector with entries in [0, 4], matched directly against the table
Outcome oracle_equivalence() {
  Outcome out;
  std::size_t n = 0;
  std::vector<std::string> types = search_space(4);
  for (const char* t : {"A1xA1", "A1xA2", "A1xA1xA1", "A2xA2", "A1xB2", "A1xG2", "A1xA3", "B2xB2"}) types.push_back(t);
  for (const auto& t : types) {
    auto rs = RootSystem::parse(t);
    std::set<Coeffs> oracle;
    Coeffs c(rs.rank(), 0);
    while (true) {
      int k = 0;
      while (k < rs.rank() && ++c[k] > 4) c[k++] = 0;
      if (k == rs.rank()) break;
      NodeSet support;
      for (int i = 0; i < rs.rank(); ++i)
        if (c[i] != 0) support.insert(i);
      if (!pattern_match(rs.diagram(), support, c, 1, 4).empty()) oracle.insert(c);
    }
    const auto got = coeff_set(spherical_roots_of_G(rs, 1, 4));
    n += got.size();
    if (got != oracle) out.fail(t + ": enumeration and oracle differ");
  }
  out.summary = std::to_string(types.size()) + " types, " + std::to_string(n) + " roots";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;  // 0: no runtime bound
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"A3 enumeration", 1, a3_enumeration},
      {"Schalke cone", 1, schalke_cone},
      {"lift lemma, ranks <= 6", 30, lift_lemma},
      {"obtuseness theorem, ranks <= 5", 120, obtuseness},
      {"dihedral angle labels", 0, dihedral_angles},
      {"simple systems for p != 2", 0, simple_systems},
      {"nested-support table", 0, nested_support},
      {"enumeration vs brute-force oracle", 0, oracle_equivalence},
  };
  int failed = 0, k = 0;
  for (const auto& c : criteria) {
    ++k;
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) out.fail("runtime over " + std::to_string(c.limit_s) + " s");
    const bool ok = out.notes.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s (%s, %.2f s)\n", k, ok ? "PASS" : "FAIL", c.name, out.summary.c_str(), secs);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %d criteria passed\n", k - failed, k);
  return failed == 0 ? 0 : 1;
}
