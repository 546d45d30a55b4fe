#include <doctest.h>

#include <set>

#include "sphroots/verify.hpp"

using namespace sphroots;

namespace {

using Pairs = std::set<std::pair<Coeffs, Coeffs>>;

Pairs with(const VerificationReport& r, Verdict v) {
  Pairs out;
  for (const auto& i : r.items)
    if (i.verdict == v) out.insert({i.sigma, i.tau});
  return out;
}

}  // namespace

TEST_CASE("family instantiation") {
  auto c3 = RootSystem::parse("C3");
  auto keys = instantiate(obtuse_pair_families(), c3, 2, false);
  // full rank C_3 instance plus the C2 = B2 and A2 subdiagrams
  CHECK(keys.count(unordered_key({0, 2, 1}, {1, 2, 1})) == 1);
  CHECK(keys.count(unordered_key({0, 0, 1}, {0, 1, 1})) == 1);
  CHECK(keys.count(unordered_key({0, 1, 0}, {0, 2, 1})) == 1);
  CHECK(keys.count(unordered_key({1, 0, 0}, {1, 1, 0})) == 1);
  CHECK(keys.size() == 5);
  CHECK(instantiate(obtuse_pair_families(), c3, 3, false).empty());

  auto a4 = RootSystem::parse("A4");
  // A2 sits in A4 in three positions, each with two orientations
  CHECK(instantiate({positive_product_families()[0]}, a4, 1, false).size() == 6);
  CHECK(instantiate({positive_product_families()[0]}, a4, 1, true).size() == 6);
}

TEST_CASE("exclusions") {
  auto a2 = RootSystem::parse("A2");
  CHECK(excluded(a2, 1, {1, 0}, {1, 1}).has_value());
  CHECK(excluded(a2, 1, {1, 1}, {1, 0}).has_value());
  CHECK_FALSE(excluded(a2, 2, {1, 0}, {1, 1}).has_value());
  auto c3 = RootSystem::parse("C3");
  CHECK(excluded(c3, 2, {0, 1, 1}, {2, 2, 1}).has_value());
  CHECK_FALSE(excluded(c3, 2, {2, 2, 1}, {0, 1, 1}).has_value());
  auto g2 = RootSystem::parse("G2");
  CHECK(*excluded(g2, 3, {1, 0}, {3, 1}) == exclusions()[3].tag);
}

TEST_CASE("obtuse pairs") {
  SUBCASE("p=2 A2") {
    auto r = verify_obtuseness_theorem(RootSystem::parse("A2"), 2);
    CHECK(r.passed());
    CHECK(with(r, Verdict::Expected) == Pairs{{{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
  }
  SUBCASE("p=2 C3") {
    auto r = verify_obtuseness_theorem(RootSystem::parse("C3"), 2);
    CHECK(r.passed());
    CHECK(with(r, Verdict::Expected).count({{0, 2, 1}, {1, 2, 1}}) == 1);
    CHECK(with(r, Verdict::Expected).size() == 5);
    CHECK(with(r, Verdict::Excluded) == Pairs{{{0, 1, 1}, {0, 2, 1}}});
  }
  SUBCASE("p=2 B3 combinatorial") {
    auto r = verify_obtuseness_combinatorial(RootSystem::parse("B3"), 2);
    CHECK(r.passed());
    CHECK(with(r, Verdict::Expected).count({{0, 1, 1}, {1, 2, 2}}) == 1);
  }
  SUBCASE("p=3 G2 combinatorial finds (a1, 3a1+a2), the theorem excludes it") {
    auto g2 = RootSystem::parse("G2");
    auto comb = verify_obtuseness_combinatorial(g2, 3);
    CHECK(comb.passed());
    CHECK(with(comb, Verdict::Expected).count({{1, 0}, {3, 1}}) == 1);
    auto thm = verify_obtuseness_theorem(g2, 3);
    CHECK(thm.passed());
    CHECK(with(thm, Verdict::Expected).empty());
    CHECK(with(thm, Verdict::Excluded).count({{1, 0}, {3, 1}}) == 1);
  }
  SUBCASE("p=5 is empty") {
    for (const auto& t : search_space(4)) {
      auto r = verify_obtuseness_theorem(RootSystem::parse(t), 5);
      CHECK(r.passed());
      CHECK(r.count(Verdict::Expected) == 0);
    }
  }
}

TEST_CASE("combinatorial report contains the theorem report") {
  for (std::int64_t p : {1, 2, 3}) {
    for (const auto& t : search_space(4)) {
      auto sys = RootSystem::parse(t);
      auto comb = verify_obtuseness_combinatorial(sys, p);
      auto thm = verify_obtuseness_theorem(sys, p);
      Pairs all = with(comb, Verdict::Expected);
      for (const auto& pr : with(comb, Verdict::Unexpected)) all.insert(pr);
      Pairs found = with(thm, Verdict::Expected);
      for (const auto& pr : with(thm, Verdict::Unexpected)) found.insert(pr);
      for (const auto& pr : with(thm, Verdict::Excluded)) found.insert(pr);
      CHECK(found == all);
    }
  }
}

TEST_CASE("nested supports") {
  auto c3 = RootSystem::parse("C3");
  auto r = verify_nested_support(c3, 1);
  CHECK(r.passed());
  CHECK(with(r, Verdict::Expected).count({{1, 0, 0}, {1, 2, 1}}) == 1);
  auto r2 = verify_nested_support(c3, 2);
  CHECK(r2.passed());
  CHECK(with(r2, Verdict::Expected).count({{0, 1, 1}, {2, 2, 1}}) == 0);
  CHECK(with(r2, Verdict::Excluded).count({{0, 1, 1}, {2, 2, 1}}) == 1);
  auto g = verify_nested_support(RootSystem::parse("G2"), 2);
  CHECK(g.passed());
  CHECK(with(g, Verdict::Expected) == Pairs{{{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
  CHECK(verify_nested_support(RootSystem::parse("B4"), 1).passed());
}

TEST_CASE("serial and parallel scans agree") {
  auto sys = RootSystem::parse("B4");
  const auto roots = spherical_roots_of_G(sys, 2, 4);
  auto any = [](const SphericalRoot&, const SphericalRoot&) { return true; };
  auto a = scan_pairs(sys, roots, any, false);
  auto b = scan_pairs(sys, roots, any, true);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].i == b[k].i);
    CHECK(a[k].j == b[k].j);
    CHECK(a[k].sp == b[k].sp);
  }
  SuiteOptions serial{4, false};
  auto r1 = verify_dihedral_angles(sys, 2, serial);
  auto r2 = verify_dihedral_angles(sys, 2);
  REQUIRE(r1.items.size() == r2.items.size());
  for (std::size_t k = 0; k < r1.items.size(); ++k) CHECK(r1.items[k].detail == r2.items[k].detail);
}

TEST_CASE("angles and simple systems on small types") {
  for (std::int64_t p : {1, 2, 3, 5})
    for (const char* t : {"A3", "B3", "C3", "G2"}) {
      auto sys = RootSystem::parse(t);
      CHECK(verify_dihedral_angles(sys, p).passed());
      CHECK(verify_simple_systems(sys, p).passed());
    }
}

TEST_CASE("lift lemma suite") {
  for (std::int64_t p : {1, 2, 3, 5}) {
    auto r = verify_lift_lemma(p, 4);
    CHECK(r.passed());
    CHECK(r.items.size() > 10);
  }
}

TEST_CASE("suite names and search space") {
  CHECK(parse_suite("nested") == Suite::Nested);
  CHECK_FALSE(parse_suite("bogus").has_value());
  for (Suite s : {Suite::Obtuseness, Suite::Lifts, Suite::Angles}) CHECK(parse_suite(to_string(s)) == s);
  auto sp = search_space(5);
  CHECK(sp.size() == 5 + 4 + 3 + 2 + 2);
  CHECK(std::count(sp.begin(), sp.end(), "F4") == 1);
  CHECK(search_space(6, true).back() == "E6");
}
