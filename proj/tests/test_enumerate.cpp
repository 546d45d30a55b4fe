#include <doctest.h>

#include <set>

#include "sphroots/enumerate.hpp"
#include "sphroots/errors.hpp"

using namespace sphroots;

namespace {

std::set<Coeffs> coeff_set(const std::vector<SphericalRoot>& roots) {
  std::set<Coeffs> s;
  for (const auto& r : roots) s.insert(r.coefficients);
  return s;
}

// every nonzero vector with entries in [0, bound]
std::set<Coeffs> brute_force(const RootSystem& rs, std::int64_t p, std::int64_t q_max, std::int64_t bound) {
  std::set<Coeffs> out;
  Coeffs c(rs.rank(), 0);
  while (true) {
    int k = 0;
    while (k < rs.rank() && ++c[k] > bound) c[k++] = 0;
    if (k == rs.rank()) break;
    if (is_spherical_root(c, rs, p, q_max)) out.insert(c);
  }
  return out;
}

const char* kSmallTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2",
                             "A1xA1", "A1xA2", "A1xA1xA1", "A2xA2", "A1xB2", "A1xG2", "A1xA3", "A1xB3", "A1xC3", "B2xB2"};

}  // namespace

TEST_CASE("A3 spherical roots") {
  auto a3 = RootSystem::parse("A3");
  const std::set<Coeffs> p1{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1},
                            {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 2, 1}, {1, 0, 1}};
  CHECK(coeff_set(spherical_roots_of_G(a3, 1, 8)) == p1);
  const std::set<Coeffs> p2{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1},
                            {1, 2, 1}, {1, 0, 1}, {1, 0, 2}, {2, 0, 1}, {1, 0, 4}, {4, 0, 1}};
  CHECK(coeff_set(spherical_roots_of_G(a3, 2, 4)) == p2);
}

TEST_CASE("A1 spherical roots") {
  auto a1 = RootSystem::parse("A1");
  CHECK(coeff_set(spherical_roots_of_G(a1, 3, 8)) == std::set<Coeffs>{{1}, {2}});
  CHECK(coeff_set(spherical_roots_of_G(a1, 2, 8)) == std::set<Coeffs>{{1}});
}

TEST_CASE("membership") {
  auto a2 = RootSystem::parse("A2");
  for (std::int64_t p : {1, 2, 3, 5}) CHECK(is_spherical_root({1, 1}, a2, p, 8));
  CHECK_FALSE(is_spherical_root({2, 1}, a2, 1, 8));
  CHECK_FALSE(is_spherical_root({0, 0}, a2, 1, 8));
  auto a1 = RootSystem::parse("A1");
  CHECK_FALSE(is_spherical_root({2}, a1, 2, 8));
  CHECK(is_spherical_root({2}, a1, 5, 8));
}

TEST_CASE("enumeration equals a brute-force coefficient scan") {
  for (const char* t : kSmallTypes) {
    auto rs = RootSystem::parse(t);
    if (rs.rank() > 4) continue;
    CAPTURE(t);
    CHECK(coeff_set(spherical_roots_of_G(rs, 1, 4)) == brute_force(rs, 1, 4, 4));
  }
  for (std::int64_t p : {2, 3}) {
    for (const char* t : {"A3", "B3", "C3", "G2", "A1xA1"}) {
      CAPTURE(t);
      CAPTURE(p);
      auto rs = RootSystem::parse(t);
      CHECK(coeff_set(spherical_roots_of_G(rs, p, 4)) == brute_force(rs, p, 4, 6));
    }
  }
}

TEST_CASE("every enumerated root round-trips and has matches") {
  for (const char* t : kSmallTypes) {
    for (std::int64_t p : {1, 2, 3, 5}) {
      auto rs = RootSystem::parse(t);
      for (const auto& r : spherical_roots_of_G(rs, p, 8)) {
        CHECK(is_spherical_root(r.coefficients, rs, p, 8));
        CHECK(!r.matches.empty());
        CHECK(r.support == support_of(r.coefficients));
      }
    }
  }
}

TEST_CASE("compatibility") {
  auto b3 = RootSystem::parse("B3");
  auto s = classify(b3, {1, 1, 1}, 1, 8);
  REQUIRE(s);
  CHECK(compatible(*s, NodeSet::of({1, 2}), b3));
  CHECK(compatible(*s, NodeSet::of({1}), b3));
  CHECK_FALSE(compatible(*s, NodeSet::of({0}), b3));
  CHECK_THROWS_AS(compatible(*s, NodeSet::of({5}), b3), ValidationError);

  auto a3 = RootSystem::parse("A3");
  auto t = classify(a3, {1, 0, 1}, 1, 8);
  REQUIRE(t);
  CHECK_FALSE(compatible(*t, NodeSet::of({1}), a3));
  CHECK(compatible(*t, NodeSet(), a3));

  auto a4 = RootSystem::parse("A4");
  auto u = classify(a4, {1, 0, 0, 0}, 1, 8);
  REQUIRE(u);
  // a3, a4 orthogonal to a1: any subset of them may be added
  CHECK(compatible_sp_sets(*u, a4).size() == 4);
}

TEST_CASE("common compatible S^P") {
  auto a2 = RootSystem::parse("A2");
  auto s = *classify(a2, {1, 0}, 2, 8);
  auto t = *classify(a2, {1, 1}, 2, 8);
  auto c = common_compatible_sp({&s, &t}, a2);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == NodeSet());
  auto b3 = RootSystem::parse("B3");
  auto x = *classify(b3, {1, 2, 3}, 1, 8);  // black a1, a2
  auto y = *classify(b3, {1, 0, 0}, 1, 8);  // a1 white
  CHECK(common_compatible_sp({&x, &y}, b3).empty());
}

TEST_CASE("support split and saturation") {
  auto sp = split_support({1, 2, 3}, NodeSet::of({0, 1}));
  CHECK(sp.singular == NodeSet::of({2}));
  CHECK(sp.parabolic == NodeSet::of({0, 1}));
  CHECK(split_support({2}, NodeSet()).singular == NodeSet::of({0}));
  CHECK(split_support({2, 2, 1, 1}, NodeSet::of({1, 2, 3})).singular == NodeSet::of({0}));

  auto a2 = RootSystem::parse("A2");
  CHECK_FALSE(saturation_check({1, 0}, NodeSet::of({1}), a2));
  CHECK(saturation_check({1, 1}, NodeSet(), a2));
  CHECK(saturation_check({1, 2, 3}, NodeSet::of({0, 1}), RootSystem::parse("B3")));
}

TEST_CASE("compatibility implies saturation; singular support has 1 or 2 nodes") {
  for (const char* t : kSmallTypes) {
    for (std::int64_t p : {1, 2, 3}) {
      auto rs = RootSystem::parse(t);
      for (const auto& r : spherical_roots_of_G(rs, p, 4)) {
        for (NodeSet sp : compatible_sp_sets(r, rs)) {
          CHECK(compatible(r, sp, rs));
          CHECK(saturation_check(r.coefficients, sp, rs));
          const int n = split_support(r.coefficients, sp).singular.size();
          CHECK((n == 1 || n == 2));
        }
      }
    }
  }
}
