#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sphroots/errors.hpp"
#include "sphroots/rootsys.hpp"

using namespace sphroots;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5",
                        "C6", "D4", "D5", "D6", "E6", "F4", "G2", "A1xA1", "A2xB2", "G2xA1", "A1xA1xA1"};

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3).den() == 3);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(0, 5) * Rational(7, 3)).den() == 1);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(-3, 2).fraction() == "-3/2");
  CHECK(Rational(4).fraction() == "4/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
  CHECK(has_p_power_denominator(Rational(3, 8), 2));
  CHECK_FALSE(has_p_power_denominator(Rational(1, 6), 2));
  CHECK_FALSE(has_p_power_denominator(Rational(1, 2), 1));
}

TEST_CASE("linear algebra kernel") {
  std::vector<Vec> basis{{1, 1, 0}, {0, 1, 1}};
  auto c = coordinates(basis, Vec{1, 3, 2});
  REQUIRE(c);
  CHECK(*c == Vec{1, 2});
  CHECK_FALSE(coordinates(basis, Vec{1, 0, 0}));
  CHECK(rank_of(std::vector<Vec>{{1, 2}, {2, 4}}) == 1);
  Matrix m = Matrix::from_rows(std::vector<Vec>{{1, 1, 1}});
  CHECK(nullspace(m).size() == 2);
  auto inv = inverse(Matrix::from_rows(std::vector<Vec>{{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK((*inv * Matrix::from_rows(std::vector<Vec>{{2, 1}, {1, 1}})).is_identity());
  auto hnf = integer_row_basis({{2, 4}, {3, 6}});
  REQUIRE(hnf.size() == 1);
  CHECK(hnf[0] == std::vector<std::int64_t>{1, 2});
  CHECK(primitive_ray(Vec{Rational(2, 3), Rational(4, 3)}) == Vec{1, 2});
}

TEST_CASE("diagram parsing and validation") {
  CHECK(DynkinDiagram::parse("B2xG2").rank() == 4);
  CHECK(DynkinDiagram::parse("a1 x a1").name() == "A1xA1");
  CHECK_THROWS_AS(DynkinDiagram::parse("D3"), ValidationError);
  CHECK_THROWS_AS(DynkinDiagram::parse("G3"), ValidationError);
  CHECK_THROWS_AS(DynkinDiagram::parse(""), ValidationError);
  CHECK_THROWS_AS(DynkinDiagram::parse("H3"), ValidationError);
  CHECK_THROWS_AS(DynkinDiagram({{'A', 2}}, {{2, -1}, {-1, 2}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(DynkinDiagram({{'A', 2}}, {{2, -2}, {-1, 2}}), ValidationError);
  CHECK_NOTHROW(DynkinDiagram({{'G', 2}}, {{2, -1}, {-3, 2}}));
  CHECK(DynkinDiagram::parse_node_name("a3") == 2);
  CHECK_THROWS_AS(DynkinDiagram::parse_node_name("b3"), ValidationError);
}

TEST_CASE("root counts agree with an independent Cartan-matrix orbit enumeration") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    RootSystem rs = RootSystem::parse(t);
    const auto ref = oracle::roots(rs.diagram());
    REQUIRE(rs.roots().size() == ref.size());
    std::set<oracle::IntVec> mine;
    for (std::size_t i = 0; i < rs.roots().size(); ++i) mine.insert(rs.root_coeffs(i));
    CHECK(mine == ref);
    CHECK(rs.positive_roots().size() * 2 == rs.roots().size());
  }
  CHECK(RootSystem::parse("A1").roots().size() == 2);
  CHECK(RootSystem::parse("G2").roots().size() == 12);
  CHECK(RootSystem::parse("B3").roots().size() == 18);
}

TEST_CASE("realization reproduces the Cartan matrix and normalization") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    RootSystem rs = RootSystem::parse(t);
    CHECK(rs.recovered_cartan() == rs.diagram().cartan_matrix());
    Rational shortest = 1000;
    for (const auto& a : rs.roots()) {
      CHECK(rs.pairing(a, a) == 2);
      shortest = std::min(shortest, rs.norm2(a));
    }
    CHECK(shortest == 2);
  }
}

TEST_CASE("pairings and reflections") {
  RootSystem a2 = RootSystem::parse("A2");
  CHECK(a2.pairing(a2.simple_root(0), a2.simple_root(1)) == -1);
  CHECK(a2.reflect(a2.simple_root(1), a2.simple_root(0)) == a2.from_coeffs({1, 1}));
  RootSystem g2 = RootSystem::parse("G2");
  CHECK(g2.pairing(g2.simple_root(1), g2.simple_root(0)) == -3);
  CHECK(g2.pairing(g2.simple_root(0), g2.simple_root(1)) == -1);
  CHECK_THROWS_AS(g2.pairing(g2.simple_root(0), zero_vec(g2.dim())), ValidationError);

  for (const char* t : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::parse(t);
    for (const auto& a : rs.roots()) {
      const WeylElement s = rs.reflection(a);
      CHECK(s.matrix * a == scale(-1, a));
      CHECK((s.matrix * s.matrix).is_identity());
      // permutes the roots
      std::set<std::size_t> img;
      for (const auto& b : rs.roots()) {
        auto idx = rs.root_index(s.matrix * b);
        REQUIRE(idx);
        img.insert(*idx);
      }
      CHECK(img.size() == rs.roots().size());
      // the recorded word multiplies out to the same matrix
      Matrix m = Matrix::identity(rs.dim());
      for (int i : s.word) m = m * rs.simple_reflection(i).matrix;
      CHECK(m == s.matrix);
    }
  }
}

TEST_CASE("Weyl group: order, form invariance") {
  for (const char* t : {"A1", "A3", "B3", "C3", "G2", "D4", "A1xA1", "F4"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::parse(t);
    const auto w = rs.weyl_group();
    CHECK(w.size() == rs.weyl_order());
    for (std::size_t k = 0; k < w.size(); k += 7)
      for (std::size_t i = 0; i < rs.simple_roots().size(); ++i)
        for (std::size_t j = 0; j < rs.simple_roots().size(); ++j)
          CHECK(rs.form(w[k].matrix * rs.simple_root(i), w[k].matrix * rs.simple_root(j)) ==
                rs.form(rs.simple_root(i), rs.simple_root(j)));
  }
  CHECK_THROWS_AS(RootSystem::parse("E8").weyl_group(), ValidationError);
}

TEST_CASE("very orthogonal roots") {
  RootSystem a3 = RootSystem::parse("A3");
  CHECK(a3.very_orthogonal(a3.from_coeffs({1, 1, 0}), a3.from_coeffs({0, 1, 1})));
  RootSystem b2 = RootSystem::parse("B2");
  // e1 and e2 are orthogonal short roots, but they are not W-conjugate to two
  // orthogonal simple roots of B2
  CHECK_FALSE(b2.very_orthogonal(b2.from_coeffs({1, 1}), b2.from_coeffs({0, 1})));
}

TEST_CASE("subdiagram classification") {
  auto a3 = DynkinDiagram::parse("A3");
  auto r = subdiagram_type(a3, NodeSet::of({0, 2}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].type == Component{'A', 1});
  CHECK(r[1].type == Component{'A', 1});
  auto b3 = DynkinDiagram::parse("B3");
  r = subdiagram_type(b3, NodeSet::of({1, 2}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].type == Component{'B', 2});
  CHECK(r[0].embedding == std::vector<int>{1, 2});
  auto d4 = DynkinDiagram::parse("D4");
  CHECK(subdiagram_type(d4, NodeSet::of({0, 2, 3})).size() == 3);
  CHECK(subdiagram_type(d4, NodeSet()).empty());
  auto c4 = DynkinDiagram::parse("C4");
  r = subdiagram_type(c4, NodeSet::of({1, 2, 3}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].type == Component{'C', 3});
  r = subdiagram_type(c4, NodeSet::of({2, 3}));
  REQUIRE(r.size() == 1);
  // C2 is classified as B2, with the long node first
  CHECK(r[0].type == Component{'B', 2});
  CHECK(r[0].embedding == std::vector<int>{3, 2});
}
