#include <doctest.h>

#include <memory>

#include "sphroots/errors.hpp"
#include "sphroots/weylx.hpp"

using namespace sphroots;

namespace {

std::shared_ptr<const RootSystem> sys(const char* t) { return std::make_shared<const RootSystem>(RootSystem::parse(t)); }

}  // namespace

TEST_CASE("s_sigma") {
  auto a2 = sys("A2");
  Lattice full({a2->simple_root(0), a2->simple_root(1)}, 1);
  const Vec a1 = a2->simple_root(0);
  Matrix s = s_sigma(*a2, a1, full);
  CHECK((s * s).is_identity());
  CHECK(s * *full.coords(a1) == *full.coords(scale(-1, a1)));
  CHECK(reflection_matrix(*a2, a1) * a2->simple_root(1) == a2->from_coeffs({1, 1}));
  CHECK_THROWS_AS(s_sigma(*a2, zero_vec(a2->dim()), full), ValidationError);

  auto a3 = sys("A3");
  const Vec sigma = a3->from_coeffs({1, 0, 1});
  const Vec chi = a3->from_coeffs({1, 0, -1});
  CHECK(reflection_matrix(*a3, sigma) * chi == chi);
  CHECK(reflection_matrix(*a3, sigma) * sigma == scale(-1, sigma));
}

TEST_CASE("s_sigma does not depend on the scalar product normalization") {
  auto d = DynkinDiagram::parse("B2xG2");
  RootSystem r1(d), r2(d, {Rational(3), Rational(5, 7)});
  for (const Coeffs& c : std::vector<Coeffs>{{1, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 3, 1}, {1, 1, 1, 1}}) {
    const Vec v = r1.from_coeffs(c);
    if (!r1.to_coeffs(v)) continue;
    // mixed-component vectors are not reflections of a root system, but the
    // component-wise roots must agree
    if (c[0] && c[2]) continue;
    CHECK(reflection_matrix(r1, v) == reflection_matrix(r2, v));
  }
}

TEST_CASE("datum validation") {
  auto a2 = sys("A2");
  CHECK_NOTHROW(SphericalDatum(a2, 2, {{1, 0}, {1, 1}}, NodeSet()));
  CHECK_NOTHROW(SphericalDatum(a2, 1, {{1, 0}, {0, 1}}, NodeSet()));
  CHECK_NOTHROW(SphericalDatum(a2, 1, {}, NodeSet()));
  // not a spherical root
  CHECK_THROWS_AS(SphericalDatum(a2, 1, {{2, 1}}, NodeSet()), ValidationError);
  // 2a1 does not exist for p=2
  CHECK_THROWS_AS(SphericalDatum(a2, 2, {{2, 0}}, NodeSet()), ValidationError);
  // incompatible S^P
  CHECK_THROWS_AS(SphericalDatum(a2, 1, {{1, 0}}, NodeSet::of({1})), ValidationError);
  // parity: <a1 + a2, a1^vee> = 1 is odd while 2a1 is in Sigma
  CHECK_THROWS_AS(SphericalDatum(a2, 3, {{2, 0}, {1, 1}}, NodeSet()), ValidationError);
  // not primitive: a1 itself lies in the lattice
  CHECK_THROWS_AS(SphericalDatum(a2, 3, {{2, 0}}, NodeSet(), std::vector<Vec>{{1, 0}}), ValidationError);
  CHECK_NOTHROW(SphericalDatum(a2, 3, {{2, 0}}, NodeSet(), std::vector<Vec>{{2, 0}}));
  // for p=2, dividing by 2 is allowed in Xi_2, so a sigma containing a1/2 is fine
  CHECK_NOTHROW(SphericalDatum(a2, 2, {{1, 0}}, NodeSet(), std::vector<Vec>{{Rational(1, 2), 0}}));
  // sigma outside the lattice
  CHECK_THROWS_AS(SphericalDatum(a2, 1, {{1, 0}}, NodeSet(), std::vector<Vec>{{0, 1}}), ValidationError);
  // duplicate
  CHECK_THROWS_AS(SphericalDatum(a2, 1, {{1, 0}, {1, 0}}, NodeSet()), ValidationError);
  CHECK_THROWS_AS(SphericalDatum(a2, 4, {{1, 0}}, NodeSet()), ValidationError);

  // disconnected support: a1^vee - q^-1 a3^vee must vanish on the lattice
  auto a3 = sys("A3");
  CHECK_NOTHROW(SphericalDatum(a3, 2, {{1, 0, 2}}, NodeSet()));
  CHECK_THROWS_AS(SphericalDatum(a3, 2, {{1, 0, 2}}, NodeSet(), std::vector<Vec>{{1, 0, 2}, {0, 1, 0}}),
                  ValidationError);
  // S^P coroots must kill the lattice
  CHECK_NOTHROW(SphericalDatum(a3, 1, {{1, 2, 1}}, NodeSet::of({0, 2})));
  CHECK_THROWS_AS(SphericalDatum(a3, 1, {{1, 2, 1}}, NodeSet::of({0, 2}), std::vector<Vec>{{1, 2, 1}, {1, 0, 0}}),
                  ValidationError);
  auto d = SphericalDatum(a3, 1, {{1, 2, 1}}, NodeSet::of({0, 2}));
  CHECK(d.provenance() == LatticeProvenance::SigmaSpanDefault);
}

TEST_CASE("lifts n_sigma") {
  auto a1 = sys("A1");
  SphericalDatum d1(a1, 3, {{2}}, NodeSet());
  auto l1 = lift_n_sigma(d1.sigma()[0], d1);
  CHECK(l1.lemma_case == 1);
  CHECK(l1.element.matrix == a1->simple_reflection(0).matrix);

  auto a3 = sys("A3");
  SphericalDatum d2(a3, 2, {{1, 0, 4}}, NodeSet());
  auto l2 = lift_n_sigma(d2.sigma()[0], d2);
  CHECK(l2.lemma_case == 2);
  CHECK(l2.element.matrix == a3->simple_reflection(0).matrix * a3->simple_reflection(2).matrix);

  SphericalDatum d3(a3, 1, {{1, 2, 1}}, NodeSet::of({0, 2}));
  auto l3 = lift_n_sigma(d3.sigma()[0], d3);
  CHECK(l3.lemma_case == 3);
  CHECK(l3.roots.size() == 2);
  CHECK(l3.element.matrix == a3->reflection(a3->from_coeffs({1, 1, 0})).matrix * a3->reflection(a3->from_coeffs({0, 1, 1})).matrix);
  // the word multiplies out to the matrix
  Matrix m = Matrix::identity(a3->dim());
  for (int i : l3.element.word) m = m * a3->simple_reflection(i).matrix;
  CHECK(m == l3.element.matrix);

  // a lift checked on the whole space fails for case 3: the lemma only holds
  // on the span killed by the S^P coroots
  std::vector<Vec> everything(a3->simple_roots().begin(), a3->simple_roots().end());
  CHECK_THROWS_AS(lift_n_sigma(d3.sigma()[0], *a3, d3.sp(), everything), VerificationError);
  CHECK_NOTHROW(lift_n_sigma(d3.sigma()[0], *a3, d3.sp(), admissible_span(d3.sigma()[0], *a3, d3.sp())));
}

TEST_CASE("little Weyl group and R_X") {
  auto a2 = sys("A2");
  SphericalDatum one(a2, 1, {{1, 0}}, NodeSet());
  auto w1 = generate_W_X(one);
  CHECK(w1.order() == 2);
  auto r1 = build_R_X(one, w1);
  CHECK(r1.size() == 2);

  SphericalDatum schalke(a2, 2, {{1, 0}, {1, 1}}, NodeSet());
  auto ws = generate_W_X(schalke);
  CHECK(ws.order() == 6);
  auto rs = build_R_X(schalke, ws);
  CHECK(rs.size() == 6);
  for (const auto& v : rs) CHECK(a2->is_root(v));
  // every element is a product of lifted n_sigma, restricted
  for (std::size_t k = 0; k < ws.order(); ++k) {
    Matrix m = Matrix::identity(a2->dim());
    for (int g : ws.words[k]) m = m * ws.lifts[g].element.matrix;
    CHECK(*restrict_to(m, schalke.lattice()) == ws.elements[k]);
  }

  SphericalDatum empty(a2, 1, {}, NodeSet());
  CHECK(generate_W_X(empty).order() == 1);

  SphericalDatum top(a2, 1, {{1, 1}}, NodeSet());
  auto rt = build_R_X(top, generate_W_X(top));
  CHECK(rt.size() == 2);
}

TEST_CASE("lattice invariance") {
  // GL(2)-style lattice Z q e1 + Z e2 under the swap s_alpha
  auto a1 = sys("A1");
  const Matrix swap = a1->simple_reflection(0).matrix;
  for (std::int64_t q : {1, 2, 4}) {
    Lattice lat({Vec{q, 0}, Vec{0, 1}}, 2);
    auto v = check_lattice_invariance(lat, {swap}, {"s_a1"});
    REQUIRE(v.size() == 1);
    CHECK(v[0].xi_p);
    CHECK(v[0].strict == (q == 1));
  }
  auto b3 = sys("B3");
  Lattice zs(b3->simple_roots(), 1);
  std::vector<Matrix> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(b3->simple_reflection(i).matrix);
  for (const auto& v : check_lattice_invariance(zs, gens)) {
    CHECK(v.xi_p);
    CHECK(v.strict);
  }
}

TEST_CASE("axiom Sigma1") {
  auto a2 = RootSystem::parse("A2");
  CHECK(axiom_sigma1_check(a2, {{2, 0}}).entries.empty());
  auto clean = axiom_sigma1_check(a2, {{2, 0}, {0, 2}});
  CHECK(clean.entries.size() == 2);
  CHECK(clean.parity_clean());
  CHECK(clean.sign_clean());
  CHECK(clean.entries[0].pairing == -2);
  auto bad = axiom_sigma1_check(a2, {{2, 0}, {1, 1}});
  CHECK_FALSE(bad.parity_clean());
  CHECK_FALSE(bad.sign_clean());
}
