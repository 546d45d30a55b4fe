#pragma once

// Polyhedral cones over Q, the valuation cone of a spherical datum, its
// decomposition into little-Weyl-group chambers, dihedral angles and the
// neighbor test on cone(Sigma).

#include <string>
#include <vector>

#include "sphroots/linalg.hpp"
#include "sphroots/weylx.hpp"

namespace sphroots {

// {v : n . v <= 0 for every normal n}, together with its generators:
// the cone equals lineality + cone(extremal_rays).
struct Cone {
  std::size_t dim = 0;
  std::vector<Vec> facet_normals;
  std::vector<Vec> lineality;      // basis of the largest contained subspace
  std::vector<Vec> extremal_rays;  // primitive, in the complement of the lineality

  std::size_t dimension() const;  // dimension of the cone itself
  bool contains(const Vec& v) const;
  bool interior_contains(const Vec& v) const;  // all inequalities strict
  // dimension of the face cut out by normals[i] = 0
  std::size_t face_dimension(const std::vector<std::size_t>& tight) const;
};

// Double description from inequalities. Redundant normals are allowed.
Cone cone_from_normals(std::vector<Vec> normals, std::size_t dim);
// Inequality description of lineality + cone(generators): the irredundant
// facet normals, primitive and sorted.
std::vector<Vec> facets_of_generated(const std::vector<Vec>& generators, const std::vector<Vec>& lineality,
                                     std::size_t dim);

// Valuation cone in N_Q, with coordinates dual to the lattice basis; the
// facet normals are the sigma in lattice coordinates, in datum order.
// Throws VerificationError naming sigma when a normal is redundant.
Cone valuation_cone(const SphericalDatum& datum);

// Points of N_Q as vectors of the lattice span, identified through the
// invariant form: v <-> x with (b_i, x) = v_i.
Vec dual_to_ambient(const SphericalDatum& datum, const Vec& v);

struct Chamber {
  std::size_t element;            // index into LittleWeylGroup::elements
  Vec interior_point;             // dual coordinates
  std::vector<Vec> walls;         // normals (n . v <= 0), images of the simple walls
  std::vector<Vec> extremal_rays;
};

struct ChamberDecomposition {
  std::size_t total_chambers = 0;   // = |W_X|
  std::vector<Chamber> chambers;    // those whose union is the cone
};

// Throws VerificationError when the cone is not a union of chambers.
ChamberDecomposition chamber_decomposition(const Cone& cone, const SphericalDatum& datum, const LittleWeylGroup& wx);

// Sigma linearly independent with pairwise (sigma, tau) <= 0.
bool is_simple_system(const std::vector<Vec>& sigma, const RootSystem& system);

enum class Angle { Pi6, Pi4, Pi3, Pi2, TwoPi3, ThreePi4, FivePi6 };
std::string to_string(Angle a);  // "pi/6", ... "5pi/6"
bool is_p2_only(Angle a);         // 2pi/3, 3pi/4, 5pi/6

// Internal angle pi - theta, theta the angle between the normals.
// Throws VerificationError for anything outside the seven values.
Angle classify_angle(const Rational& product, const Rational& norm2_a, const Rational& norm2_b);

struct DihedralAngle {
  std::size_t i, j;   // facet indices
  Rational cos2;      // cos^2 of the angle between the normals
  int product_sign;
  Angle angle;
};

// One entry per codimension-2 face. The form on Xi_Q is the restriction of
// the Weyl-invariant form of the root system.
std::vector<DihedralAngle> dihedral_angles(const Cone& cone, const SphericalDatum& datum);

// Whether Q>=0 sigma + Q>=0 tau is a two-dimensional face of cone(Sigma).
// Throws ValidationError when sigma == tau or either is not in Sigma.
bool is_neighbors(const Vec& sigma, const Vec& tau, const std::vector<Vec>& all);

}  // namespace sphroots
