#pragma once

// Spherical data (root system, p, Sigma, S^P, weight lattice), the
// reflections s_sigma, their lifts n_sigma to the Weyl group, the little
// Weyl group W_X and the root system R_X = W_X Sigma.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphroots/enumerate.hpp"
#include "sphroots/linalg.hpp"
#include "sphroots/rootsys.hpp"

namespace sphroots {

// Xi_p = Z[1/p]-span of the basis; Xi = Z-span (the "strict" lattice).
// Basis vectors live in the ambient epsilon space.
class Lattice {
 public:
  // `dim` is the ambient dimension; it only matters for an empty basis.
  Lattice(std::vector<Vec> basis, std::int64_t p, std::size_t dim = 0);

  const std::vector<Vec>& basis() const { return basis_; }
  std::int64_t p() const { return p_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return dim_; }

  // coordinates in the basis, if v lies in the rational span
  std::optional<Vec> coords(const Vec& v) const;
  bool in_span(const Vec& v) const { return coords(v).has_value(); }
  bool contains(const Vec& v) const;         // Z[1/p] coordinates
  bool contains_strict(const Vec& v) const;  // integer coordinates

 private:
  std::vector<Vec> basis_;
  std::int64_t p_;
  std::size_t dim_ = 0;
};

enum class LatticeProvenance { UserSupplied, SigmaSpanDefault };

// First violated invariant of a candidate datum, or nullopt when valid.
// Lattice vectors are given in simple-root coordinates; when absent the
// Z-span of Sigma is used.
std::optional<std::string> datum_violation(const RootSystem& system, std::int64_t p, const std::vector<Coeffs>& sigma,
                                           NodeSet sp, const std::optional<std::vector<Vec>>& lattice);

class SphericalDatum {
 public:
  // Validates every invariant eagerly; throws ValidationError.
  SphericalDatum(std::shared_ptr<const RootSystem> system, std::int64_t p, std::vector<Coeffs> sigma, NodeSet sp,
                 std::optional<std::vector<Vec>> lattice = std::nullopt);

  const RootSystem& system() const { return *system_; }
  std::shared_ptr<const RootSystem> system_ptr() const { return system_; }
  std::int64_t p() const { return p_; }
  const std::vector<SphericalRoot>& sigma() const { return sigma_; }
  const std::vector<Vec>& sigma_vectors() const { return sigma_vec_; }
  NodeSet sp() const { return sp_; }
  const Lattice& lattice() const { return lattice_; }
  LatticeProvenance provenance() const { return provenance_; }

 private:
  std::shared_ptr<const RootSystem> system_;
  std::int64_t p_;
  std::vector<SphericalRoot> sigma_;
  std::vector<Vec> sigma_vec_;
  NodeSet sp_;
  Lattice lattice_;
  LatticeProvenance provenance_;
};

// s_sigma on the ambient space: chi - 2 (chi, sigma) / (sigma, sigma) sigma.
Matrix reflection_matrix(const RootSystem& system, const Vec& sigma);

// s_sigma restricted to the lattice span, in lattice-basis coordinates.
Matrix s_sigma(const RootSystem& system, const Vec& sigma, const Lattice& lattice);

// An ambient linear map restricted to the lattice span, in basis
// coordinates; nullopt when it does not preserve the span.
std::optional<Matrix> restrict_to(const Matrix& ambient, const Lattice& lattice);

struct Lift {
  WeylElement element;
  int lemma_case;            // 1: s_alpha, 2: disconnected support, 3: orthogonal decomposition
  std::vector<Vec> roots;    // the root(s) whose reflections make up n_sigma
};

// n_sigma in W restricting to s_sigma on the lattice span; verified by
// matrix comparison before returning. Throws VerificationError.
Lift lift_n_sigma(const SphericalRoot& sigma, const SphericalDatum& datum);
// Same, checked on an explicit list of test vectors instead of a lattice.
Lift lift_n_sigma(const SphericalRoot& sigma, const RootSystem& system, NodeSet sp, const std::vector<Vec>& test_span);

// The largest subspace on which the lift lemma asserts n_sigma = s_sigma:
// common kernel of gamma^vee (gamma in S^P) and, for disconnected support
// a1 + q a2, of a1^vee - q^{-1} a2^vee. Returned as a basis in ambient coordinates.
std::vector<Vec> admissible_span(const SphericalRoot& sigma, const RootSystem& system, NodeSet sp);

struct LittleWeylGroup {
  std::vector<Matrix> elements;            // lattice coordinates; elements[0] = identity
  std::vector<std::vector<int>> words;     // in generator indices, applied right to left
  std::vector<Matrix> generators;          // s_sigma per sigma, lattice coordinates
  std::vector<Lift> lifts;
  std::size_t order() const { return elements.size(); }
};

// Closure of {s_sigma}; refuses to grow beyond |W|.
LittleWeylGroup generate_W_X(const SphericalDatum& datum);

// W_X Sigma as ambient vectors, verified closed under every s_sigma and
// primitive in ZS cap Xi_p. Throws VerificationError.
std::vector<Vec> build_R_X(const SphericalDatum& datum, const LittleWeylGroup& wx);

struct InvarianceVerdict {
  std::string generator;
  bool xi_p;     // Xi_p mapped into itself
  bool strict;   // Xi mapped into itself
};

std::vector<InvarianceVerdict> check_lattice_invariance(const Lattice& lattice,
                                                        const std::vector<Matrix>& ambient_generators,
                                                        const std::vector<std::string>& names = {});

struct Sigma1Entry {
  int alpha;          // node with 2 alpha in Sigma
  Coeffs sigma;       // another element of Sigma
  Rational pairing;   // <sigma, alpha^vee>
  bool even;
  bool nonpositive;
};

struct Sigma1Report {
  std::vector<Sigma1Entry> entries;
  bool parity_clean() const;
  bool sign_clean() const;
};

// Luna's axiom (Sigma1) on a list of spherical roots: for alpha with
// 2 alpha in Sigma, <sigma, alpha^vee> even and nonpositive for the others.
Sigma1Report axiom_sigma1_check(const RootSystem& system, const std::vector<Coeffs>& sigma);
inline Sigma1Report axiom_sigma1_check(const SphericalDatum& d) {
  std::vector<Coeffs> c;
  for (const auto& s : d.sigma()) c.push_back(s.coefficients);
  return axiom_sigma1_check(d.system(), c);
}

}  // namespace sphroots
