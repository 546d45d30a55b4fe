#pragma once

// Abstract spherical roots of a root system: enumeration from the table,
// membership, compatibility with an S^P set, and the support calculus
// (parabolic/singular support, saturation).

#include <cstdint>
#include <optional>
#include <vector>

#include "sphroots/rootsys.hpp"
#include "sphroots/table.hpp"

namespace sphroots {

struct SphericalRoot {
  Coeffs coefficients;
  NodeSet support;
  std::vector<PatternMatch> matches;

  friend bool operator==(const SphericalRoot& a, const SphericalRoot& b) { return a.coefficients == b.coefficients; }
};

NodeSet support_of(const Coeffs& c);

// "a1 + 2a2 + a3"
std::string format_coeffs(const Coeffs& c);

// Every sigma arising from a table row via a diagram embedding, with
// q <= q_max for the Frobenius family. Sorted by support size, then
// height, then coefficients.
std::vector<SphericalRoot> spherical_roots_of_G(const RootSystem& system, std::int64_t p, std::int64_t q_max);

// Pattern-match a coefficient vector; nullopt if it is not a spherical root.
std::optional<SphericalRoot> classify(const RootSystem& system, const Coeffs& sigma, std::int64_t p,
                                      std::int64_t q_max);

bool is_spherical_root(const Coeffs& sigma, const RootSystem& system, std::int64_t p, std::int64_t q_max);

// sigma reduced: sigma/2 is not itself a spherical root
bool is_reduced(const SphericalRoot& sigma, const RootSystem& system, std::int64_t p, std::int64_t q_max);

bool compatible(const SphericalRoot& sigma, NodeSet sp, const RootSystem& system);

// All S^P subsets compatible with sigma, sorted.
std::vector<NodeSet> compatible_sp_sets(const SphericalRoot& sigma, const RootSystem& system);

// Minimal S^P sets compatible with every root in `roots` at once (one per
// choice of pattern match that works). Any compatible S^P contains one of
// them; empty result means no common S^P exists.
std::vector<NodeSet> common_compatible_sp(const std::vector<const SphericalRoot*>& roots, const RootSystem& system);

struct SupportSplit {
  NodeSet parabolic;
  NodeSet singular;
};

SupportSplit split_support(const Coeffs& sigma, NodeSet sp);

// Every beta in S^P adjacent to the support lies in the support.
bool saturation_check(const Coeffs& sigma, NodeSet sp, const RootSystem& system);

}  // namespace sphroots
